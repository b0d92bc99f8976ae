#include "triality/checks.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "triality/tables.hpp"
#include "triality/unitary.hpp"
#include "triality/weil.hpp"

namespace triality::checks {

using chars::Domain;
using chars::ScenarioPtr;
using chars::TorusChar;
using groth::Calculus;
using groth::Elt;
using groth::Side;

namespace {

struct Runner {
  Summary sum;
  void check(const std::string& name, bool ok) {
    (ok ? sum.passed : sum.failed)++;
    sum.lines.push_back(std::string(ok ? "ok:   " : "FAIL: ") + name);
  }
  template <typename F>
  void guard(const std::string& name, F&& f) {
    try {
      check(name, f());
    } catch (const std::exception& e) {
      check(name + " (exception: " + e.what() + ")", false);
    }
  }
};

ScenarioPtr sc_of(const std::string& text) {
  return chars::Scenario::make(chars::parse_scenario_text(text));
}

}  // namespace

Summary run_all(unsigned seed) {
  Runner r;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-9, 9);
  auto tr = chars::trivial_scenario();

  r.guard("weyl group axioms and canonical words", [&] {
    const auto& all = rootdata::Weyl::all();
    if (all.size() != 12) return false;
    std::set<std::string> words;
    for (const auto& w : all) words.insert(w.word());
    if (words.size() != 12) return false;
    for (const auto& x : all)
      for (const auto& y : all) {
        rootdata::Weyl z = x * y;
        (void)z;
      }
    return (rootdata::Weyl::alpha() * rootdata::Weyl::alpha()) == rootdata::Weyl::identity();
  });

  r.guard("orbit conservation (six +- pairs) on random points", [&] {
    for (int t = 0; t < 300; ++t) {
      Rat s1(d(rng), 2), s2(d(rng), 3);
      auto orb = rootdata::orbit_multiset({s1, s2});
      std::vector<rootdata::Lambda> expect;
      auto pm = [&](Rat a, Rat b) {
        expect.push_back({a, b});
        expect.push_back({-a, -b});
      };
      pm(s1, s2);
      pm(s1 - s2, -s2);
      pm(2 * s1 - s2, 3 * s1 - s2);
      pm(2 * s1 - s2, 3 * s1 - 2 * s2);
      pm(s1 - s2, 3 * s1 - 2 * s2);
      pm(s1, 3 * s1 - s2);
      std::sort(expect.begin(), expect.end());
      if (orb != expect) return false;
    }
    return true;
  });

  r.guard("character action axioms and res o nm = 3", [&] {
    auto sc = sc_of("atom chi1 domain E order 6\natom chi2 domain F order 4\n");
    TorusChar chi = chars::make_torus_char(sc, 1, 2, sc->atom("chi1"), sc->atom("chi2"));
    for (const auto& u : rootdata::Weyl::all())
      for (const auto& v : rootdata::Weyl::all())
        if (!(chars::weyl_act(sc, u * v, chi) ==
              chars::weyl_act(sc, u, chars::weyl_act(sc, v, chi))))
          return false;
    return sc->equal(sc->res(sc->nm(sc->atom("chi2"))), sc->mul(3, sc->atom("chi2")));
  });

  r.guard("orbit-stabilizer on random characters", [&] {
    auto sc = sc_of("atom chi1 domain E order 2\natom chi2 domain F order 2\n");
    for (int t = 0; t < 100; ++t) {
      TorusChar chi = chars::make_torus_char(sc, Rat(d(rng), 2), Rat(d(rng), 2), sc->atom("chi1"),
                                             sc->atom("chi2"));
      auto orb = chars::char_orbit(sc, chi);
      std::set<TorusChar> dist(orb.begin(), orb.end());
      if (dist.size() * chars::stabilizer(sc, chi).size() != 12) return false;
    }
    return true;
  });

  r.guard("geometric lemma displays of case (1,2,1,1)", [&] {
    Calculus c(tr);
    auto t_elt = [&](long a, long b, int k) {
      return c.t_elt(chars::unramified(tr, a, b)) * Int(k);
    };
    Elt st11 = c.m_elt(c.st_m(Side::Alpha, chars::unramified(tr, 1, 1)));
    Elt got = c.r0(c.jacquet_of_induced(Side::Beta, Side::Alpha, st11));
    Elt want = t_elt(1, 1, 2) + t_elt(1, 2, 2) + t_elt(0, 1, 1) + t_elt(0, -1, 1);
    if (!(got == want)) return false;
    Elt tv11 = c.m_elt(c.triv_m(Side::Beta, chars::unramified(tr, 1, 1)));
    got = c.r0(c.jacquet_of_induced(Side::Beta, Side::Beta, tv11));
    want = t_elt(1, 1, 1) + t_elt(-1, -2, 2) + t_elt(-1, -1, 1) + t_elt(0, 1, 1) + t_elt(0, -1, 1);
    return got == want;
  });

  r.guard("aubert involution on random principal series", [&] {
    Calculus c(tr);
    for (int t = 0; t < 200; ++t) {
      TorusChar chi = chars::unramified(tr, Rat(d(rng), 2), Rat(d(rng), 2));
      Elt ps = c.ps_class(chi);
      if (!(c.aubert(ps) == ps)) return false;
    }
    return true;
  });

  r.guard("aubert commutation identities on random levi inputs", [&] {
    Calculus c(tr);
    int done = 0;
    while (done < 40) {
      TorusChar chi = chars::unramified(tr, Rat(d(rng)), Rat(d(rng)));
      for (Side s : {Side::Alpha, Side::Beta}) {
        if (!c.aubert_identities_check(s, c.m_elt(c.ps_m(s, chi)))) return false;
        if (c.st_defined(s, chi) && !c.aubert_identities_check(s, c.m_elt(c.st_m(s, chi))))
          return false;
      }
      ++done;
    }
    return true;
  });

  r.guard("database conservation, casselman flags, partner symmetry", [&] {
    auto db = classify::build_database(true);
    for (const auto& e : db->entries()) {
      Calculus c(e.sc);
      Elt sum{groth::Level::T, {}};
      bool all_known = true;
      for (const auto& k : e.report.constituents) {
        if (!k.jacquet_known) {
          all_known = false;
          continue;
        }
        sum = sum + k.jacquet * k.mult;
        if (k.role == "Langlands quotient" && k.temp != classify::Temperedness::NonTempered)
          return false;
      }
      if (all_known && !(sum == c.r0_of_full_ps(e.report.normalized))) return false;
      for (std::size_t i = 0; i < e.report.constituents.size(); ++i) {
        int p = e.report.constituents[i].aubert_partner;
        if (p >= 0 &&
            e.report.constituents[static_cast<std::size_t>(p)].aubert_partner !=
                static_cast<int>(i))
          return false;
      }
    }
    return true;
  });

  r.guard("aubert maps 1_G to St_G through the database", [&] {
    Calculus c(tr);
    classify::Report rep = classify::classify(tr, chars::unramified(tr, 3, 5));
    auto db = std::make_shared<classify::Database>();
    std::string id = db->add(c, rep);
    classify::ScopedDatabase view(db, tr);
    int one = -1, st = -1;
    for (std::size_t i = 0; i < rep.constituents.size(); ++i) {
      if (rep.constituents[i].label == "1_G") one = static_cast<int>(i);
      if (rep.constituents[i].label == "St_G") st = static_cast<int>(i);
    }
    return c.aubert(c.constituent(id, one), &view) == c.constituent(id, st);
  });

  r.guard("lemma 3.1 clauses match the rank-1 machine", [&] {
    auto scf = sc_of("atom chi2 domain F order 3\nrel 1*nm(chi2) = 0\n");
    auto sce = sc_of("atom chi1 domain E order 2\n");
    std::vector<std::pair<ScenarioPtr, unitary::L31Shape>> shapes = {
        {tr, unitary::L31Shape::AlphaSelf},
        {sce, unitary::L31Shape::AlphaSelf},
        {scf, unitary::L31Shape::BetaSelf},
    };
    std::vector<Rat> svals = {Rat(1, 2), Rat(1), Rat(3, 2), Rat(2), Rat(5, 2), Rat(3)};
    for (auto& [sc, shape] : shapes) {
      chars::CharElt a = sc->one(Domain::E), b = sc->one(Domain::F);
      for (const auto& at : sc->spec().atoms)
        (at.domain == Domain::E ? a : b) = sc->atom(at.name);
      for (const Rat& s : svals) {
        chars::CharElt c1 = shape == unitary::L31Shape::BetaSelf ? sc->one(Domain::E) : a;
        chars::CharElt c2 = shape == unitary::L31Shape::AlphaSelf ? sc->one(Domain::F) : b;
        bool clause = unitary::lemma31_reducibility(sc, shape, s, c1, c2);
        auto chi = unitary::l31_character(sc, shape, s, c1, c2);
        auto [dom, w] = chars::dominant_char(sc, chi);
        if (clause != (classify::rank1_set(sc, dom).size() > 0)) return false;
      }
    }
    return true;
  });

  r.guard("corollary 3.8: partners share unitarity", [&] {
    auto db = classify::build_database(true);
    return unitary::aubert_unitarity_mismatches(*db).empty();
  });

  r.guard("special exponents contain (3,5), (1,2), (2,3) and are finite", [&] {
    auto se = classify::special_exponents();
    auto has = [&](long a, long b) {
      return std::find(se.principal_series.begin(), se.principal_series.end(),
                       rootdata::Lambda{Rat(a), Rat(b)}) != se.principal_series.end();
    };
    return has(3, 5) && has(1, 2) && has(2, 3) && se.principal_series.size() == 3;
  });

  r.guard("theorem 3.6 region structure", [&] {
    auto one_e = tr->one(Domain::E);
    auto one_f = tr->one(Domain::F);
    auto u = [&](Rat s1, Rat s2) {
      return unitary::thm36_unitarity(tr, s1, s2, one_e, one_f).is_unitary();
    };
    if (!u(Rat(3, 5), Rat(1))) return false;
    if (u(Rat(7, 10), Rat(6, 5))) return false;
    if (!u(Rat(9, 10), Rat(8, 5))) return false;
    return unitary::thm36_unitarity(tr, Rat(3), Rat(5), one_e, one_f).verdict ==
           unitary::Verdict::IsolatedUnitary;
  });

  r.guard("tables regenerate deterministically with expected row counts", [&] {
    std::vector<int> want = {6, 8, 6, 5, 5};
    for (int which = 1; which <= 5; ++which) {
      std::string a = tables::emit(which, "csv", true);
      std::string b = tables::emit(which, "csv", true);
      if (a != b) return false;
      long rows = std::count(a.begin(), a.end(), '\n') - 1;
      if (rows != want[static_cast<std::size_t>(which - 1)]) return false;
    }
    std::string ng4 = tables::emit(4, "csv", false);
    std::string ng5 = tables::emit(5, "csv", false);
    return std::count(ng4.begin(), ng4.end(), '\n') == 5 &&
           std::count(ng5.begin(), ng5.end(), '\n') == 5;
  });

  r.guard("weil oracle: prop 3.14 on d8 and q8", [&] {
    return weil::prop314_verify(weil::builtin_model("d8")).ok &&
           weil::prop314_verify(weil::builtin_model("q8")).ok;
  });

  r.guard("weil oracle: lemma 3.15 / thm 3.16 on f42", [&] {
    return weil::lemma315_check(weil::builtin_model("f42")).ok;
  });

  r.guard("weil oracle: thm 3.17 / remark 5 on d12c13", [&] {
    return weil::thm317_check(weil::builtin_model("d12c13")).ok;
  });

  return r.sum;
}

}  // namespace triality::checks
