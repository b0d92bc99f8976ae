#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "triality/unitary.hpp"

using namespace triality;
using namespace triality::unitary;
using chars::Domain;
using chars::Scenario;
using chars::ScenarioPtr;
using classify::JDatum;
using classify::ParabolicKind;

namespace {

ScenarioPtr sc_of(const std::string& text) { return Scenario::make(chars::parse_scenario_text(text)); }

JDatum alpha_delta(const ScenarioPtr& sc, Rat s, chars::CharElt chi1, chars::CharElt chi2) {
  (void)sc;
  JDatum d;
  d.parabolic = ParabolicKind::PAlpha;
  d.sigma = JDatum::SigmaKind::Delta;
  d.s = s;
  d.sigma_char = chi1;
  d.f_slot = chi2;
  return d;
}

JDatum beta_delta(const ScenarioPtr& sc, Rat s, chars::CharElt chi1, chars::CharElt chi2) {
  (void)sc;
  JDatum d;
  d.parabolic = ParabolicKind::PBeta;
  d.sigma = JDatum::SigmaKind::Delta;
  d.s = s;
  d.e_slot = chi1;
  d.sigma_char = chi2;
  return d;
}

JDatum alpha_ps(const ScenarioPtr& sc, Rat s, chars::CharElt u1, chars::CharElt chi2) {
  JDatum d;
  d.parabolic = ParabolicKind::PAlpha;
  d.sigma = JDatum::SigmaKind::UnitaryPS;
  d.s = s;
  d.sigma_char = u1;
  d.f_slot = chi2;
  d.sigma_char2 = sc->add(sc->neg(u1), sc->nm(sc->neg(chi2)));
  return d;
}

JDatum beta_ps(const ScenarioPtr& sc, Rat s, chars::CharElt chi1, chars::CharElt u1) {
  JDatum d;
  d.parabolic = ParabolicKind::PBeta;
  d.sigma = JDatum::SigmaKind::UnitaryPS;
  d.s = s;
  d.e_slot = chi1;
  d.sigma_char = u1;
  d.sigma_char2 = sc->add(sc->res(sc->neg(chi1)), sc->neg(u1));
  return d;
}

}  // namespace

TEST_CASE("hermitian criterion examples") {
  auto tr = chars::trivial_scenario();
  // J(s1,s2,chi1,chi2) with both of order 2: Hermitian.
  auto sc = sc_of("atom chi1 domain E order 2\natom chi2 domain F order 2\n");
  JDatum b;
  b.parabolic = ParabolicKind::B;
  b.lam = {Rat(5, 4), Rat(2)};
  b.e_slot = sc->atom("chi1");
  b.f_slot = sc->atom("chi2");
  CHECK(is_hermitian(sc, b).hermitian);
  // ...and fails when an order-3 character appears.
  auto sc3 = sc_of("atom chi2 domain F order 3\n");
  JDatum b3 = b;
  b3.e_slot = sc3->one(Domain::E);
  b3.f_slot = sc3->atom("chi2");
  CHECK(!is_hermitian(sc3, b3).hermitian);

  // J_a(s, I^a(chi1, chi1^-1) x 1): Hermitian for any unitary chi1.
  auto sce = sc_of("atom chi1 domain E order 5\n");
  JDatum d = alpha_ps(sce, Rat(1, 3), sce->atom("chi1"), sce->one(Domain::F));
  d.sigma_char2 = sce->neg(sce->atom("chi1"));
  CHECK(is_hermitian(sce, d).hermitian);
  CHECK(is_hermitian(sce, d).shape == "I^a(chi1,chi1^-1) x 1");

  // J_b(s, chi1 x delta(1)) with chi1 of order 3 (restriction trivial,
  // so the datum is a genuine M_b representation): not Hermitian.
  auto scb = sc_of("atom chi1 domain E order 3\nrel 1*res(chi1) = 0\n");
  JDatum db = beta_delta(scb, Rat(1, 2), scb->atom("chi1"), scb->one(Domain::F));
  CHECK(!is_hermitian(scb, db).hermitian);
  // A datum violating the central-character constraint is rejected.
  auto scb2 = sc_of("atom chi1 domain E order 3\n");
  JDatum db2 = beta_delta(scb2, Rat(1, 2), scb2->atom("chi1"), scb2->one(Domain::F));
  CHECK_THROWS(is_hermitian(scb2, db2));

  // Delta twists: J_a(s, delta(chi1) x 1) Hermitian iff chi1^2 = 1.
  auto sc2 = sc_of("atom chi1 domain E order 2\nrel 2*chi1 -1*nm(res(chi1)) = 0\n");
  (void)sc2;
  JDatum da = alpha_delta(tr, Rat(5, 2), tr->one(Domain::E), tr->one(Domain::F));
  CHECK(is_hermitian(tr, da).hermitian);
}

TEST_CASE("hermitian bullets agree with the w-criterion on natural scenarios") {
  // The mechanical w-tilde test and the printed bullet shapes must give
  // the same verdict on every datum arising from the case database.
  auto db = classify::build_database(true);
  for (const auto& e : db->entries()) {
    for (const auto& c : e.report.constituents) {
      if (!c.datum) continue;
      if (c.datum->parabolic != ParabolicKind::PAlpha &&
          c.datum->parabolic != ParabolicKind::PBeta)
        continue;
      auto h = is_hermitian(e.sc, *c.datum);
      CAPTURE(e.case_id);
      CAPTURE(c.label);
      CHECK(h.shape.find("outside printed bullets") == std::string::npos);
    }
  }
}

TEST_CASE("lemma 3.1 clauses") {
  auto tr = chars::trivial_scenario();
  auto sce = sc_of("atom chi1 domain E order 2\n");
  auto scf = sc_of("atom chi2 domain F order 3\nrel 1*nm(chi2) = 0\n");

  // (ii): s = 1/2 always reduces.
  CHECK(lemma31_reducibility(tr, L31Shape::AlphaSelf, Rat(1, 2), tr->one(Domain::E),
                             tr->one(Domain::F)));
  // (iv): s = 3 with chi2 o N = 1.
  CHECK(lemma31_reducibility(scf, L31Shape::BetaSelf, Rat(3), scf->one(Domain::E),
                             scf->atom("chi2")));
  CHECK(lemma31_reducibility(scf, L31Shape::BetaSelf, Rat(3, 2), scf->one(Domain::E),
                             scf->atom("chi2")));
  CHECK(!lemma31_reducibility(scf, L31Shape::BetaSelf, Rat(2), scf->one(Domain::E),
                              scf->atom("chi2")));
  // (ii): s = 2 with nontrivial restriction: no clause.
  CHECK(!lemma31_reducibility(sce, L31Shape::AlphaSelf, Rat(2), sce->atom("chi1"),
                              sce->one(Domain::F)));
  CHECK(!lemma31_reducibility(sce, L31Shape::AlphaSelf, Rat(1), sce->atom("chi1"),
                              sce->one(Domain::F)));
}

TEST_CASE("lemma 3.1 agrees with the rank-1 machine") {
  // The independent route: reducibility of the underlying principal
  // series through the rank-1 table on the normalized character.
  std::vector<ScenarioPtr> scs = {
      chars::trivial_scenario(),
      sc_of("atom chi1 domain E order 2\n"),
      sc_of("atom chi1 domain E order 2\nrel 1*res(chi1) = 0\n"),
      sc_of("atom chi2 domain F order 2\n"),
      sc_of("atom chi2 domain F order 3\nrel 1*nm(chi2) = 0\n"),
      sc_of("atom chi1 domain E order 2\natom chi2 domain F order 2\n"),
      sc_of("atom chi1 domain E order 2\natom chi2 domain F order 2\n"
            "rel 1*res(chi1) -1*chi2 = 0\n"),
  };
  std::vector<Rat> svals = {Rat(1, 4), Rat(1, 2), Rat(3, 4), Rat(1), Rat(3, 2),
                            Rat(2),    Rat(5, 2), Rat(3),    Rat(7, 2)};
  for (const auto& sc : scs) {
    chars::CharElt a = sc->one(Domain::E), b = sc->one(Domain::F);
    for (const auto& at : sc->spec().atoms) {
      if (at.domain == Domain::E)
        a = sc->atom(at.name);
      else
        b = sc->atom(at.name);
    }
    bool a_quad = sc->is_trivial(sc->mul(2, a));
    bool b_quad = sc->is_trivial(sc->mul(2, b));
    for (const Rat& s : svals) {
      std::vector<std::pair<L31Shape, bool>> shapes = {
          {L31Shape::AlphaPair, a_quad && b_quad},
          {L31Shape::AlphaSelf, true},
          {L31Shape::BetaPair, a_quad && b_quad},
          {L31Shape::BetaSelf, !sc->is_trivial(b)},
      };
      for (auto [shape, ok] : shapes) {
        if (!ok) continue;
        chars::CharElt c1 = a, c2 = b;
        if (shape == L31Shape::AlphaSelf) c2 = sc->one(Domain::F);
        if (shape == L31Shape::BetaSelf) c1 = sc->one(Domain::E);
        bool clause = lemma31_reducibility(sc, shape, s, c1, c2);
        auto chi = l31_character(sc, shape, s, c1, c2);
        auto [dom, w] = chars::dominant_char(sc, chi);
        bool rank1 = classify::rank1_set(sc, dom).size() > 0;
        CAPTURE(static_cast<int>(shape));
        CAPTURE(rat_str(s));
        CHECK(clause == rank1);
      }
    }
  }
}

TEST_CASE("theorem 3.4 clauses") {
  auto tr = chars::trivial_scenario();
  auto one_e = tr->one(Domain::E);
  auto one_f = tr->one(Domain::F);
  // (i): J_a(s, delta(chi1) x 1) unitary iff s <= 1/2; boundary at 1/2.
  auto v1 = thm34_unitarity(tr, alpha_delta(tr, Rat(1, 2), one_e, one_f));
  CHECK(v1.verdict == Verdict::Unitary);
  CHECK(v1.witness.find("boundary") != std::string::npos);
  CHECK(!thm34_unitarity(tr, alpha_delta(tr, Rat(5, 2), one_e, one_f)).is_unitary());
  // (ii): bound 3/2; (9/2 non-unitary).
  CHECK(thm34_unitarity(tr, beta_delta(tr, Rat(3, 2), one_e, one_f)).is_unitary());
  CHECK(!thm34_unitarity(tr, beta_delta(tr, Rat(9, 2), one_e, one_f)).is_unitary());
  CHECK(!thm34_unitarity(tr, beta_delta(tr, Rat(2), one_e, one_f)).is_unitary());
  // (iii): isolated point at s = 1 for chi1|F = 1, chi1 != 1.
  auto sce = sc_of("atom chi1 domain E order 3\nrel 1*res(chi1) = 0\n");
  JDatum d3 = alpha_ps(sce, Rat(1), sce->atom("chi1"), sce->one(Domain::F));
  d3.sigma_char2 = sce->neg(sce->atom("chi1"));
  CHECK(thm34_unitarity(sce, d3).verdict == Verdict::IsolatedUnitary);
  d3.s = Rat(3, 4);
  CHECK(!thm34_unitarity(sce, d3).is_unitary());
  d3.s = Rat(1, 2);
  CHECK(thm34_unitarity(sce, d3).verdict == Verdict::Unitary);
  // (iii) with chi1 = 1 at s = 1: the closure corner, plain unitary.
  JDatum d3t = alpha_ps(tr, Rat(1), one_e, one_f);
  CHECK(thm34_unitarity(tr, d3t).verdict == Verdict::Unitary);
  // (vi): s = 3 isolated when chi2 o N = 1, chi2 != 1.
  auto scf = sc_of("atom chi2 domain F order 3\nrel 1*nm(chi2) = 0\n");
  JDatum d6 = beta_ps(scf, Rat(3), scf->one(Domain::E), scf->atom("chi2"));
  CHECK(thm34_unitarity(scf, d6).verdict == Verdict::IsolatedUnitary);
  d6.s = Rat(2);
  CHECK(!thm34_unitarity(scf, d6).is_unitary());
  d6.s = Rat(3, 2);
  CHECK(thm34_unitarity(scf, d6).verdict == Verdict::Unitary);
}

TEST_CASE("lemma 3.5 lines and theorem 3.6 regions") {
  auto tr = chars::trivial_scenario();
  auto one_e = tr->one(Domain::E);
  auto one_f = tr->one(Domain::F);
  auto lines = lemma35_lines(tr, one_e, one_f);
  CHECK(lines.size() == 6);
  // chi1 = chi2 of order 2: only the two chi1=chi2 families (plus none
  // of the chi=1 ones).
  auto sc = sc_of("atom chi2 domain F order 2\n");
  auto lines2 = lemma35_lines(sc, sc->nm(sc->atom("chi2")), sc->atom("chi2"));
  CHECK(lines2.size() == 2);
  // Distinct quadratic pair: no lines at all.
  auto sc2 = sc_of("atom chi1 domain E order 2\natom chi2 domain F order 2\n");
  CHECK(lemma35_lines(sc2, sc2->atom("chi1"), sc2->atom("chi2")).empty());

  // thm36 spot values.
  CHECK(thm36_unitarity(tr, Rat(3), Rat(5), one_e, one_f).verdict == Verdict::IsolatedUnitary);
  CHECK(!thm36_unitarity(tr, Rat(7, 10), Rat(6, 5), one_e, one_f).is_unitary());  // (i2) region
  CHECK(thm36_unitarity(tr, Rat(3, 5), Rat(1), one_e, one_f).is_unitary());       // s2 <= 1
  CHECK(thm36_unitarity(tr, Rat(9, 10), Rat(8, 5), one_e, one_f).is_unitary());   // (i3) region
  CHECK(!thm36_unitarity(tr, Rat(6, 5), Rat(2), one_e, one_f).is_unitary());      // (i4) region
  CHECK(!thm36_unitarity(tr, Rat(5, 2), Rat(4), one_e, one_f).is_unitary());      // (i5) region
  // (ii)/(iii)/(iv).
  auto scq = sc_of("atom chi2 domain F order 2\n");
  auto e1 = scq->one(Domain::E);
  auto b2 = scq->atom("chi2");
  CHECK(thm36_unitarity(scq, Rat(9, 10), Rat(8, 5), e1, b2).is_unitary());
  CHECK(!thm36_unitarity(scq, Rat(5, 4), Rat(2), e1, b2).is_unitary());
  auto sce = sc_of("atom chi1 domain E order 2\n");
  CHECK(thm36_unitarity(sce, Rat(3, 5), Rat(1), sce->atom("chi1"), sce->one(Domain::F))
            .is_unitary());
  CHECK(!thm36_unitarity(sce, Rat(5, 4), Rat(2), sce->atom("chi1"), sce->one(Domain::F))
             .is_unitary());
  auto a_eq = scq->nm(b2);
  CHECK(thm36_unitarity(scq, Rat(4, 5), Rat(7, 5), a_eq, b2).is_unitary());   // 3s1-s2 <= 1
  CHECK(!thm36_unitarity(scq, Rat(6, 5), Rat(2), a_eq, b2).is_unitary());     // 3s1-s2 > 1
  // Distinct quadratic pair: Hermitian but never unitary in the chamber.
  CHECK(!thm36_unitarity(sc2, Rat(3, 5), Rat(1), sc2->atom("chi1"), sc2->atom("chi2"))
             .is_unitary());
}

TEST_CASE("boundary closure along unitary segments") {
  // If an open family of points is unitary, the endpoint verdicts stay
  // unitary (the <= signs in the clauses).
  auto tr = chars::trivial_scenario();
  auto one_e = tr->one(Domain::E);
  auto one_f = tr->one(Domain::F);
  // Along s2 = 1 inside the chamber, everything is unitary incl. endpoints
  // of the reducibility segment (1/2, 2/3).
  for (const Rat& s1 : {Rat(11, 20), Rat(1, 2) + Rat(1, 100), Rat(2, 3) - Rat(1, 100)}) {
    auto v = thm36_unitarity(tr, s1, Rat(1), one_e, one_f);
    CHECK(v.is_unitary());
  }
  // The closure corner (1,2) of the complementary region: boundary of
  // region (i3); both adjacent open edges are unitary.
  CHECK(thm36_unitarity(tr, Rat(1), Rat(2) - Rat(1, 50), one_e, one_f).is_unitary());
  CHECK(thm36_unitarity(tr, Rat(99, 100), Rat(197, 100), one_e, one_f).is_unitary());
}

TEST_CASE("lemma 3.3 consistency with theorem 3.4 bounds") {
  CHECK(lemma33_unitary(groth::Side::Alpha, Rat(1, 4)));
  CHECK(!lemma33_unitary(groth::Side::Alpha, Rat(3, 4)));
  CHECK(lemma33_unitary(groth::Side::Beta, Rat(5, 4)));
  CHECK(!lemma33_unitary(groth::Side::Beta, Rat(7, 4)));
  // The delta-twist bound of thm34 matches the det-twist bound away
  // from the walls: both die past 1/2 resp. 3/2.
  auto tr = chars::trivial_scenario();
  auto one_e = tr->one(Domain::E);
  auto one_f = tr->one(Domain::F);
  for (const Rat& s : {Rat(1, 4), Rat(2, 5)}) {
    CHECK(lemma33_unitary(groth::Side::Alpha, s) ==
          thm34_unitarity(tr, alpha_delta(tr, s, one_e, one_f)).is_unitary());
    CHECK(lemma33_unitary(groth::Side::Beta, 3 * s) ==
          thm34_unitarity(tr, beta_delta(tr, 3 * s, one_e, one_f)).is_unitary());
  }
  for (const Rat& s : {Rat(3, 4), Rat(2), Rat(7, 2)}) {
    CHECK(!lemma33_unitary(groth::Side::Alpha, s));
    CHECK(!thm34_unitarity(tr, alpha_delta(tr, s, one_e, one_f)).is_unitary());
  }
}

TEST_CASE("region sampling") {
  auto tr = chars::trivial_scenario();
  auto one_e = tr->one(Domain::E);
  auto one_f = tr->one(Domain::F);
  // Degenerate 2x2 grid: 4 verdicts, no crash.
  Region tiny = region_sample(tr, one_e, one_f, 0, 4, 0, 6, 2);
  CHECK(tiny.nodes.size() == 4);
  // A grid hitting (3,5) exactly: the node is isolated-unitary.
  Region g = region_sample(tr, one_e, one_f, 0, 4, 0, 6, 5);  // steps 1, 3/2
  CHECK(g.nodes.size() == 25);
  bool saw_isolated_overlay = !g.isolated.empty();
  CHECK(saw_isolated_overlay);
  CHECK(g.isolated[0].s1 == 3);
  CHECK(g.isolated[0].s2 == 5);
  // All chamber nodes with s2 <= 1 are unitary.
  Region h = region_sample(tr, one_e, one_f, 0, 2, 0, 2, 21);
  for (const auto& node : h.nodes)
    if (node.in_chamber && node.s2 <= 1) CHECK(node.v.is_unitary());
  // Determinism.
  Region h2 = region_sample(tr, one_e, one_f, 0, 2, 0, 2, 21);
  CHECK(region_csv(tr, h) == region_csv(tr, h2));
  CHECK(region_svg(tr, h) == region_svg(tr, h2));
  // CSV row count: header + n^2.
  std::string csv = region_csv(tr, tiny);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
}

TEST_CASE("corollary 3.8: aubert partners share unitarity across the database") {
  auto db = classify::build_database(true);
  auto bad = aubert_unitarity_mismatches(*db);
  for (const auto& m : bad) MESSAGE(m);
  CHECK(bad.empty());
}

TEST_CASE("thm36 verdict constant on components cut by the lines") {
  // Sample several interior points per component of the trivial-character
  // chamber window and check constancy (coarse version of criterion 7).
  auto tr = chars::trivial_scenario();
  auto one_e = tr->one(Domain::E);
  auto one_f = tr->one(Domain::F);
  auto v = [&](Rat s1, Rat s2) { return thm36_unitarity(tr, s1, s2, one_e, one_f).is_unitary(); };
  // Bottom triangle s2 < 1.
  CHECK(v(Rat(3, 10), Rat(1, 2)) == v(Rat(1, 2), Rat(9, 10)));
  // (i2) region: between the walls, left of 3s1-s2=1, above s2=1.
  CHECK(v(Rat(7, 10), Rat(6, 5)) == v(Rat(4, 5), Rat(3, 2)));
  // (i3) complementary region.
  CHECK(v(Rat(9, 10), Rat(8, 5)) == v(Rat(19, 20), Rat(17, 10)));
  // Far region beyond all lines.
  CHECK(v(Rat(5, 2), Rat(4)) == v(Rat(3), Rat(49, 10)));
}
