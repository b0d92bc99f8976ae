#include "triality/classify.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace triality::classify {

using chars::CharElt;
using chars::Domain;
using chars::weyl_act;
using groth::BasisObj;
using groth::Calculus;
using groth::Elt;
using groth::MKind;
using rootdata::ConePosition;
using rootdata::Coroot;
using rootdata::Lambda;
using rootdata::Weyl;

std::string temperedness_str(Temperedness t) {
  switch (t) {
    case Temperedness::SquareIntegrable: return "square-integrable";
    case Temperedness::Tempered: return "tempered";
    case Temperedness::NonTempered: return "non-tempered";
  }
  return "?";
}

Temperedness temperedness(const Elt& exponents) {
  if (exponents.level != groth::Level::T)
    throw std::runtime_error("temperedness: level-T element expected");
  bool all_strict = true, all_nonneg = true;
  for (const auto& [b, k] : exponents.c) {
    if (k < 0) throw std::runtime_error("temperedness: virtual (signed) input rejected");
    switch (rootdata::cone_position(b.chi.lam)) {
      case ConePosition::StrictlyPositive: break;
      case ConePosition::BoundaryNonnegative: all_strict = false; break;
      case ConePosition::Outside: all_strict = false; all_nonneg = false; break;
    }
  }
  if (all_strict) return Temperedness::SquareIntegrable;
  if (all_nonneg) return Temperedness::Tempered;
  return Temperedness::NonTempered;
}

// -- rank 1 reducibility -----------------------------------------------------

bool ReducibilitySet::contains(Coroot c) const {
  for (const auto& e : entries)
    if (e.coroot == c) return true;
  return false;
}

namespace {

// The discrete-character condition of each rank-1 row.
bool coroot_char_condition(const ScenarioPtr& sc, Coroot c, const TorusChar& chi) {
  switch (c) {
    case Coroot::Alpha:  // chi1^2 = chi2 o N
      return sc->equal(sc->mul(2, chi.a), sc->nm(chi.b));
    case Coroot::Beta:  // chi1|F = chi2^2
      return sc->equal(sc->res(chi.a), sc->mul(2, chi.b));
    case Coroot::AlphaBeta:  // chi1 = chi2 o N
      return sc->equal(chi.a, sc->nm(chi.b));
    case Coroot::TwoAlphaBeta:  // chi1 = 1
      return sc->is_trivial(chi.a);
    case Coroot::ThreeAlphaBeta:  // chi1|F = chi2
      return sc->equal(sc->res(chi.a), chi.b);
    case Coroot::ThreeAlphaTwoBeta:  // chi2 = 1
      return sc->is_trivial(chi.b);
  }
  return false;
}

std::string coroot_condition_str(Coroot c) {
  switch (c) {
    case Coroot::Alpha: return "2s1-s2=1 & chi1^2=chi2oN";
    case Coroot::Beta: return "-3s1+2s2=1 & chi1|F=chi2^2";
    case Coroot::AlphaBeta: return "-s1+s2=1 & chi1=chi2oN";
    case Coroot::TwoAlphaBeta: return "s1=1 & chi1=1";
    case Coroot::ThreeAlphaBeta: return "3s1-s2=1 & chi1|F=chi2";
    case Coroot::ThreeAlphaTwoBeta: return "s2=1 & chi2=1";
  }
  return "";
}

}  // namespace

ReducibilitySet rank1_set(const ScenarioPtr& sc, const TorusChar& chi) {
  if (!rootdata::is_dominant(chi.lam))
    throw std::runtime_error("rank1_set: dominant (normalized) character expected");
  ReducibilitySet out;
  for (Coroot c : rootdata::kCoroots) {
    if (rootdata::pairing(chi.lam, c) != 1) continue;
    if (!coroot_char_condition(sc, c, chi)) continue;
    out.entries.push_back({c, coroot_condition_str(c)});
  }
  return out;
}

bool gps_reducibility(const ScenarioPtr& sc, Side side, const Rat& s, const CharElt& chi1,
                      const CharElt& chi2) {
  Rat as = s < 0 ? -s : s;
  bool a1 = sc->is_trivial(chi1), b1 = sc->is_trivial(chi2);
  if (side == Side::Alpha) {
    // I_a(s, delta(chi1) (x) chi2)
    if (as == Rat(1, 2) && sc->equal(chi1, sc->norm_twist(chi1)) && b1) return true;
    if (as == Rat(3, 2) && a1 && !b1 && sc->is_trivial(sc->nm(chi2))) return true;
    if (as == Rat(5, 2) && a1 && b1) return true;
    return false;
  }
  // I_b(s, chi1 (x) delta(chi2))
  if (as == Rat(3, 2) && sc->is_trivial(sc->res(chi1)) && b1) return true;
  if (as == Rat(9, 2) && a1 && b1) return true;
  return false;
}

// -- Langlands data ----------------------------------------------------------

JDatum langlands_datum(const ScenarioPtr& sc, const TorusChar& chi_in) {
  auto [chi, w] = chars::dominant_char(sc, chi_in);
  (void)w;
  JDatum d;
  Rat pa = rootdata::pairing(chi.lam, Coroot::Alpha);
  Rat pb = rootdata::pairing(chi.lam, Coroot::Beta);
  if (pa > 0 && pb > 0) {
    d.parabolic = ParabolicKind::B;
    d.lam = chi.lam;
    d.e_slot = chi.a;
    d.f_slot = chi.b;
    return d;
  }
  if (chi.lam.s1 == 0 && chi.lam.s2 == 0) {
    d.parabolic = ParabolicKind::G;
    d.e_slot = chi.a;
    d.f_slot = chi.b;
    return d;
  }
  if (pa == 0) {
    // On the alpha wall: J_a(s, I^a(chi1, chi1^-1 chi2oN) (x) chi2^-1).
    d.parabolic = ParabolicKind::PAlpha;
    d.sigma = JDatum::SigmaKind::UnitaryPS;
    d.s = chi.lam.s2 / 2;
    d.sigma_char = chi.a;
    d.sigma_char2 = sc->add(sc->neg(chi.a), sc->nm(chi.b));
    d.f_slot = sc->neg(chi.b);
    return d;
  }
  // On the beta wall: J_b(s, chi1^-1 (x) I^b(chi2, chi1|F chi2^-1)).
  d.parabolic = ParabolicKind::PBeta;
  d.sigma = JDatum::SigmaKind::UnitaryPS;
  d.s = Rat(3) * chi.lam.s1 / 2;
  d.sigma_char = chi.b;
  d.sigma_char2 = sc->add(sc->res(chi.a), sc->neg(chi.b));
  d.e_slot = sc->neg(chi.a);
  return d;
}

JDatum twist_datum(const ScenarioPtr& sc, Side side, MKind kind, const TorusChar& chi_in) {
  TorusChar chi = chi_in;
  // Normalize along w-tilde so the twist exponent is nonnegative; the
  // twist kind is preserved (w-tilde fixes the side's coroot).
  if ((side == Side::Alpha && chi.lam.s2 < 0) || (side == Side::Beta && chi.lam.s1 < 0))
    chi = weyl_act(sc, groth::w_tilde(side), chi);
  JDatum d;
  d.sigma = kind == MKind::St ? JDatum::SigmaKind::Delta : JDatum::SigmaKind::UnitaryPS;
  if (side == Side::Alpha) {
    d.parabolic = ParabolicKind::PAlpha;
    d.s = chi.lam.s2 / 2;
    d.sigma_char = chi.a;
    d.f_slot = sc->neg(chi.b);
  } else {
    d.parabolic = ParabolicKind::PBeta;
    d.s = Rat(3) * chi.lam.s1 / 2;
    d.sigma_char = chi.b;
    d.e_slot = sc->neg(chi.a);
  }
  if (kind == MKind::Triv) d.sigma = JDatum::SigmaKind::None;  // chi o det twist
  return d;
}

std::string jdatum_str(const ScenarioPtr& sc, const JDatum& d) {
  std::ostringstream os;
  auto sig = [&](Domain dom) {
    std::ostringstream s;
    if (d.sigma == JDatum::SigmaKind::Delta) {
      s << "delta(" << sc->describe(d.sigma_char) << ")";
    } else if (d.sigma == JDatum::SigmaKind::UnitaryPS) {
      s << "I^" << (dom == Domain::E ? "a" : "b") << "(" << sc->describe(d.sigma_char) << ","
        << sc->describe(d.sigma_char2) << ")";
    } else {
      s << sc->describe(d.sigma_char) << "odet";
    }
    return s.str();
  };
  switch (d.parabolic) {
    case ParabolicKind::B:
      os << "J(" << rat_str(d.lam.s1) << "," << rat_str(d.lam.s2) << ","
         << sc->describe(d.e_slot) << "," << sc->describe(d.f_slot) << ")";
      break;
    case ParabolicKind::PAlpha:
      os << "J_a(" << rat_str(d.s) << ", " << sig(Domain::E) << " x " << sc->describe(d.f_slot)
         << ")";
      break;
    case ParabolicKind::PBeta:
      os << "J_b(" << rat_str(d.s) << ", " << sc->describe(d.e_slot) << " x " << sig(Domain::F)
         << ")";
      break;
    case ParabolicKind::G:
      os << "J_G(tempered)";
      break;
  }
  return os.str();
}

// -- multiset helpers on level-T elements -------------------------------------

namespace {

bool elt_nonneg(const Elt& e) {
  for (const auto& [b, k] : e.c)
    if (k < 0) return false;
  return true;
}

Elt elt_intersect(const Elt& x, const Elt& y) {
  Elt out{x.level, {}};
  for (const auto& [b, k] : x.c) {
    auto it = y.c.find(b);
    if (it == y.c.end()) continue;
    out.add(b, std::min(k, it->second));
  }
  return out;
}

}  // namespace

groth::Elt lift_to_m(const Calculus& calc, Side side, const Elt& t) {
  if (!elt_nonneg(t)) throw std::runtime_error("lift_to_m: signed input");
  const auto& sc = calc.scenario();
  std::map<TorusChar, Int> count;
  for (const auto& [b, k] : t.c) count[b.chi] = k;
  Elt out{groth::m_level(side), {}};
  for (auto& [chi, k] : count) {
    while (k > 0) {
      TorusChar other = weyl_act(sc, groth::w_simple(side), chi);
      if (other == chi) {
        if (k % 2 != 0) throw std::runtime_error("lift_to_m: odd fixed-point multiplicity");
        out.add(calc.ps_m(side, chi), k / 2);
        k = 0;
      } else if (count.count(other) && count[other] > 0) {
        Int pairs = std::min(k, count[other]);
        out.add(calc.ps_m(side, chi), pairs);
        count[other] -= pairs;
        k -= pairs;
      } else if (calc.st_defined(side, chi)) {
        out.add(calc.st_m(side, chi), k);
        k = 0;
      } else if (calc.triv_defined(side, chi)) {
        out.add(calc.triv_m(side, chi), k);
        k = 0;
      } else {
        throw std::runtime_error("lift_to_m: term does not package into M-level classes");
      }
    }
  }
  if (!(calc.r0(out) == t)) throw std::runtime_error("lift_to_m: package check failed");
  return out;
}

// -- classification ----------------------------------------------------------

namespace {

struct Ctx {
  ScenarioPtr sc;
  Calculus calc;
  TorusChar chi;     // normalized
  Elt orbit;         // r0 of the full principal series
  ReducibilitySet rset;

  explicit Ctx(const ScenarioPtr& s, const TorusChar& c)
      : sc(s), calc(s), chi(c), orbit(calc.r0_of_full_ps(c)), rset(rank1_set(s, c)) {}
};

Elt std_r0(const Ctx& cx, Side side, MKind kind, const TorusChar& pt) {
  Elt sigma = cx.calc.m_elt(kind == MKind::St ? cx.calc.st_m(side, pt) : cx.calc.triv_m(side, pt));
  return cx.calc.r0(cx.calc.jacquet_of_induced(side, side, sigma));
}

// Wall points of the orbit: canonical representatives (one per
// StdModule class) where the side's delta twist exists.
std::vector<TorusChar> wall_points(const Ctx& cx, Side side) {
  std::vector<TorusChar> reps;
  for (const auto& w : Weyl::all()) {
    TorusChar mu = weyl_act(cx.sc, w, cx.chi);
    if (!cx.calc.st_defined(side, mu)) continue;
    TorusChar can = std::min(mu, weyl_act(cx.sc, groth::w_tilde(side), mu));
    if (std::find(reps.begin(), reps.end(), can) == reps.end()) reps.push_back(can);
  }
  return reps;
}

Constituent make_constituent(const Ctx& cx, std::string label, std::string role, Elt jac,
                             Int mult = 1) {
  (void)cx;
  Constituent c;
  c.label = std::move(label);
  c.role = std::move(role);
  c.mult = std::move(mult);
  c.jacquet = std::move(jac);
  c.temp = temperedness(c.jacquet);
  return c;
}

// w_0 mirror of a level-T element (negate exponents, invert characters).
Elt w0_mirror(const Ctx& cx, const Elt& t) {
  Elt out{groth::Level::T, {}};
  for (const auto& [b, k] : t.c) {
    BasisObj nb = b;
    nb.chi = weyl_act(cx.sc, Weyl::longest(), b.chi);
    out.add(nb, k);
  }
  return out;
}

void assign_aubert_partners(const Ctx& cx, std::vector<Constituent>& cons) {
  for (std::size_t i = 0; i < cons.size(); ++i) {
    if (!cons[i].jacquet_known) continue;
    Elt target = w0_mirror(cx, cons[i].jacquet);
    for (std::size_t j = 0; j < cons.size(); ++j) {
      if (cons[j].jacquet_known && cons[j].jacquet == target) {
        cons[i].aubert_partner = static_cast<int>(j);
        break;
      }
    }
  }
}

void finish_report(const Ctx& cx, Report& rep) {
  rep.length = 0;
  rep.max_mult = 1;
  Elt sum{groth::Level::T, {}};
  bool all_known = true;
  for (const auto& c : rep.constituents) {
    rep.length += c.mult;
    rep.max_mult = std::max(rep.max_mult, c.mult);
    if (c.jacquet_known)
      sum = sum + c.jacquet * c.mult;
    else
      all_known = false;
  }
  if (all_known && !(sum == cx.orbit))
    throw std::runtime_error("classify: Jacquet conservation failed for " + rep.family);
  assign_aubert_partners(cx, rep.constituents);
}

std::string twist_label(const Ctx& cx, Side side, MKind kind, const TorusChar& pt,
                        bool as_standard_module) {
  JDatum d = twist_datum(cx.sc, side, kind, pt);
  std::string s = jdatum_str(cx.sc, d);
  if (as_standard_module && !s.empty() && s[0] == 'J') s = "I" + s.substr(1);
  return s;
}

// Generic one-wall case: length 2, multiplicity 1; the delta-twist
// standard module embeds and the Langlands quotient is the rest.
bool build_one_wall(const Ctx& cx, Report& rep, const std::string& family) {
  std::vector<std::pair<Side, TorusChar>> walls;
  for (Side s : {Side::Alpha, Side::Beta})
    for (const auto& pt : wall_points(cx, s)) walls.emplace_back(s, pt);
  if (walls.size() != 1) return false;
  auto [side, pt] = walls.front();
  Elt sub = std_r0(cx, side, MKind::St, pt);
  Elt lq = cx.orbit - sub;
  if (!elt_nonneg(lq)) return false;
  rep.family = family;
  Constituent c1 =
      make_constituent(cx, twist_label(cx, side, MKind::St, pt, true), "subrepresentation", sub);
  c1.datum = twist_datum(cx.sc, side, MKind::St, pt);
  JDatum lqd = langlands_datum(cx.sc, cx.chi);
  Constituent c2 = make_constituent(cx, jdatum_str(cx.sc, lqd), "Langlands quotient", lq);
  c2.datum = lqd;
  rep.constituents = {std::move(c1), std::move(c2)};
  finish_report(cx, rep);
  return true;
}

// Intersection pattern of two standard modules: pi = A & B embeds twice,
// the two middle quotients are A - pi and B - pi, the Langlands quotient
// is the rest (inclusion-exclusion).
void build_two_modules(const Ctx& cx, Report& rep, Side sideA, const TorusChar& ptA,
                       const std::string& labelA, Side sideB, const TorusChar& ptB,
                       const std::string& labelB, const std::string& pi_label,
                       bool mark_reconstructed, const std::string& printed_note) {
  Elt A = std_r0(cx, sideA, MKind::St, ptA);
  Elt B = std_r0(cx, sideB, MKind::St, ptB);
  Elt pi = elt_intersect(A, B);
  Elt midA = A - pi;
  Elt midB = B - pi;
  Elt lq = cx.orbit - A - B + pi;
  if (!elt_nonneg(pi) || !elt_nonneg(midA) || !elt_nonneg(midB) || !elt_nonneg(lq) || pi.zero())
    throw std::runtime_error("classify: two-module pattern failed for " + rep.family);
  Constituent c0 = make_constituent(cx, pi_label, "subrepresentation", pi);
  Constituent c1 = make_constituent(cx, labelA, "subquotient", midA);
  c1.datum = twist_datum(cx.sc, sideA, MKind::St, ptA);
  Constituent c2 = make_constituent(cx, labelB, "subquotient", midB);
  c2.datum = twist_datum(cx.sc, sideB, MKind::St, ptB);
  JDatum lqd = langlands_datum(cx.sc, cx.chi);
  Constituent c3 = make_constituent(cx, jdatum_str(cx.sc, lqd), "Langlands quotient", lq);
  c3.datum = lqd;
  if (mark_reconstructed) {
    c2.reconstructed = true;
    c3.reconstructed = true;
    c2.printed_note = printed_note;
    c3.printed_note = printed_note;
  }
  rep.constituents = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
  finish_report(cx, rep);
}

bool is_lambda(const TorusChar& chi, long n1, long d1, long n2, long d2) {
  return chi.lam.s1 == Rat(n1, d1) && chi.lam.s2 == Rat(n2, d2);
}

}  // namespace

Report classify(const ScenarioPtr& sc, const TorusChar& chi_in, KeysReading reading) {
  Report rep;
  rep.sc = sc;
  rep.input = chi_in;
  auto [chi, w] = chars::dominant_char(sc, chi_in);
  rep.normalized = chi;
  rep.normalizer = w;
  rep.singular = chars::singular_class(sc, chi);

  Ctx cx(sc, chi);
  rep.rset = cx.rset;

  const bool a1 = sc->is_trivial(chi.a), b1 = sc->is_trivial(chi.b);
  const bool a_sq = sc->is_trivial(sc->mul(2, chi.a));
  const bool b_sq = sc->is_trivial(sc->mul(2, chi.b));
  const bool nm_b_1 = sc->is_trivial(sc->nm(chi.b));
  const bool lam_zero = chi.lam.s1 == 0 && chi.lam.s2 == 0;

  // (3,5,1,1): both walls meet; four constituents.
  if (is_lambda(chi, 3, 1, 5, 1) && a1 && b1) {
    rep.family = "(3,5,1,1)";
    TorusChar ptA = chi, ptB = chi;  // both twists live over (3,5)
    Elt A = std_r0(cx, Side::Alpha, MKind::St, ptA);
    Elt B = std_r0(cx, Side::Beta, MKind::St, ptB);
    Elt st = elt_intersect(A, B);
    Elt ja = A - st, jb = B - st;
    Elt one = cx.orbit - A - B + st;
    Constituent c0 = make_constituent(cx, "St_G", "subrepresentation", st);
    Constituent c1 = make_constituent(cx, jdatum_str(sc, twist_datum(sc, Side::Beta, MKind::St, ptB)),
                                      "subquotient", jb);
    c1.datum = twist_datum(sc, Side::Beta, MKind::St, ptB);
    c1.reconstructed = true;
    c1.printed_note = "exponent (1,-1) in the printed list is read as (-1,1); forced by conservation";
    Constituent c2 = make_constituent(cx, jdatum_str(sc, twist_datum(sc, Side::Alpha, MKind::St, ptA)),
                                      "subquotient", ja);
    c2.datum = twist_datum(sc, Side::Alpha, MKind::St, ptA);
    Constituent c3 = make_constituent(cx, "1_G", "Langlands quotient", one);
    c3.datum = langlands_datum(sc, chi);
    rep.constituents = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
    finish_report(cx, rep);
    return rep;
  }

  // (1,2,...) point: five families share this lambda.
  if (is_lambda(chi, 1, 1, 2, 1)) {
    if (a1 && b1) {
      rep.family = "(1,2,1,1)";
      TorusChar pt_a11 = chars::make_torus_char(sc, 1, 1, sc->one(Domain::E), sc->one(Domain::F));
      TorusChar pt_a0m1 = chars::make_torus_char(sc, 0, -1, sc->one(Domain::E), sc->one(Domain::F));
      TorusChar pt_a01 = chars::make_torus_char(sc, 0, 1, sc->one(Domain::E), sc->one(Domain::F));
      TorusChar pt_b12 = chi;
      Elt A1 = std_r0(cx, Side::Alpha, MKind::St, pt_a11);
      Elt Bd = std_r0(cx, Side::Beta, MKind::St, pt_b12);
      Elt A2 = std_r0(cx, Side::Alpha, MKind::St, pt_a0m1);
      Elt B2 = std_r0(cx, Side::Alpha, MKind::Triv, pt_a01);
      Elt j_a = elt_intersect(A2, B2);  // {(0,1),(0,-1)}
      Elt pi1p = cx.calc.t_elt(pt_a11);  // r_0(pi(1)') = (1,1), from the embedding chain
      Elt pi1 = A1 - pi1p - j_a;
      Elt jbq = Bd - pi1 - j_a;
      Elt lq = cx.orbit - pi1 - pi1p - j_a * 2 - jbq;
      if (!elt_nonneg(pi1) || !elt_nonneg(jbq) || !elt_nonneg(lq))
        throw std::runtime_error("classify: (1,2,1,1) reconstruction failed");
      Constituent c0 = make_constituent(cx, "pi(1)", "subrepresentation", pi1);
      c0.reconstructed = true;
      c0.printed_note = "r_0 list reconstructed by Jacquet-sum conservation (missing in source)";
      Constituent c1 = make_constituent(cx, "pi(1)'", "subrepresentation", pi1p);
      Constituent c2 = make_constituent(
          cx, jdatum_str(sc, twist_datum(sc, Side::Alpha, MKind::St, pt_a11)), "subquotient", j_a, 2);
      c2.datum = twist_datum(sc, Side::Alpha, MKind::St, pt_a11);
      Constituent c3 = make_constituent(
          cx, jdatum_str(sc, twist_datum(sc, Side::Beta, MKind::St, pt_b12)), "subquotient", jbq);
      c3.datum = twist_datum(sc, Side::Beta, MKind::St, pt_b12);
      Constituent c4 = make_constituent(cx, jdatum_str(sc, langlands_datum(sc, chi)),
                                        "Langlands quotient", lq);
      c4.datum = langlands_datum(sc, chi);
      rep.constituents = {std::move(c0), std::move(c1), std::move(c2), std::move(c3), std::move(c4)};
      finish_report(cx, rep);
      return rep;
    }
    if (a1 && !b1 && nm_b_1) {
      // (1,2,1,chi2; chi2 o N = 1): length 2, the standard module
      // I_a(1/2, delta(1) (x) chi2) is irreducible and embeds.
      if (!build_one_wall(cx, rep, "(1,2,1,chi2;chi2oN=1)"))
        throw std::runtime_error("classify: (1,2,1,chi2;oN) failed");
      rep.constituents[1].reconstructed = true;
      rep.constituents[1].printed_note =
          "printed quotient list -2(1,2,1,chi2), -2(1,1,1,chi2^-1), (0,1,1,chi2^2), (0,-1,1,chi2) "
          "read through the w_0 mirror";
      return rep;
    }
    if (!a1 && a_sq && sc->equal(chi.a, sc->nm(chi.b)) && !b1) {
      // (1,2,chi1,chi2; chi1^2=1, chi1=chi2): I(chi) = I(1,2,1,chi2).
      TorusChar alias = chars::make_torus_char(sc, 1, 2, sc->one(Domain::E), chi.b);
      Report inner = classify(sc, alias, reading);
      inner.sc = sc;
      inner.input = chi_in;
      inner.normalized = chi;
      inner.normalizer = w;
      inner.singular = rep.singular;
      inner.rset = rep.rset;
      inner.family = "(1,2,chi1,chi2;chi1^2=1,chi1=chi2)";
      inner.alias_of = "(1,2,1,chi2;chi2^2=1)";
      return inner;
    }
    if (a1 && !b1 && b_sq) {
      // (1,2,1,chi2; chi2^2 = 1): regular, length 4.
      rep.family = "(1,2,1,chi2;chi2^2=1)";
      TorusChar ptB = chi;  // St_b over (1,2,1,chi2)
      TorusChar ptA = chars::make_torus_char(sc, 1, 1, sc->nm(chi.b), sc->one(Domain::F));
      build_two_modules(cx, rep, Side::Beta, ptB,
                        jdatum_str(sc, twist_datum(sc, Side::Beta, MKind::St, ptB)), Side::Alpha,
                        ptA, jdatum_str(sc, twist_datum(sc, Side::Alpha, MKind::St, ptA)),
                        "pi(chi2)", true,
                        "printed J_a and Langlands lists carry w_0-mirrored entries (minus signs)");
      return rep;
    }
    if (!a1 && b1 && sc->is_trivial(sc->res(chi.a))) {
      // (1,2,chi1,1; chi1|F = 1): regular, length 4 via the two beta modules.
      rep.family = "(1,2,chi1,1;chi1|F=1)";
      TorusChar ptB1 = chi;
      TorusChar ptB2 = chars::make_torus_char(sc, 1, 2, sc->neg(chi.a), chi.b);
      build_two_modules(cx, rep, Side::Beta, ptB1,
                        jdatum_str(sc, twist_datum(sc, Side::Beta, MKind::St, ptB1)), Side::Beta,
                        ptB2, jdatum_str(sc, twist_datum(sc, Side::Beta, MKind::St, ptB2)),
                        "pi(chi1)", true,
                        "second J_b list printed as the w_0 mirror of the first");
      return rep;
    }
  }

  // (2,3,...) point.
  if (is_lambda(chi, 2, 1, 3, 1) && a1) {
    if (b1) {
      if (build_one_wall(cx, rep, "(2,3,1,1)")) return rep;
    } else if (nm_b_1) {
      rep.family = "(2,3,1,chi2;chi2oN=1)";
      TorusChar ptA1 = chi;
      TorusChar ptA2 = chars::make_torus_char(sc, 2, 3, chi.a, sc->neg(chi.b));
      build_two_modules(cx, rep, Side::Alpha, ptA1,
                        jdatum_str(sc, twist_datum(sc, Side::Alpha, MKind::St, ptA1)), Side::Alpha,
                        ptA2, jdatum_str(sc, twist_datum(sc, Side::Alpha, MKind::St, ptA2)),
                        "pi(chi2)", true,
                        "second J_a list printed as the w_0 mirror of the first");
      return rep;
    }
  }

  // (2/3,1,chi1,1; chi1|F = 1).
  if (is_lambda(chi, 2, 3, 1, 1) && b1 && sc->is_trivial(sc->res(chi.a))) {
    if (build_one_wall(cx, rep, "(2/3,1,chi1,1;chi1|F=1)")) return rep;
  }

  // (1,3/2,1,chi2; chi2^2 = 1) and (1/2,1,chi1,1; chi1^2 = 1).
  if (is_lambda(chi, 1, 1, 3, 2) && a1 && b_sq) {
    if (build_one_wall(cx, rep, "(1,3/2,1,chi2;chi2^2=1)")) return rep;
  }
  if (is_lambda(chi, 1, 2, 1, 1) && b1 && a_sq) {
    if (build_one_wall(cx, rep, "(1/2,1,chi1,1;chi1^2=1)")) return rep;
  }

  if (lam_zero) {
    // Unitary branch: Keys' R-group, R = {w in Stab : chi_gamma = 1 => w.gamma > 0}.
    std::vector<Coroot> cond;
    for (Coroot c : rootdata::kCoroots)
      if (coroot_char_condition(sc, c, chi)) cond.push_back(c);
    auto stab = chars::stabilizer(sc, chi);
    std::vector<Weyl> rgroup;
    for (const auto& s : stab) {
      bool ok = true;
      for (Coroot c : cond)
        if (s.apply(c).sign < 0) ok = false;
      if (ok) rgroup.push_back(s);
    }
    bool machine_reducible = rgroup.size() > 1;
    // The verbatim sentence reads: reducible unless chi1 and chi2 are
    // different characters of order 2.
    bool different_quadratics = a_sq && b_sq && !a1 && !b1 && !sc->equal(sc->res(chi.a), chi.b);
    bool verbatim_reducible = !different_quadratics;
    if (machine_reducible != verbatim_reducible) {
      rep.keys_note =
          "Keys R-group verdict (" + std::string(machine_reducible ? "reducible" : "irreducible") +
          ") disagrees with the verbatim unitary-branch sentence (" +
          std::string(verbatim_reducible ? "reducible" : "irreducible") +
          "); the sentence appears inverted relative to Keys' theorem";
    }
    bool reducible = reading == KeysReading::Corrected ? machine_reducible : verbatim_reducible;
    rep.family = "unitary (Keys R-group)";
    if (!reducible) {
      Constituent c = make_constituent(cx, "I" + chars::torus_char_str(sc, chi), "irreducible",
                                       cx.orbit);
      rep.constituents = {std::move(c)};
      finish_report(cx, rep);
      return rep;
    }
    std::size_t pieces = reading == KeysReading::Corrected ? rgroup.size() : 2;
    for (std::size_t i = 0; i < pieces; ++i) {
      Constituent c;
      c.label = "tempered piece #" + std::to_string(i + 1);
      c.role = "tempered piece";
      c.jacquet_known = false;
      c.temp = Temperedness::Tempered;
      rep.constituents.push_back(std::move(c));
    }
    rep.length = Int(pieces);
    rep.max_mult = 1;
    return rep;
  }

  if (cx.rset.size() == 0) {
    rep.family = "#R=0 (irreducible)";
    Constituent c =
        make_constituent(cx, "I" + chars::torus_char_str(sc, chi), "irreducible", cx.orbit);
    c.datum = langlands_datum(sc, chi);
    rep.constituents = {std::move(c)};
    finish_report(cx, rep);
    return rep;
  }

  if (cx.rset.size() == 1) {
    std::string family = "generic #R=1 (" + rootdata::coroot_name(cx.rset.entries[0].coroot) + ")";
    if (build_one_wall(cx, rep, family)) return rep;
  }

  rep.family = "unclassified";
  rep.unclassified = true;
  return rep;
}

// -- database ----------------------------------------------------------------

namespace {

// Solve target = sum x_i * cons_i over the level-T basis; exact, and the
// solution must be a unique nonnegative integer vector.
std::vector<Int> solve_in_constituents(const std::vector<Elt>& cons, const Elt& target,
                                       const std::string& what) {
  std::vector<BasisObj> basis;
  auto note = [&](const Elt& e) {
    for (const auto& [b, k] : e.c) {
      (void)k;
      if (std::find(basis.begin(), basis.end(), b) == basis.end()) basis.push_back(b);
    }
  };
  for (const auto& e : cons) note(e);
  note(target);
  std::size_t rows = basis.size(), cols = cons.size();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      auto it = cons[c].c.find(basis[r]);
      if (it != cons[c].c.end()) m[r][c] = Rat(it->second);
    }
    auto it = target.c.find(basis[r]);
    if (it != target.c.end()) m[r][cols] = Rat(it->second);
  }
  // Gaussian elimination; the constituent columns must be independent.
  std::vector<int> pivot_of_col(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (std::size_t j = 0; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_of_col[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<Int> x(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) {
    if (pivot_of_col[c] < 0) throw std::runtime_error("expansion solve: dependent basis: " + what);
    std::size_t pr = pivot_of_col[c];
    Rat v = m[pr][cols] / m[pr][c];
    if (!is_integer(v) || v < 0)
      throw std::runtime_error("expansion solve: non-integral solution: " + what);
    x[c] = num(v);
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) throw std::runtime_error("expansion solve: inconsistent system: " + what);
  // Consistency of the pivot rows as well.
  Elt check{groth::Level::T, {}};
  for (std::size_t c = 0; c < cols; ++c) check = check + cons[c] * x[c];
  if (!(check == target)) throw std::runtime_error("expansion solve: residual: " + what);
  return x;
}

}  // namespace

std::string Database::add(const Calculus& calc, const Report& report) {
  Entry e;
  e.case_id = report.family + "@" + chars::torus_char_str(report.sc, report.normalized);
  e.sc = report.sc;
  e.report = report;

  bool all_known = true;
  for (const auto& c : report.constituents)
    if (!c.jacquet_known) all_known = false;
  if (all_known) {
    std::vector<Elt> jac;
    for (const auto& c : report.constituents) jac.push_back(c.jacquet);
    auto combo = [&](const std::vector<Int>& x) {
      Elt out{groth::Level::G, {}};
      for (std::size_t i = 0; i < x.size(); ++i)
        out = out + calc.constituent(e.case_id, static_cast<int>(i)) * x[i];
      return out;
    };
    // Full principal series.
    Elt orbit = calc.r0_of_full_ps(report.normalized);
    std::vector<Int> mults;
    for (const auto& c : report.constituents) mults.push_back(c.mult);
    {
      Elt check{groth::Level::T, {}};
      for (std::size_t i = 0; i < jac.size(); ++i) check = check + jac[i] * mults[i];
      if (check == orbit) {
        BasisObj ps = calc.ps_class(report.normalized).c.begin()->first;
        e.expansions.emplace_back(ps, combo(mults));
      }
    }
    // Wall standard modules on this orbit, both kinds, both sides.
    for (Side s : {Side::Alpha, Side::Beta}) {
      for (const auto& w : Weyl::all()) {
        TorusChar mu = weyl_act(e.sc, w, report.normalized);
        for (MKind kind : {MKind::St, MKind::Triv}) {
          if (kind == MKind::St ? !calc.st_defined(s, mu) : !calc.triv_defined(s, mu)) continue;
          BasisObj sym = calc.std_module(s, kind, mu).c.begin()->first;
          bool have = false;
          for (const auto& [k, v] : e.expansions)
            if (k == sym) have = true;
          if (have) continue;
          Elt sigma = calc.m_elt(kind == MKind::St ? calc.st_m(s, mu) : calc.triv_m(s, mu));
          Elt target = calc.r0(calc.jacquet_of_induced(s, s, sigma));
          auto x = solve_in_constituents(jac, target, e.case_id);
          e.expansions.emplace_back(sym, combo(x));
        }
      }
    }
  }
  entries_.push_back(std::move(e));
  return entries_.back().case_id;
}

const Database::Entry* Database::find(const std::string& case_id) const {
  for (const auto& e : entries_)
    if (e.case_id == case_id) return &e;
  return nullptr;
}

std::optional<Elt> Database::constituent_r0(const std::string& case_id, int index) const {
  const Entry* e = find(case_id);
  if (!e || index < 0 || index >= static_cast<int>(e->report.constituents.size()))
    return std::nullopt;
  const auto& c = e->report.constituents[static_cast<std::size_t>(index)];
  if (!c.jacquet_known) return std::nullopt;
  return c.jacquet;
}

std::optional<Elt> Database::constituent_r(const std::string& case_id, int index, Side s) const {
  auto r0 = constituent_r0(case_id, index);
  if (!r0) return std::nullopt;
  const Entry* e = find(case_id);
  Calculus calc(e->sc);
  return lift_to_m(calc, s, *r0);
}

std::optional<Elt> ScopedDatabase::constituent_r0(const std::string& case_id, int index) const {
  return db_->constituent_r0(case_id, index);
}

std::optional<Elt> ScopedDatabase::constituent_r(const std::string& case_id, int index,
                                                 Side s) const {
  return db_->constituent_r(case_id, index, s);
}

std::optional<Elt> ScopedDatabase::expand_std(Side s, MKind kind, const TorusChar& chi) const {
  Calculus calc(sc_);
  BasisObj sym;
  try {
    sym = calc.std_module(s, kind, chi).c.begin()->first;
  } catch (...) {
    return std::nullopt;
  }
  for (const auto& e : db_->entries()) {
    if (e.sc != sc_) continue;
    for (const auto& [k, v] : e.expansions)
      if (k == sym) return v;
  }
  return std::nullopt;
}

std::optional<Elt> ScopedDatabase::expand_ps(const TorusChar& chi) const {
  Calculus calc(sc_);
  BasisObj sym = calc.ps_class(chi).c.begin()->first;
  for (const auto& e : db_->entries()) {
    if (e.sc != sc_) continue;
    for (const auto& [k, v] : e.expansions)
      if (k == sym) return v;
  }
  return std::nullopt;
}

// -- canonical cases ----------------------------------------------------------

namespace {

ScenarioPtr scenario_f_order(int order, bool galois, bool norm_kernel) {
  chars::ScenarioSpec spec;
  spec.galois = galois;
  spec.atoms.push_back({"chi2", Domain::F, Int(order)});
  if (norm_kernel) spec.relations.push_back({{{Int(1), "chi2", chars::TermOp::Nm}}});
  return chars::Scenario::make(spec);
}

ScenarioPtr scenario_e_order(int order, bool res_trivial) {
  chars::ScenarioSpec spec;
  spec.atoms.push_back({"chi1", Domain::E, Int(order)});
  if (res_trivial) spec.relations.push_back({{{Int(1), "chi1", chars::TermOp::Res}}});
  return chars::Scenario::make(spec);
}

}  // namespace

std::vector<CanonicalCase> canonical_cases(bool galois) {
  std::vector<CanonicalCase> out;
  auto triv = chars::trivial_scenario();
  auto add = [&](std::string id, ScenarioPtr sc, Rat s1, Rat s2, CharElt a, CharElt b) {
    out.push_back({std::move(id), sc, chars::make_torus_char(sc, s1, s2, a, b)});
  };
  add("(3,5,1,1)", triv, 3, 5, triv->one(Domain::E), triv->one(Domain::F));
  add("(2,3,1,1)", triv, 2, 3, triv->one(Domain::E), triv->one(Domain::F));
  if (galois) {
    auto sc = scenario_f_order(3, true, true);
    add("(2,3,1,chi2;chi2oN=1)", sc, 2, 3, sc->one(Domain::E), sc->atom("chi2"));
  }
  add("(1,2,1,1)", triv, 1, 2, triv->one(Domain::E), triv->one(Domain::F));
  if (galois) {
    auto sc = scenario_f_order(3, true, true);
    add("(1,2,1,chi2;chi2oN=1)", sc, 1, 2, sc->one(Domain::E), sc->atom("chi2"));
  }
  {
    auto sc = scenario_f_order(2, galois, false);
    add("(1,2,1,chi2;chi2^2=1)", sc, 1, 2, sc->one(Domain::E), sc->atom("chi2"));
    add("(1,2,chi1,chi2;chi1^2=1,chi1=chi2)", sc, 1, 2, sc->nm(sc->atom("chi2")), sc->atom("chi2"));
    add("(1,3/2,1,chi2;chi2^2=1)", sc, 1, Rat(3, 2), sc->one(Domain::E), sc->atom("chi2"));
  }
  {
    auto sc = scenario_e_order(3, true);
    add("(1,2,chi1,1;chi1|F=1)", sc, 1, 2, sc->atom("chi1"), sc->one(Domain::F));
    add("(2/3,1,chi1,1;chi1|F=1)", sc, Rat(2, 3), 1, sc->atom("chi1"), sc->one(Domain::F));
  }
  {
    auto sc = scenario_e_order(2, false);
    add("(1/2,1,chi1,1;chi1^2=1)", sc, Rat(1, 2), 1, sc->atom("chi1"), sc->one(Domain::F));
  }
  return out;
}

std::shared_ptr<Database> build_database(bool galois) {
  auto db = std::make_shared<Database>();
  for (const auto& c : canonical_cases(galois)) {
    Calculus calc(c.sc);
    Report rep = classify(c.sc, c.chi);
    if (rep.unclassified) throw std::runtime_error("build_database: unclassified case " + c.id);
    db->add(calc, rep);
  }
  return db;
}

SpecialExponents special_exponents() {
  SpecialExponents out;
  auto db = build_database(true);
  for (const auto& e : db->entries()) {
    bool has_si = false;
    for (const auto& c : e.report.constituents)
      if (c.jacquet_known && c.temp == Temperedness::SquareIntegrable) has_si = true;
    if (!has_si) continue;
    Lambda l = e.report.normalized.lam;
    if (std::find(out.principal_series.begin(), out.principal_series.end(), l) ==
        out.principal_series.end())
      out.principal_series.push_back(l);
  }
  std::sort(out.principal_series.begin(), out.principal_series.end());
  out.symbolic = {
      "pi_a(s, delta(chi1) x chi2): s=1/2 (chi1=chi1oN, chi2=1), s=3/2 (chi1=1, chi2oN=1, chi2!=1), "
      "s=5/2 (chi1=chi2=1)",
      "pi_b(s, chi1 x delta(chi2)): s=3/2 (chi1|F=1, chi2=1), s=9/2 (chi1=chi2=1)",
      "pi_a(s0, rho x chi2), pi_b(s0, chi1 x rho): rho supercuspidal self-dual, s0 determined by "
      "the pair (one point per datum)"};
  return out;
}

}  // namespace triality::classify
