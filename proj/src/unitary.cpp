#include "triality/unitary.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace triality::unitary {

using chars::Domain;
using chars::TorusChar;
using chars::weyl_act;
using classify::Temperedness;
using groth::Calculus;
using rootdata::Coroot;
using rootdata::Lambda;

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Unitary: return "unitary";
    case Verdict::NonUnitary: return "non-unitary";
    case Verdict::IsolatedUnitary: return "isolated-unitary";
    case Verdict::Boundary: return "boundary";
  }
  return "?";
}

namespace {

bool trivial(const ScenarioPtr& sc, const CharElt& x) { return sc->is_trivial(x); }
bool quadratic(const ScenarioPtr& sc, const CharElt& x) {
  return sc->is_trivial(sc->mul(2, x));
}

}  // namespace

HermitianResult is_hermitian(const ScenarioPtr& sc, const JDatum& d) {
  HermitianResult out;
  if (d.parabolic == ParabolicKind::G) {
    out.hermitian = true;
    out.shape = "tempered";
    return out;
  }
  if (d.parabolic == ParabolicKind::B) {
    out.hermitian = quadratic(sc, d.e_slot) && quadratic(sc, d.f_slot);
    out.shape = out.hermitian ? "chi1^2=1=chi2^2" : "chi1^2=1=chi2^2 fails";
    return out;
  }

  // Maximal parabolic. At twist exponent zero the induction is unitary
  // and the criterion is met by w = e; the w-tilde test below is the
  // s > 0 criterion.
  if (d.s == 0) {
    out.hermitian = true;
    out.shape = "unitarily induced (s = 0)";
    return out;
  }
  Calculus calc(sc);
  Side side = d.parabolic == ParabolicKind::PAlpha ? Side::Alpha : Side::Beta;
  bool mech = false;
  if (side == Side::Alpha) {
    CharElt b = sc->neg(d.f_slot);
    if (d.sigma == JDatum::SigmaKind::Delta) {
      TorusChar mu0 = chars::make_torus_char(sc, Rat(1, 2), Rat(0), d.sigma_char, b);
      if (!calc.st_defined(Side::Alpha, mu0))
        throw std::runtime_error("is_hermitian: malformed delta datum (central characters)");
      TorusChar img = weyl_act(sc, groth::w_tilde(Side::Alpha), mu0);
      mech = img == mu0;
    } else {
      TorusChar mu0 = chars::make_torus_char(sc, 0, 0, d.sigma_char, b);
      if (!sc->equal(d.sigma_char2, sc->add(sc->neg(d.sigma_char), sc->nm(b))))
        throw std::runtime_error("is_hermitian: malformed PS datum (central characters)");
      mech = calc.ps_m(Side::Alpha, mu0) ==
             calc.ps_m(Side::Alpha, weyl_act(sc, groth::w_tilde(Side::Alpha), mu0));
    }
  } else {
    CharElt a = sc->neg(d.e_slot);
    if (d.sigma == JDatum::SigmaKind::Delta) {
      TorusChar mu0 = chars::make_torus_char(sc, Rat(0), Rat(1, 2), a, d.sigma_char);
      if (!calc.st_defined(Side::Beta, mu0))
        throw std::runtime_error("is_hermitian: malformed delta datum (central characters)");
      TorusChar img = weyl_act(sc, groth::w_tilde(Side::Beta), mu0);
      mech = img == mu0;
    } else {
      TorusChar mu0 = chars::make_torus_char(sc, 0, 0, a, d.sigma_char);
      if (!sc->equal(d.sigma_char2, sc->add(sc->res(a), sc->neg(d.sigma_char))))
        throw std::runtime_error("is_hermitian: malformed PS datum (central characters)");
      mech = calc.ps_m(Side::Beta, mu0) ==
             calc.ps_m(Side::Beta, weyl_act(sc, groth::w_tilde(Side::Beta), mu0));
    }
  }
  out.hermitian = mech;

  // Match against the printed bullet shapes.
  bool bullet = false;
  std::string shape;
  if (side == Side::Alpha) {
    if (d.sigma == JDatum::SigmaKind::Delta) {
      if (trivial(sc, d.f_slot) && quadratic(sc, d.sigma_char)) {
        bullet = true;
        shape = "delta(chi1) x 1, chi1^2=1";
      }
    } else if (trivial(sc, d.f_slot) && sc->equal(d.sigma_char2, sc->neg(d.sigma_char))) {
      bullet = true;
      shape = "I^a(chi1,chi1^-1) x 1";
    } else if (!trivial(sc, d.f_slot) && quadratic(sc, d.f_slot) && quadratic(sc, d.sigma_char)) {
      bullet = true;
      shape = "I^a(chi1,chi1^-1 chi2oN) x chi2, chi1^2=1=chi2^2";
    }
  } else {
    if (d.sigma == JDatum::SigmaKind::Delta) {
      if (trivial(sc, d.e_slot) && quadratic(sc, d.sigma_char)) {
        bullet = true;
        shape = "1 x delta(chi2), chi2^2=1";
      }
    } else if (trivial(sc, d.e_slot) && sc->equal(d.sigma_char2, sc->neg(d.sigma_char))) {
      bullet = true;
      shape = "1 x I^b(chi2,chi2^-1)";
    } else if (!trivial(sc, d.e_slot) && quadratic(sc, d.e_slot) && quadratic(sc, d.sigma_char)) {
      bullet = true;
      shape = "chi1^-1 x I^b(chi2,chi2^-1 chi1), chi1^2=1=chi2^2";
    }
  }
  if (mech == bullet) {
    out.shape = mech ? shape : "none";
  } else {
    // A scenario outside the printed list (possible only for dyadic-type
    // hypothesis sets); the mechanical w-criterion is authoritative.
    out.shape = std::string("outside printed bullets (w-criterion says ") +
                (mech ? "Hermitian)" : "non-Hermitian)");
  }
  return out;
}

bool lemma31_reducibility(const ScenarioPtr& sc, L31Shape shape, const Rat& s,
                          const CharElt& chi1, const CharElt& chi2) {
  if (s <= 0) throw std::runtime_error("lemma31: s > 0 expected");
  switch (shape) {
    case L31Shape::AlphaPair:
      if (!quadratic(sc, chi1) || !quadratic(sc, chi2))
        throw std::runtime_error("lemma31(i): quadratic characters expected");
      if (s == Rat(1, 2) && trivial(sc, chi2)) return true;
      if (s == 1 && trivial(sc, sc->res(chi1))) return true;
      if (s == 1 && sc->equal(sc->res(chi1), chi2)) return true;  // "chi1 = chi2"
      return false;
    case L31Shape::AlphaSelf:
      if (s == Rat(1, 2)) return true;
      if (s == 1 && trivial(sc, sc->res(chi1))) return true;
      return false;
    case L31Shape::BetaPair:
      if (!quadratic(sc, chi1) || !quadratic(sc, chi2))
        throw std::runtime_error("lemma31(iii): quadratic characters expected");
      if (s == Rat(3, 2) && trivial(sc, chi1)) return true;
      if (s == 1 && (sc->equal(sc->res(chi1), chi2) || trivial(sc, chi2))) return true;
      if (s == 3 && (sc->equal(chi1, sc->nm(chi2)) || trivial(sc, sc->nm(chi2)))) return true;
      return false;
    case L31Shape::BetaSelf:
      if (trivial(sc, chi2)) throw std::runtime_error("lemma31(iv): chi2 != 1 expected");
      if (s == Rat(3, 2)) return true;
      if (s == 3 && trivial(sc, sc->nm(chi2))) return true;
      return false;
  }
  return false;
}

chars::TorusChar l31_character(const ScenarioPtr& sc, L31Shape shape, const Rat& s,
                               const CharElt& chi1, const CharElt& chi2) {
  switch (shape) {
    case L31Shape::AlphaPair:
      return chars::make_torus_char(sc, s, 2 * s, chi1, chi2);
    case L31Shape::AlphaSelf:
      return chars::make_torus_char(sc, s, 2 * s, chi1, sc->one(Domain::F));
    case L31Shape::BetaPair:
      return chars::make_torus_char(sc, 2 * s / 3, s, chi1, chi2);
    case L31Shape::BetaSelf:
      return chars::make_torus_char(sc, 2 * s / 3, s, sc->one(Domain::E), chi2);
  }
  throw std::logic_error("l31_character");
}

bool lemma33_unitary(Side side, const Rat& s) {
  if (s <= 0) return true;  // unitary induction at or below zero twist
  return side == Side::Alpha ? s < Rat(1, 2) : s < Rat(3, 2);
}

namespace {

UnitarityVerdict uv(Verdict v, std::string w) { return {v, std::move(w)}; }

std::string bnd(const Rat& s, const Rat& b, const std::string& clause) {
  if (s == b) return clause + " (boundary s=" + rat_str(b) + ")";
  return clause;
}

}  // namespace

UnitarityVerdict thm34_unitarity(const ScenarioPtr& sc, const JDatum& d) {
  if (d.parabolic != ParabolicKind::PAlpha && d.parabolic != ParabolicKind::PBeta)
    throw std::runtime_error("thm34_unitarity: maximal-parabolic datum expected");
  if (d.s <= 0) throw std::runtime_error("thm34_unitarity: s > 0 expected");
  HermitianResult h = is_hermitian(sc, d);
  if (!h.hermitian) return uv(Verdict::NonUnitary, "not Hermitian (" + h.shape + ")");

  const bool alpha = d.parabolic == ParabolicKind::PAlpha;
  const CharElt& slot = alpha ? d.f_slot : d.e_slot;
  if (d.sigma == JDatum::SigmaKind::Delta) {
    // (i) / (ii): delta twists bound by 1/2 resp. 3/2.
    Rat b = alpha ? Rat(1, 2) : Rat(3, 2);
    const char* clause = alpha ? "thm34(i) s<=1/2" : "thm34(ii) s<=3/2";
    if (trivial(sc, slot) && d.s <= b) return uv(Verdict::Unitary, bnd(d.s, b, clause));
    if (trivial(sc, slot)) return uv(Verdict::NonUnitary, std::string(clause) + " fails");
    return uv(Verdict::NonUnitary, "delta shape with nontrivial twist outside printed clauses");
  }

  const CharElt& u1 = d.sigma_char;
  const CharElt& u2 = d.sigma_char2;
  if (alpha) {
    if (trivial(sc, d.f_slot) && sc->equal(u2, sc->neg(u1))) {
      // (iii) J_a(s, I^a(chi1, chi1^-1) x 1).
      if (d.s <= Rat(1, 2)) return uv(Verdict::Unitary, bnd(d.s, Rat(1, 2), "thm34(iii) s<=1/2"));
      if (d.s == 1 && trivial(sc, sc->res(u1))) {
        if (trivial(sc, u1))
          return uv(Verdict::Unitary, "thm34(iii) s=1, chi1=1 (closure corner of (1,2))");
        return uv(Verdict::IsolatedUnitary, "thm34(iii) s=1, chi1|F=1, chi1!=1 (isolated)");
      }
      return uv(Verdict::NonUnitary, "thm34(iii) fails");
    }
    // (iv) J_a(s, I^a(chi1, chi1^-1 chi2oN) x chi2), chi2 != 1.
    bool clause = trivial(sc, u1) || sc->equal(sc->res(u1), slot);
    if (clause && d.s <= 1) return uv(Verdict::Unitary, bnd(d.s, Rat(1), "thm34(iv) s<=1"));
    if (!clause && (trivial(sc, sc->res(u1)) || sc->equal(u1, sc->nm(slot))))
      return uv(Verdict::NonUnitary,
                "thm34(iv) no printed clause; scenario admits a reducibility line outside the "
                "printed list");
    return uv(Verdict::NonUnitary, "thm34(iv) fails");
  }
  if (trivial(sc, d.e_slot) && sc->equal(u2, sc->neg(u1))) {
    // (vi) J_b(s, 1 x I^b(chi2, chi2^-1)).
    if (d.s <= Rat(3, 2)) return uv(Verdict::Unitary, bnd(d.s, Rat(3, 2), "thm34(vi) s<=3/2"));
    if (d.s == 3 && trivial(sc, sc->nm(u1))) {
      if (trivial(sc, u1)) return uv(Verdict::NonUnitary, "thm34(vi) s=3 needs chi2 != 1");
      return uv(Verdict::IsolatedUnitary, "thm34(vi) s=3, chi2oN=1, chi2!=1 (isolated)");
    }
    return uv(Verdict::NonUnitary, "thm34(vi) fails");
  }
  // (v) J_b(s, chi1 x I^b(chi2, chi2^-1 chi1|F)), chi1 != 1.
  bool clause = trivial(sc, u1) || trivial(sc, u2) || sc->equal(sc->res(d.e_slot), u1) ||
                sc->equal(sc->res(d.e_slot), u2);
  if (clause && d.s <= 1) return uv(Verdict::Unitary, bnd(d.s, Rat(1), "thm34(v) s<=1"));
  return uv(Verdict::NonUnitary, "thm34(v) fails");
}

std::vector<Segment> lemma35_lines(const ScenarioPtr& sc, const CharElt& chi1,
                                   const CharElt& chi2) {
  if (!quadratic(sc, chi1) || !quadratic(sc, chi2))
    throw std::runtime_error("lemma35_lines: quadratic characters expected");
  std::vector<Segment> out;
  const bool c2_triv = trivial(sc, chi2);
  const bool c1_triv = trivial(sc, chi1);
  if (c2_triv) {
    out.push_back({"(s1,1,chi1,1;1/2<s1<2/3)", Rat(1, 2), Rat(1), Rat(2, 3), Rat(1), true});
    out.push_back({"(s1,2s1-1,chi1,1;s1>2)", Rat(2), Rat(3), Rat(1), Rat(2), false});
  }
  if (c1_triv) {
    out.push_back({"(1,s2,1,chi2;3/2<s2<2)", Rat(1), Rat(3, 2), Rat(1), Rat(2), true});
    out.push_back({"((2s2-1)/3,s2,1,chi2;s2>2)", Rat(1), Rat(2), Rat(2), Rat(3), false});
  }
  // The two "chi1 = chi2" families key on the precise rank-1 rows: the
  // (3a+b)v line needs chi1|F = chi2, the (a+b)v line needs chi1 = chi2oN.
  if (sc->equal(sc->res(chi1), chi2))
    out.push_back({"(s1,3s1-1,chi1,chi1;2/3<s1<1)", Rat(2, 3), Rat(1), Rat(1), Rat(2), true});
  if (sc->equal(chi1, sc->nm(chi2)))
    out.push_back({"(s1,s1+1,chi1,chi1;1<s1<2)", Rat(1), Rat(2), Rat(2), Rat(3), true});
  return out;
}

UnitarityVerdict thm36_unitarity(const ScenarioPtr& sc, const Rat& s1, const Rat& s2,
                                 const CharElt& chi1, const CharElt& chi2) {
  Lambda l{s1, s2};
  if (!(rootdata::pairing(l, Coroot::Alpha) > 0 && rootdata::pairing(l, Coroot::Beta) > 0))
    throw std::runtime_error("thm36_unitarity: open-chamber point expected");
  if (!quadratic(sc, chi1) || !quadratic(sc, chi2))
    return uv(Verdict::NonUnitary, "not Hermitian (chi1^2=1=chi2^2 fails)");
  const bool c1 = trivial(sc, chi1), c2 = trivial(sc, chi2);
  if (c1 && c2) {
    if (s1 == 3 && s2 == 5) return uv(Verdict::IsolatedUnitary, "thm36(i) isolated point (3,5)");
    if (s2 <= 1) return uv(Verdict::Unitary, s2 == 1 ? "thm36(i) s2<=1 (boundary)" : "thm36(i) s2<=1");
    if (3 * s1 - s2 >= 1 && s1 <= 1) {
      bool boundary = (3 * s1 - s2 == 1) || (s1 == 1);
      return uv(Verdict::Unitary, boundary ? "thm36(i) complementary region (boundary)"
                                           : "thm36(i) complementary region 3s1-s2>=1, s1<=1");
    }
    return uv(Verdict::NonUnitary, "thm36(i) fails");
  }
  if (c1 && !c2) {
    if (s1 <= 1) return uv(Verdict::Unitary, s1 == 1 ? "thm36(ii) s1<=1 (boundary)" : "thm36(ii) s1<=1");
    return uv(Verdict::NonUnitary, "thm36(ii) fails");
  }
  if (!c1 && c2) {
    if (s2 <= 1) return uv(Verdict::Unitary, s2 == 1 ? "thm36(iii) s2<=1 (boundary)" : "thm36(iii) s2<=1");
    return uv(Verdict::NonUnitary, "thm36(iii) fails");
  }
  if (sc->equal(sc->res(chi1), chi2)) {
    if (3 * s1 - s2 <= 1)
      return uv(Verdict::Unitary,
                3 * s1 - s2 == 1 ? "thm36(iv) 3s1-s2<=1 (boundary)" : "thm36(iv) 3s1-s2<=1");
    return uv(Verdict::NonUnitary, "thm36(iv) fails");
  }
  return uv(Verdict::NonUnitary, "no clause of thm36 applies (distinct quadratic pair)");
}

UnitarityVerdict constituent_unitarity(const ScenarioPtr& sc, const classify::Constituent& c) {
  if (c.temp == Temperedness::SquareIntegrable) return uv(Verdict::Unitary, "square-integrable");
  if (c.temp == Temperedness::Tempered) return uv(Verdict::Unitary, "tempered");
  if (!c.datum) return uv(Verdict::NonUnitary, "no Langlands datum recorded");
  switch (c.datum->parabolic) {
    case ParabolicKind::G:
      return uv(Verdict::Unitary, "tempered");
    case ParabolicKind::B:
      return thm36_unitarity(sc, c.datum->lam.s1, c.datum->lam.s2, c.datum->e_slot,
                             c.datum->f_slot);
    default:
      return thm34_unitarity(sc, *c.datum);
  }
}

// -- region sampling ----------------------------------------------------------

namespace {

bool on_segment(const Segment& seg, const Rat& x, const Rat& y) {
  Rat dx = seg.x1 - seg.x0, dy = seg.y1 - seg.y0;
  if (seg.bounded) {
    // Collinearity plus the box test.
    if (dx * (y - seg.y0) != dy * (x - seg.x0)) return false;
    Rat lo_x = std::min(seg.x0, seg.x1), hi_x = std::max(seg.x0, seg.x1);
    Rat lo_y = std::min(seg.y0, seg.y1), hi_y = std::max(seg.y0, seg.y1);
    return lo_x <= x && x <= hi_x && lo_y <= y && y <= hi_y;
  }
  // Ray from (x0, y0) in direction (x1, y1).
  (void)dx;
  (void)dy;
  if (seg.x1 * (y - seg.y0) != seg.y1 * (x - seg.x0)) return false;
  if (seg.x1 != 0) return (x - seg.x0) / seg.x1 >= 0;
  return seg.y1 != 0 && (y - seg.y0) / seg.y1 >= 0;
}

}  // namespace

Region region_sample(const ScenarioPtr& sc, const CharElt& chi1, const CharElt& chi2, const Rat& x0,
                     const Rat& x1, const Rat& y0, const Rat& y1, int n) {
  if (n < 2) throw std::runtime_error("region_sample: n >= 2 expected");
  Region r;
  r.n = n;
  r.x0 = x0;
  r.x1 = x1;
  r.y0 = y0;
  r.y1 = y1;
  r.overlays = lemma35_lines(sc, chi1, chi2);
  if (sc->is_trivial(chi1) && sc->is_trivial(chi2)) {
    if (x0 <= 3 && Rat(3) <= x1 && y0 <= 5 && Rat(5) <= y1)
      r.isolated.push_back({Rat(3), Rat(5), "J(3,5,1,1) = 1_G"});
  }
  Rat stepx = (x1 - x0) / (n - 1), stepy = (y1 - y0) / (n - 1);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      RegionNode node;
      node.s1 = x0 + stepx * i;
      node.s2 = y0 + stepy * j;
      Lambda l{node.s1, node.s2};
      node.in_chamber =
          rootdata::pairing(l, Coroot::Alpha) > 0 && rootdata::pairing(l, Coroot::Beta) > 0;
      if (!node.in_chamber) {
        node.v = uv(Verdict::NonUnitary, "outside the open chamber");
      } else {
        node.v = thm36_unitarity(sc, node.s1, node.s2, chi1, chi2);
        for (const auto& seg : r.overlays) {
          if (on_segment(seg, node.s1, node.s2)) {
            node.on_line = true;
            if (node.v.verdict == Verdict::Unitary) node.v.verdict = Verdict::Boundary;
            node.v.witness += "; on reducibility line " + seg.family;
            break;
          }
        }
      }
      r.nodes.push_back(std::move(node));
    }
  }
  return r;
}

std::string region_csv(const ScenarioPtr& sc, const Region& r) {
  (void)sc;
  std::ostringstream os;
  os << "s1,s2,verdict,witness\n";
  for (const auto& node : r.nodes)
    os << rat_str(node.s1) << "," << rat_str(node.s2) << "," << verdict_str(node.v.verdict) << ","
       << "\"" << node.v.witness << "\"\n";
  return os.str();
}

std::string region_svg(const ScenarioPtr& sc, const Region& r) {
  (void)sc;
  // Fixed 720x720 canvas; rational coordinates are rendered through a
  // deterministic integer grid (no floating point).
  const long W = 720, H = 720;
  auto floor_rat = [](const Rat& v) {
    Int q = num(v) / den(v);
    if (num(v) < 0 && q * den(v) != num(v)) q -= 1;
    return q;
  };
  auto px = [&](const Rat& x) { return floor_rat(Rat(W) * (x - r.x0) / (r.x1 - r.x0)); };
  auto py = [&](const Rat& y) { return floor_rat(Rat(H) - Rat(H) * (y - r.y0) / (r.y1 - r.y0)); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"#ffffff\"/>\n";
  Rat cw = Rat(W) / (r.n - 1), ch = Rat(H) / (r.n - 1);
  Int cwi = num(cw) / den(cw) + 1, chi_ = num(ch) / den(ch) + 1;
  for (const auto& node : r.nodes) {
    const char* fill = nullptr;
    if (!node.in_chamber)
      fill = nullptr;
    else
      switch (node.v.verdict) {
        case Verdict::Unitary: fill = "#4caf50"; break;
        case Verdict::Boundary: fill = "#a5d6a7"; break;
        case Verdict::IsolatedUnitary: fill = "#ff9800"; break;
        case Verdict::NonUnitary: fill = "#eceff1"; break;
      }
    if (!fill) continue;
    os << "<rect x=\"" << (px(node.s1) - cwi / 2) << "\" y=\"" << (py(node.s2) - chi_ / 2)
       << "\" width=\"" << cwi << "\" height=\"" << chi_ << "\" fill=\"" << fill << "\"/>\n";
  }
  for (const auto& seg : r.overlays) {
    Rat ex = seg.x1, ey = seg.y1;
    if (!seg.bounded) {
      // Extend the ray far past the window.
      Rat scale = (r.x1 - r.x0) + (r.y1 - r.y0) + 10;
      ex = seg.x0 + seg.x1 * scale;
      ey = seg.y0 + seg.y1 * scale;
    }
    os << "<line x1=\"" << px(seg.x0) << "\" y1=\"" << py(seg.y0) << "\" x2=\"" << px(ex)
       << "\" y2=\"" << py(ey) << "\" stroke=\"#1a237e\" stroke-width=\"2\"/>"
       << "<!-- " << seg.family << " -->\n";
  }
  for (const auto& pt : r.isolated)
    os << "<circle cx=\"" << px(pt.s1) << "\" cy=\"" << py(pt.s2)
       << "\" r=\"6\" fill=\"#d32f2f\"/><!-- " << pt.label << " -->\n";
  // Chamber walls for orientation.
  os << "<line x1=\"" << px(r.x0) << "\" y1=\"" << py(2 * r.x0) << "\" x2=\"" << px(r.y1 / 2)
     << "\" y2=\"" << py(r.y1) << "\" stroke=\"#9e9e9e\" stroke-dasharray=\"4\"/>\n";
  os << "<line x1=\"" << px(r.x0) << "\" y1=\"" << py(Rat(3) * r.x0 / 2) << "\" x2=\""
     << px(Rat(2) * r.y1 / 3) << "\" y2=\"" << py(r.y1) << "\" stroke=\"#9e9e9e\" "
     << "stroke-dasharray=\"4\"/>\n";
  os << "</svg>\n";
  return os.str();
}

std::vector<std::string> aubert_unitarity_mismatches(const classify::Database& db) {
  std::vector<std::string> bad;
  for (const auto& e : db.entries()) {
    const auto& cons = e.report.constituents;
    for (std::size_t i = 0; i < cons.size(); ++i) {
      if (!cons[i].jacquet_known || cons[i].aubert_partner < 0) continue;
      const auto& p = cons[static_cast<std::size_t>(cons[i].aubert_partner)];
      bool ui = constituent_unitarity(e.sc, cons[i]).is_unitary();
      bool up = constituent_unitarity(e.sc, p).is_unitary();
      if (ui != up)
        bad.push_back(e.case_id + ": " + cons[i].label + " (" + (ui ? "unitary" : "non-unitary") +
                      ") vs partner " + p.label + " (" + (up ? "unitary" : "non-unitary") + ")");
    }
  }
  return bad;
}

}  // namespace triality::unitary
