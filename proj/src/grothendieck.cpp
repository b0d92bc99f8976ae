#include "triality/grothendieck.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace triality::groth {

using chars::CharElt;
using chars::weyl_act;
using rootdata::Coroot;
using rootdata::Weyl;

bool BasisObj::operator<(const BasisObj& o) const {
  auto key = [](const BasisObj& b) {
    return std::make_tuple(static_cast<int>(b.level), static_cast<int>(b.mkind),
                           static_cast<int>(b.gkind), static_cast<int>(b.side), b.case_id,
                           b.index);
  };
  auto k1 = key(*this), k2 = key(o);
  if (k1 != k2) return k1 < k2;
  return chi < o.chi;
}

bool BasisObj::operator==(const BasisObj& o) const { return !(*this < o) && !(o < *this); }

Elt& Elt::add(const BasisObj& b, const Int& k) {
  if (k == 0) return *this;
  auto it = c.find(b);
  if (it == c.end()) {
    c.emplace(b, k);
  } else {
    it->second += k;
    if (it->second == 0) c.erase(it);
  }
  return *this;
}

Elt Elt::operator+(const Elt& o) const {
  assert(level == o.level);
  Elt out = *this;
  for (const auto& [b, k] : o.c) out.add(b, k);
  return out;
}

Elt Elt::operator-(const Elt& o) const { return *this + (-o); }

Elt Elt::operator-() const {
  Elt out = *this;
  for (auto& [b, k] : out.c) k = -k;
  return out;
}

Elt Elt::operator*(const Int& k) const {
  Elt out{level, {}};
  if (k == 0) return out;
  for (const auto& [b, v] : c) out.c.emplace(b, v * k);
  return out;
}

bool Calculus::st_defined(Side s, const TorusChar& chi) const {
  if (rootdata::pairing(chi.lam, side_coroot(s)) != 1) return false;
  if (s == Side::Alpha)  // chi1^2 = chi2 o N
    return sc_->equal(sc_->mul(2, chi.a), sc_->nm(chi.b));
  return sc_->equal(sc_->res(chi.a), sc_->mul(2, chi.b));  // chi1|F = chi2^2
}

bool Calculus::triv_defined(Side s, const TorusChar& chi) const {
  if (rootdata::pairing(chi.lam, side_coroot(s)) != -1) return false;
  if (s == Side::Alpha)
    return sc_->equal(sc_->mul(2, chi.a), sc_->nm(chi.b));
  return sc_->equal(sc_->res(chi.a), sc_->mul(2, chi.b));
}

bool Calculus::ps_reducible(Side s, const TorusChar& chi) const {
  return st_defined(s, chi) || triv_defined(s, chi) || st_defined(s, weyl_act(sc_, w_simple(s), chi));
}

Elt Calculus::t_elt(const TorusChar& chi) const {
  Elt e{Level::T, {}};
  BasisObj b;
  b.level = Level::T;
  b.chi = chi;
  e.add(b, 1);
  return e;
}

BasisObj Calculus::ps_m(Side s, const TorusChar& chi) const {
  TorusChar other = weyl_act(sc_, w_simple(s), chi);
  BasisObj b;
  b.level = m_level(s);
  b.mkind = MKind::PS;
  b.side = s;
  b.chi = std::min(chi, other);
  return b;
}

BasisObj Calculus::st_m(Side s, const TorusChar& chi) const {
  if (!st_defined(s, chi)) throw std::runtime_error("st_m: twist not defined at this character");
  BasisObj b;
  b.level = m_level(s);
  b.mkind = MKind::St;
  b.side = s;
  b.chi = chi;
  return b;
}

BasisObj Calculus::triv_m(Side s, const TorusChar& chi) const {
  if (!triv_defined(s, chi)) throw std::runtime_error("triv_m: twist not defined at this character");
  BasisObj b;
  b.level = m_level(s);
  b.mkind = MKind::Triv;
  b.side = s;
  b.chi = chi;
  return b;
}

Elt Calculus::m_elt(const BasisObj& b) const {
  Elt e{b.level, {}};
  e.add(b, 1);
  return e;
}

TorusChar Calculus::ps_class_rep(const TorusChar& chi) const {
  auto orbit = chars::char_orbit(sc_, chi);
  return orbit.front();  // sorted: the least element is canonical
}

Elt Calculus::ps_class(const TorusChar& chi) const {
  BasisObj b;
  b.level = Level::G;
  b.gkind = BasisObj::GKind::PSClass;
  b.chi = ps_class_rep(chi);
  Elt e{Level::G, {}};
  e.add(b, 1);
  return e;
}

Elt Calculus::std_module(Side s, MKind kind, const TorusChar& chi) const {
  if (kind == MKind::PS) return ps_class(chi);
  if (kind == MKind::St && !st_defined(s, chi)) throw std::runtime_error("std_module: bad St twist");
  if (kind == MKind::Triv && !triv_defined(s, chi)) throw std::runtime_error("std_module: bad Triv twist");
  // I_gamma(wt.sigma) = I_gamma(sigma): canonicalize along w-tilde.
  TorusChar other = weyl_act(sc_, w_tilde(s), chi);
  BasisObj b;
  b.level = Level::G;
  b.gkind = BasisObj::GKind::StdModule;
  b.side = s;
  b.mkind = kind;
  b.chi = std::min(chi, other);
  Elt e{Level::G, {}};
  e.add(b, 1);
  return e;
}

Elt Calculus::constituent(const std::string& case_id, int index) const {
  BasisObj b;
  b.level = Level::G;
  b.gkind = BasisObj::GKind::Constituent;
  b.case_id = case_id;
  b.index = index;
  Elt e{Level::G, {}};
  e.add(b, 1);
  return e;
}

Elt Calculus::r0(const Elt& e, const ConstituentResolver* db) const {
  if (e.level == Level::T) return e;
  Elt out{Level::T, {}};
  for (const auto& [b, k] : e.c) {
    if (b.level == Level::MA || b.level == Level::MB) {
      Side s = b.level == Level::MA ? Side::Alpha : Side::Beta;
      if (b.mkind == MKind::PS) {
        out = out + (t_elt(b.chi) + t_elt(weyl_act(sc_, w_simple(s), b.chi))) * k;
      } else {
        out = out + t_elt(b.chi) * k;  // St, Triv, Formal all see one character
      }
    } else {
      switch (b.gkind) {
        case BasisObj::GKind::PSClass:
          out = out + r0_of_full_ps(b.chi) * k;
          break;
        case BasisObj::GKind::StdModule: {
          Elt sigma = m_elt(b.mkind == MKind::St ? st_m(b.side, b.chi) : triv_m(b.side, b.chi));
          out = out + r0(jacquet_of_induced(b.side, b.side, sigma)) * k;
          break;
        }
        case BasisObj::GKind::Constituent: {
          if (!db) throw std::runtime_error("r0: unknown constituent (no database)");
          auto r = db->constituent_r0(b.case_id, b.index);
          if (!r) throw std::runtime_error("r0: constituent not in database: " + b.case_id);
          out = out + *r * k;
          break;
        }
        default:
          throw std::runtime_error("r0: malformed basis object");
      }
    }
  }
  return out;
}

Elt Calculus::ind_t_to_m(Side s, const Elt& t) const {
  assert(t.level == Level::T);
  Elt out{m_level(s), {}};
  for (const auto& [b, k] : t.c) out.add(ps_m(s, b.chi), k);
  return out;
}

Elt Calculus::ind_m_to_g(const Elt& m) const {
  assert(m.level == Level::MA || m.level == Level::MB);
  Side s = m.level == Level::MA ? Side::Alpha : Side::Beta;
  Elt out{Level::G, {}};
  for (const auto& [b, k] : m.c) {
    if (b.mkind == MKind::PS)
      out = out + ps_class(b.chi) * k;
    else
      out = out + std_module(s, b.mkind, b.chi) * k;
  }
  return out;
}

namespace {
Elt act_t(const ScenarioPtr& sc, const Weyl& w, const Elt& t) {
  Elt out{Level::T, {}};
  for (const auto& [b, k] : t.c) {
    BasisObj nb = b;
    nb.chi = weyl_act(sc, w, b.chi);
    out.add(nb, k);
  }
  return out;
}
}  // namespace

Elt Calculus::jacquet_of_induced(Side target, Side source, const Elt& sigma) const {
  assert(sigma.level == m_level(source));
  Elt r0s = r0(sigma);
  const Weyl wa = Weyl::alpha(), wb = Weyl::beta();
  const Weyl w_ab = Weyl::reflection(Coroot::AlphaBeta);
  const Weyl w_2ab = Weyl::reflection(Coroot::TwoAlphaBeta);
  const Weyl w_3ab = Weyl::reflection(Coroot::ThreeAlphaBeta);
  if (source == Side::Alpha && target == Side::Alpha) {
    return sigma + act_wtilde(Side::Alpha, sigma) +
           ind_t_to_m(Side::Alpha, act_t(sc_, w_ab, r0s)) +
           ind_t_to_m(Side::Alpha, act_t(sc_, wb, r0s));
  }
  if (source == Side::Alpha && target == Side::Beta) {
    return ind_t_to_m(Side::Beta, r0s) + ind_t_to_m(Side::Beta, act_t(sc_, w_2ab * wa, r0s)) +
           ind_t_to_m(Side::Beta, act_t(sc_, w_3ab * wa, r0s));
  }
  if (source == Side::Beta && target == Side::Beta) {
    return sigma + act_wtilde(Side::Beta, sigma) +
           ind_t_to_m(Side::Beta, act_t(sc_, wa, r0s)) +
           ind_t_to_m(Side::Beta, act_t(sc_, w_3ab, r0s));
  }
  return ind_t_to_m(Side::Alpha, r0s) + ind_t_to_m(Side::Alpha, act_t(sc_, w_ab * wa, r0s)) +
         ind_t_to_m(Side::Alpha, act_t(sc_, wb * wa, r0s));
}

Elt Calculus::jacquet(Side target, const Elt& g, const ConstituentResolver* db) const {
  assert(g.level == Level::G);
  Elt out{m_level(target), {}};
  for (const auto& [b, k] : g.c) {
    switch (b.gkind) {
      case BasisObj::GKind::PSClass:
        out = out + jacquet_of_induced(target, target, m_elt(ps_m(target, b.chi))) * k;
        break;
      case BasisObj::GKind::StdModule: {
        Elt sigma = m_elt(b.mkind == MKind::St ? st_m(b.side, b.chi) : triv_m(b.side, b.chi));
        out = out + jacquet_of_induced(target, b.side, sigma) * k;
        break;
      }
      case BasisObj::GKind::Constituent: {
        if (!db) throw std::runtime_error("jacquet: unknown constituent (no database)");
        auto r = db->constituent_r(b.case_id, b.index, target);
        if (!r) throw std::runtime_error("jacquet: constituent not in database: " + b.case_id);
        out = out + *r * k;
        break;
      }
      default:
        throw std::runtime_error("jacquet: malformed basis object");
    }
  }
  return out;
}

Elt Calculus::act_wtilde(Side s, const Elt& m) const {
  assert(m.level == m_level(s));
  Elt out{m.level, {}};
  const Weyl wt = w_tilde(s);
  for (const auto& [b, k] : m.c) {
    TorusChar img = weyl_act(sc_, wt, b.chi);
    if (b.mkind == MKind::PS) {
      out.add(ps_m(s, img), k);
    } else if (b.mkind == MKind::St) {
      out.add(st_m(s, img), k);
    } else {
      out.add(triv_m(s, img), k);
    }
  }
  return out;
}

Elt Calculus::aubert_m(Side s, const Elt& m) const {
  assert(m.level == m_level(s));
  Elt out{m.level, {}};
  const Weyl w = w_simple(s);
  for (const auto& [b, k] : m.c) {
    if (b.mkind == MKind::PS) {
      out.add(b, k);  // GL2 principal series are Aubert-fixed
    } else if (b.mkind == MKind::St) {
      out.add(triv_m(s, weyl_act(sc_, w, b.chi)), k);
    } else {
      out.add(st_m(s, weyl_act(sc_, w, b.chi)), k);
    }
  }
  return out;
}

Elt Calculus::aubert(const Elt& g, const ConstituentResolver* db) const {
  assert(g.level == Level::G);
  Elt i_r0{Level::G, {}};
  for (const auto& [b, k] : r0(g, db).c) i_r0 = i_r0 + ps_class(b.chi) * k;
  Elt i_ra = ind_m_to_g(jacquet(Side::Alpha, g, db));
  Elt i_rb = ind_m_to_g(jacquet(Side::Beta, g, db));
  Elt out = i_r0 - i_ra - i_rb + g;
  return reduce(out, db);
}

Elt Calculus::reduce(const Elt& g, const ConstituentResolver* db) const {
  if (!db || g.level != Level::G) return g;
  Elt out{Level::G, {}};
  for (const auto& [b, k] : g.c) {
    std::optional<Elt> exp;
    if (b.gkind == BasisObj::GKind::PSClass)
      exp = db->expand_ps(b.chi);
    else if (b.gkind == BasisObj::GKind::StdModule)
      exp = db->expand_std(b.side, b.mkind, b.chi);
    if (exp)
      out = out + *exp * k;
    else
      out.add(b, k);
  }
  return out;
}

std::vector<BasisObj> Calculus::structural_relation_symbols(
    const TorusChar& orbit_rep, Side s, std::vector<std::pair<BasisObj, BasisObj>>* pairs) const {
  std::vector<BasisObj> syms;
  for (const auto& w : Weyl::all()) {
    TorusChar mu = weyl_act(sc_, w, orbit_rep);
    if (!st_defined(s, mu)) continue;
    BasisObj st = std_module(s, MKind::St, mu).c.begin()->first;
    BasisObj tv = std_module(s, MKind::Triv, weyl_act(sc_, w_simple(s), mu)).c.begin()->first;
    bool seen = false;
    for (const auto& [a, b] : *pairs)
      if (a == st && b == tv) seen = true;
    if (!seen) {
      pairs->emplace_back(st, tv);
      syms.push_back(st);
      syms.push_back(tv);
    }
  }
  return syms;
}

bool Calculus::equal_mod_structural(const Elt& x, const Elt& y) const {
  assert(x.level == y.level);
  Elt d = x - y;
  if (d.zero()) return true;

  if (x.level == Level::MA || x.level == Level::MB) {
    // M-level: PS(mu) = St(mu0) + Triv(w mu0) at GL2-reducible points.
    Side s = x.level == Level::MA ? Side::Alpha : Side::Beta;
    std::map<BasisObj, std::size_t> index;
    auto idx = [&](const BasisObj& b) {
      auto it = index.find(b);
      if (it != index.end()) return it->second;
      std::size_t i = index.size();
      index.emplace(b, i);
      return i;
    };
    std::vector<std::vector<std::pair<std::size_t, Int>>> rels;
    std::vector<TorusChar> seen_pairs;
    for (const auto& [b, k] : d.c) {
      (void)k;
      TorusChar mu = b.chi;
      for (const TorusChar& cand : {mu, weyl_act(sc_, w_simple(s), mu)}) {
        if (!st_defined(s, cand)) continue;
        if (std::find(seen_pairs.begin(), seen_pairs.end(), cand) != seen_pairs.end()) continue;
        seen_pairs.push_back(cand);
        BasisObj ps = ps_m(s, cand);
        BasisObj st = st_m(s, cand);
        BasisObj tv = triv_m(s, weyl_act(sc_, w_simple(s), cand));
        rels.push_back({{idx(ps), 1}, {idx(st), -1}, {idx(tv), -1}});
      }
    }
    for (const auto& [b, k] : d.c) idx(b);
    intlinalg::Mat m;
    for (const auto& r : rels) {
      intlinalg::Row row(index.size(), 0);
      for (const auto& [i, v] : r) row[i] += v;
      m.push_back(row);
    }
    for (auto& row : m) row.resize(index.size(), 0);
    intlinalg::Row target(index.size(), 0);
    for (const auto& [b, k] : d.c) target[index.at(b)] = k;
    return intlinalg::lattice_contains(intlinalg::hnf(m), target);
  }

  assert(x.level == Level::G);
  // Collect the orbits touched by the difference and their wall relations.
  std::vector<TorusChar> orbits;
  auto note_orbit = [&](const TorusChar& chi) {
    TorusChar rep = ps_class_rep(chi);
    if (std::find(orbits.begin(), orbits.end(), rep) == orbits.end()) orbits.push_back(rep);
  };
  for (const auto& [b, k] : d.c) {
    (void)k;
    if (b.gkind == BasisObj::GKind::Constituent) return false;  // no structural rule
    note_orbit(b.chi);
  }
  std::map<BasisObj, std::size_t> index;
  auto idx = [&](const BasisObj& b) {
    auto it = index.find(b);
    if (it != index.end()) return it->second;
    std::size_t i = index.size();
    index.emplace(b, i);
    return i;
  };
  std::vector<std::vector<std::pair<std::size_t, Int>>> rels;
  for (const auto& rep : orbits) {
    BasisObj ps = ps_class(rep).c.begin()->first;
    for (Side s : {Side::Alpha, Side::Beta}) {
      std::vector<std::pair<BasisObj, BasisObj>> pairs;
      structural_relation_symbols(rep, s, &pairs);
      for (const auto& [st, tv] : pairs)
        rels.push_back({{idx(ps), 1}, {idx(st), -1}, {idx(tv), -1}});
    }
  }
  for (const auto& [b, k] : d.c) idx(b);
  intlinalg::Mat m;
  for (const auto& r : rels) {
    intlinalg::Row row(index.size(), 0);
    for (const auto& [i, v] : r) row[i] += v;
    m.push_back(row);
  }
  for (auto& row : m) row.resize(index.size(), 0);
  intlinalg::Row target(index.size(), 0);
  for (const auto& [b, k] : d.c) target[index.at(b)] = k;
  return intlinalg::lattice_contains(intlinalg::hnf(m), target);
}

Elt Calculus::r0_of_full_ps(const TorusChar& chi) const {
  Elt out{Level::T, {}};
  for (const auto& w : Weyl::all()) out = out + t_elt(weyl_act(sc_, w, chi));
  return out;
}

std::vector<Elt> Calculus::r0_grouping(Side s, const TorusChar& chi) const {
  Elt rg = jacquet_of_induced(s, s, m_elt(ps_m(s, chi)));
  std::vector<Elt> out;
  for (const auto& [b, k] : rg.c) {
    Elt pair = r0(m_elt(b));
    for (Int i = 0; i < k; ++i) out.push_back(pair);
  }
  return out;
}

bool Calculus::aubert_identities_check(Side s, const Elt& sigma) const {
  assert(sigma.level == m_level(s));
  const Elt ig = ind_m_to_g(sigma);

  // D_G I_gamma = I_gamma D_{M_gamma}
  Elt lhs2 = aubert(ig);
  Elt rhs2 = ind_m_to_g(aubert_m(s, sigma));
  if (!equal_mod_structural(lhs2, rhs2)) return false;

  // r_gamma D_G = wt_gamma D_{M_gamma} r_gamma, applied to I_gamma(sigma)
  Elt lhs1 = jacquet(s, lhs2);
  Elt rhs1 = act_wtilde(s, aubert_m(s, jacquet(s, ig)));
  return equal_mod_structural(lhs1, rhs1);
}

std::string Calculus::to_string(const BasisObj& b) const {
  std::ostringstream os;
  switch (b.level) {
    case Level::T:
      os << chars::torus_char_str(sc_, b.chi);
      break;
    case Level::MA:
    case Level::MB: {
      const char* side = b.level == Level::MA ? "a" : "b";
      const char* kind = b.mkind == MKind::PS     ? "PS"
                         : b.mkind == MKind::St   ? "St"
                         : b.mkind == MKind::Triv ? "Triv"
                                                  : "Formal";
      os << kind << "_" << side << chars::torus_char_str(sc_, b.chi);
      break;
    }
    case Level::G:
      if (b.gkind == BasisObj::GKind::PSClass) {
        os << "I" << chars::torus_char_str(sc_, b.chi);
      } else if (b.gkind == BasisObj::GKind::StdModule) {
        os << "I_" << side_name(b.side) << "(" << (b.mkind == MKind::St ? "St" : "Triv")
           << chars::torus_char_str(sc_, b.chi) << ")";
      } else {
        os << "[" << b.case_id << "#" << b.index << "]";
      }
      break;
  }
  return os.str();
}

std::string Calculus::to_string(const Elt& e) const {
  if (e.c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, k] : e.c) {
    if (!first) os << (k > 0 ? " + " : " - ");
    else if (k < 0)
      os << "-";
    Int a = abs(k);
    if (a != 1) os << a << "*";
    os << to_string(b);
    first = false;
  }
  return os.str();
}

}  // namespace triality::groth
