#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "triality/weil.hpp"

namespace triality::weil {

namespace {

std::shared_ptr<const CycField> field_of(const GroupPtr& g) { return CycField::get(g->exponent()); }

int position_of(const std::vector<int>& elems, int x) {
  auto it = std::lower_bound(elems.begin(), elems.end(), x);
  if (it == elems.end() || *it != x) throw std::runtime_error("element outside the subgroup");
  return static_cast<int>(it - elems.begin());
}

}  // namespace

ClassFunction trivial_character(const GroupPtr& g) {
  auto f = field_of(g);
  return {g, std::vector<Cyc>(g->num_classes(), Cyc::rational(f, 1))};
}

ClassFunction regular_character(const GroupPtr& g) {
  auto f = field_of(g);
  std::vector<Cyc> vals(g->num_classes(), Cyc::rational(f, 0));
  vals[g->class_of(g->identity())] = Cyc::rational(f, g->size());
  return {g, std::move(vals)};
}

ClassFunction cf_add(const ClassFunction& x, const ClassFunction& y) {
  ClassFunction out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = out.values[i] + y.values[i];
  return out;
}

ClassFunction cf_sub(const ClassFunction& x, const ClassFunction& y) {
  ClassFunction out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = out.values[i] - y.values[i];
  return out;
}

ClassFunction cf_mul(const ClassFunction& x, const ClassFunction& y) {
  ClassFunction out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = out.values[i] * y.values[i];
  return out;
}

bool cf_equal(const ClassFunction& x, const ClassFunction& y) {
  if (x.g != y.g || x.values.size() != y.values.size()) return false;
  for (std::size_t i = 0; i < x.values.size(); ++i)
    if (!(x.values[i] == y.values[i])) return false;
  return true;
}

Rat inner_product(const ClassFunction& x, const ClassFunction& y) {
  auto f = field_of(x.g);
  Cyc acc = Cyc::rational(f, 0);
  for (int c = 0; c < x.g->num_classes(); ++c) {
    Cyc term = x.values[c] * y.values[c].conj();
    acc = acc + term * Cyc::rational(f, Rat(x.g->classes()[c].size()));
  }
  Rat val = acc.rational_part();  // throws if not rational
  return val / Rat(x.g->size());
}

const Cyc& SubgroupCharacter::at(int elem) const { return values[position_of(elems, elem)]; }

std::vector<SubgroupCharacter> linear_characters(const GroupPtr& g, const std::vector<int>& elems) {
  auto f = field_of(g);
  long m = g->exponent();
  // Greedy generating set of the (abelian) subgroup.
  std::vector<int> gens;
  std::vector<int> span{g->identity()};
  for (int x : elems) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    gens.push_back(x);
    span = g->subgroup_closure(gens);
    if (span.size() == elems.size()) break;
  }
  // Non-abelian subgroups are fine: the result is the character group of
  // the abelianization, and the count check below adjusts accordingly.

  std::vector<SubgroupCharacter> out;
  std::vector<long> kvals(gens.size(), 0);
  // Enumerate value assignments zeta^{k_i * m / ord(g_i)} and keep the
  // consistent homomorphisms.
  auto try_all = [&](auto&& self, std::size_t i) -> void {
    if (i == gens.size()) {
      // Propagate values along words; verify multiplicativity.
      std::vector<long> expo(g->size(), -1);
      expo[g->identity()] = 0;
      std::vector<int> queue{g->identity()};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          int nx = g->mul(queue[qi], gens[gi]);
          long ord = g->order_of(gens[gi]);
          long step = (m / ord) * kvals[gi];
          long val = (expo[queue[qi]] + step) % m;
          if (expo[nx] < 0) {
            expo[nx] = val;
            queue.push_back(nx);
          } else if ((expo[nx] - val) % m != 0) {
            return;  // inconsistent assignment
          }
        }
      }
      SubgroupCharacter chi{g, elems, {}};
      for (int x : elems) {
        if (expo[x] < 0) return;
        chi.values.push_back(Cyc::zeta_pow(f, expo[x]));
      }
      // The BFS checked every Cayley edge (x, x*gen), which already forces
      // multiplicativity on the generated subgroup.
      out.push_back(std::move(chi));
      return;
    }
    long ord = g->order_of(gens[i]);
    for (long k = 0; k < ord; ++k) {
      kvals[i] = k;
      self(self, i + 1);
    }
  };
  try_all(try_all, 0);
  std::size_t expect = elems.size() / g->derived_subgroup(elems).size();
  if (out.size() != expect)
    throw std::runtime_error("linear_characters: wrong count");
  return out;
}

ClassFunction induce(const GroupPtr& g, const SubgroupCharacter& chi) {
  auto f = field_of(g);
  std::set<int> hset(chi.elems.begin(), chi.elems.end());
  std::vector<Cyc> vals;
  for (int c = 0; c < g->num_classes(); ++c) {
    int rep = g->class_rep(c);
    Cyc acc = Cyc::rational(f, 0);
    for (int x = 0; x < g->size(); ++x) {
      int y = g->conj(g->inv(x), rep);  // x^-1 rep x
      if (hset.count(y)) acc = acc + chi.at(y);
    }
    // Divide by |H|.
    vals.push_back(acc * Cyc::rational(f, Rat(1, Int(chi.elems.size()))));
  }
  return {g, std::move(vals)};
}

SubgroupCharacter restrict_to(const ClassFunction& chi, const std::vector<int>& elems) {
  SubgroupCharacter out{chi.g, elems, {}};
  for (int x : elems) out.values.push_back(chi.at(x));
  return out;
}

SubgroupCharacter sub_mul(const SubgroupCharacter& x, const SubgroupCharacter& y) {
  SubgroupCharacter out = x;
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = out.values[i] * y.values[i];
  return out;
}

SubgroupCharacter sub_conjugate(const SubgroupCharacter& chi, int by) {
  // chi^g(x) = chi(g^-1 x g); the subgroup must be stable.
  SubgroupCharacter out = chi;
  const auto& g = chi.g;
  for (std::size_t i = 0; i < chi.elems.size(); ++i)
    out.values[i] = chi.at(g->conj(g->inv(by), chi.elems[i]));
  return out;
}

bool sub_equal(const SubgroupCharacter& x, const SubgroupCharacter& y) {
  if (x.elems != y.elems) return false;
  for (std::size_t i = 0; i < x.values.size(); ++i)
    if (!(x.values[i] == y.values[i])) return false;
  return true;
}

bool sub_trivial(const SubgroupCharacter& x) {
  auto f = field_of(x.g);
  Cyc one = Cyc::rational(f, 1);
  for (const auto& v : x.values)
    if (!(v == one)) return false;
  return true;
}

Rat sub_inner(const SubgroupCharacter& x, const SubgroupCharacter& y) {
  auto f = field_of(x.g);
  Cyc acc = Cyc::rational(f, 0);
  for (std::size_t i = 0; i < x.values.size(); ++i) acc = acc + x.values[i] * y.values[i].conj();
  return acc.rational_part() / Rat(Int(x.elems.size()));
}

SymAltAd sym_alt_ad(const ClassFunction& chi) {
  if (!(chi.degree() == Cyc::rational(field_of(chi.g), 2)))
    throw std::runtime_error("sym_alt_ad: degree-2 character expected");
  auto g = chi.g;
  auto f = field_of(g);
  Cyc half = Cyc::rational(f, Rat(1, 2));
  SymAltAd out{{g, {}}, {g, {}}, {g, {}}};
  std::vector<Cyc> alt_inv;  // wedge^2 at class of g^{-1} (a linear character)
  for (int c = 0; c < g->num_classes(); ++c) {
    int rep = g->class_rep(c);
    Cyc v = chi.values[c];
    Cyc v2 = chi.at(g->mul(rep, rep));
    out.sym2.values.push_back((v * v + v2) * half);
    out.alt2.values.push_back((v * v - v2) * half);
  }
  for (int c = 0; c < g->num_classes(); ++c) {
    int rep = g->class_rep(c);
    // Ad = Sym^2 (x) det^{-1}; det^{-1}(g) = det(g^{-1}).
    Cyc det_inv = out.alt2.at(g->inv(rep));
    out.ad.values.push_back(out.sym2.values[c] * det_inv);
  }
  return out;
}

// -- matrix representations -----------------------------------------------------

const CycMatrix& MatrixRep::at(int elem) const { return mats[position_of(elems, elem)]; }

SubgroupCharacter MatrixRep::character() const {
  auto f = field_of(g);
  SubgroupCharacter out{g, elems, {}};
  for (const auto& m : mats) {
    Cyc tr = Cyc::rational(f, 0);
    for (int i = 0; i < dim; ++i) tr = tr + m[i][i];
    out.values.push_back(tr);
  }
  return out;
}

ClassFunction MatrixRep::character_on(const GroupPtr& ambient) const {
  if (static_cast<int>(elems.size()) != ambient->size())
    throw std::runtime_error("character_on: full-group representation expected");
  auto f = field_of(ambient);
  std::vector<Cyc> vals;
  for (int c = 0; c < ambient->num_classes(); ++c) {
    const CycMatrix& m = at(ambient->class_rep(c));
    Cyc tr = Cyc::rational(f, 0);
    for (int i = 0; i < dim; ++i) tr = tr + m[i][i];
    vals.push_back(tr);
  }
  return {ambient, std::move(vals)};
}

MatrixRep induce_matrix(const GroupPtr& g, const SubgroupCharacter& chi,
                        const std::vector<int>& to_elems) {
  auto f = field_of(g);
  std::set<int> hset(chi.elems.begin(), chi.elems.end());
  std::set<int> dom(to_elems.begin(), to_elems.end());
  // Left transversal of H inside the target subgroup.
  std::vector<int> ts;
  std::set<int> covered;
  for (int x : to_elems) {
    if (covered.count(x)) continue;
    ts.push_back(x);
    for (int h : chi.elems) covered.insert(g->mul(x, h));
  }
  int d = static_cast<int>(ts.size());
  MatrixRep rep;
  rep.g = g;
  rep.elems = to_elems;
  rep.dim = d;
  Cyc zero = Cyc::rational(f, 0);
  for (int x : to_elems) {
    CycMatrix m(d, std::vector<Cyc>(d, zero));
    for (int j = 0; j < d; ++j) {
      int img = g->mul(x, ts[j]);
      for (int i = 0; i < d; ++i) {
        int h = g->mul(g->inv(ts[i]), img);
        if (hset.count(h)) m[i][j] = chi.at(h);
      }
    }
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

namespace {

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b, const std::shared_ptr<const CycField>& f) {
  int n = static_cast<int>(a.size());
  CycMatrix out(n, std::vector<Cyc>(n, Cyc::rational(f, 0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

bool mat_equal(const CycMatrix& a, const CycMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

}  // namespace

void verify_rep(const MatrixRep& rep, int samples) {
  auto f = field_of(rep.g);
  std::size_t n = rep.elems.size();
  auto check = [&](int a, int b) {
    int ab = rep.g->mul(rep.elems[a], rep.elems[b]);
    if (!mat_equal(mat_mul(rep.mats[a], rep.mats[b], f), rep.at(ab)))
      throw std::runtime_error("verify_rep: not a homomorphism");
  };
  if (n <= 32) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) check(static_cast<int>(a), static_cast<int>(b));
  } else {
    std::mt19937 rng(1618);
    std::uniform_int_distribution<int> d(0, static_cast<int>(n) - 1);
    for (int t = 0; t < samples; ++t) check(d(rng), d(rng));
  }
}

namespace {

struct TiContext {
  std::vector<int> ts;
  std::set<int> hset;
};

TiContext ti_context(const GroupPtr& g, const MatrixRep& phi) {
  if (phi.elems.size() * 3 != static_cast<std::size_t>(g->size()))
    throw std::runtime_error("tensor_induce: index-3 subgroup expected");
  TiContext ctx;
  ctx.hset = std::set<int>(phi.elems.begin(), phi.elems.end());
  std::set<int> covered;
  for (int x = 0; x < g->size(); ++x) {
    if (covered.count(x)) continue;
    ctx.ts.push_back(x);
    for (int h : phi.elems) covered.insert(g->mul(x, h));
  }
  return ctx;
}

struct TiEntry {
  int row, col;
  Cyc value;
};

// Nonzero entries of the tensor-induced matrix at x.
std::vector<TiEntry> ti_entries(const GroupPtr& g, const MatrixRep& phi, const TiContext& ctx,
                                int x) {
  auto f = CycField::get(g->exponent());
  const int d = phi.dim;
  int pi[3], hj[3];
  for (int j = 0; j < 3; ++j) {
    int img = g->mul(x, ctx.ts[j]);
    pi[j] = -1;
    for (int i = 0; i < 3; ++i) {
      int h = g->mul(g->inv(ctx.ts[i]), img);
      if (ctx.hset.count(h)) {
        pi[j] = i;
        hj[j] = h;
        break;
      }
    }
    if (pi[j] < 0) throw std::logic_error("tensor_induce: coset decomposition failed");
  }
  std::vector<TiEntry> out;
  for (int b1 = 0; b1 < d; ++b1)
    for (int b2 = 0; b2 < d; ++b2)
      for (int b3 = 0; b3 < d; ++b3) {
        int bs[3] = {b1, b2, b3};
        for (int a1 = 0; a1 < d; ++a1)
          for (int a2 = 0; a2 < d; ++a2)
            for (int a3 = 0; a3 < d; ++a3) {
              int as[3] = {a1, a2, a3};
              Cyc prod = Cyc::rational(f, 1);
              bool nz = true;
              for (int j = 0; j < 3 && nz; ++j) {
                const Cyc& e = phi.at(hj[j])[as[pi[j]]][bs[j]];
                if (e.is_zero()) nz = false;
                else
                  prod = prod * e;
              }
              if (nz)
                out.push_back({(a1 * d + a2) * d + a3, (b1 * d + b2) * d + b3, std::move(prod)});
            }
      }
  return out;
}

// Monomial representations have one nonzero per column; walk it directly.
std::vector<TiEntry> ti_entries_monomial(const GroupPtr& g, const MatrixRep& phi,
                                         const TiContext& ctx, int x) {
  auto f = CycField::get(g->exponent());
  const int d = phi.dim;
  int pi[3], hj[3];
  for (int j = 0; j < 3; ++j) {
    int img = g->mul(x, ctx.ts[j]);
    pi[j] = -1;
    for (int i = 0; i < 3; ++i) {
      int h = g->mul(g->inv(ctx.ts[i]), img);
      if (ctx.hset.count(h)) {
        pi[j] = i;
        hj[j] = h;
        break;
      }
    }
    if (pi[j] < 0) throw std::logic_error("tensor_induce: coset decomposition failed");
  }
  std::vector<TiEntry> out;
  for (int b1 = 0; b1 < d; ++b1)
    for (int b2 = 0; b2 < d; ++b2)
      for (int b3 = 0; b3 < d; ++b3) {
        int bs[3] = {b1, b2, b3};
        int as[3];
        Cyc prod = Cyc::rational(f, 1);
        for (int j = 0; j < 3; ++j) {
          const CycMatrix& pm = phi.at(hj[j]);
          int row = 0;
          while (pm[row][bs[j]].is_zero()) ++row;
          as[pi[j]] = row;
          prod = prod * pm[row][bs[j]];
        }
        out.push_back({(as[0] * d + as[1]) * d + as[2], (b1 * d + b2) * d + b3, std::move(prod)});
      }
  return out;
}

bool ti_is_monomial(const MatrixRep& phi) {
  for (const auto& pm : phi.mats)
    for (int col = 0; col < phi.dim; ++col) {
      int nz = 0;
      for (int row = 0; row < phi.dim; ++row)
        if (!pm[row][col].is_zero()) ++nz;
      if (nz != 1) return false;
    }
  return true;
}

std::vector<TiEntry> ti_dispatch(const GroupPtr& g, const MatrixRep& phi, const TiContext& ctx,
                                 bool monomial, int x) {
  return monomial ? ti_entries_monomial(g, phi, ctx, x) : ti_entries(g, phi, ctx, x);
}

}  // namespace

Cyc tensor_induce_trace(const GroupPtr& g, const MatrixRep& phi, int x) {
  auto f = CycField::get(g->exponent());
  TiContext ctx = ti_context(g, phi);
  Cyc tr = Cyc::rational(f, 0);
  for (const auto& e : ti_dispatch(g, phi, ctx, ti_is_monomial(phi), x))
    if (e.row == e.col) tr = tr + e.value;
  return tr;
}

ClassFunction tensor_induce_character_matrix_route(const GroupPtr& g, const MatrixRep& phi) {
  auto f = CycField::get(g->exponent());
  TiContext ctx = ti_context(g, phi);
  bool monomial = ti_is_monomial(phi);
  std::vector<Cyc> vals;
  for (int c = 0; c < g->num_classes(); ++c) {
    Cyc tr = Cyc::rational(f, 0);
    for (const auto& e : ti_dispatch(g, phi, ctx, monomial, g->class_rep(c)))
      if (e.row == e.col) tr = tr + e.value;
    vals.push_back(tr);
  }
  return {g, std::move(vals)};
}

Int tensor_induce_invariants_rank(const GroupPtr& g, const MatrixRep& phi) {
  auto f = CycField::get(g->exponent());
  TiContext ctx = ti_context(g, phi);
  bool monomial = ti_is_monomial(phi);
  const int D = phi.dim * phi.dim * phi.dim;
  const std::size_t deg = f->degree();
  // The summed projector (times |G|) has integer coordinates; run the
  // elimination over Z[zeta] with per-row content stripping, which keeps
  // every operation gcd-free except the strip itself.
  using IPoly = std::vector<Int>;
  std::vector<std::vector<IPoly>> p(D, std::vector<IPoly>(D, IPoly(deg, 0)));
  CycMatrix acc(D, std::vector<Cyc>(D, Cyc::rational(f, 0)));
  for (int x = 0; x < g->size(); ++x)
    for (const auto& e : ti_dispatch(g, phi, ctx, monomial, x))
      acc[e.row][e.col] = acc[e.row][e.col] + e.value;
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      for (std::size_t k = 0; k < deg; ++k) {
        Rat c = acc[i][j].coord(k);
        if (den(c) != 1)
          throw std::logic_error("tensor_induce_invariants_rank: non-integral coordinate");
        p[i][j][k] = num(c);
      }
    }

  const auto& cyclo = f->cyclotomic_polynomial();
  auto is_zero = [&](const IPoly& a) {
    for (const auto& v : a)
      if (v != 0) return false;
    return true;
  };
  auto mul = [&](const IPoly& a, const IPoly& b) {
    std::vector<Int> prod(2 * deg, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j) {
        if (b[j] == 0) continue;
        prod[i + j] += a[i] * b[j];
      }
    }
    // Reduce by the monic cyclotomic polynomial.
    for (std::size_t k = 2 * deg; k-- > deg;) {
      if (prod[k] == 0) continue;
      Int lead = prod[k];
      prod[k] = 0;
      for (std::size_t i = 0; i < cyclo.size() - 1; ++i)
        prod[k - deg + i] -= lead * cyclo[i];
    }
    prod.resize(deg);
    return prod;
  };
  auto strip = [&](std::vector<IPoly>& row) {
    Int gcd_all = 0;
    for (const auto& cell : row)
      for (const auto& v : cell) gcd_all = gcd(gcd_all, v);
    if (gcd_all > 1)
      for (auto& cell : row)
        for (auto& v : cell) v /= gcd_all;
  };

  Int rank = 0;
  int row = 0;
  for (int col = 0; col < D && row < D; ++col) {
    int piv = -1;
    for (int r = row; r < D; ++r)
      if (!is_zero(p[r][col])) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(p[piv], p[row]);
    for (int r = row + 1; r < D; ++r) {
      if (is_zero(p[r][col])) continue;
      IPoly factor = p[r][col];
      for (int j = col; j < D; ++j) {
        IPoly t1 = mul(p[r][j], p[row][col]);
        IPoly t2 = mul(factor, p[row][j]);
        for (std::size_t k = 0; k < deg; ++k) p[r][j][k] = t1[k] - t2[k];
      }
      strip(p[r]);
    }
    ++row;
    ++rank;
  }
  return rank;
}

MatrixRep tensor_induce(const GroupPtr& g, const MatrixRep& phi) {
  auto f = CycField::get(g->exponent());
  TiContext ctx = ti_context(g, phi);
  bool monomial = ti_is_monomial(phi);
  const int D = phi.dim * phi.dim * phi.dim;
  MatrixRep out;
  out.g = g;
  out.elems.resize(g->size());
  for (int x = 0; x < g->size(); ++x) out.elems[x] = x;
  out.dim = D;
  Cyc zero = Cyc::rational(f, 0);
  for (int x = 0; x < g->size(); ++x) {
    CycMatrix m(D, std::vector<Cyc>(D, zero));
    for (const auto& e : ti_dispatch(g, phi, ctx, monomial, x)) m[e.row][e.col] = e.value;
    out.mats.push_back(std::move(m));
  }
  return out;
}

ClassFunction tensor_induce_character(const GroupPtr& g, const MatrixRep& phi) {
  auto f = field_of(g);
  std::set<int> hset(phi.elems.begin(), phi.elems.end());
  std::vector<int> ts;
  {
    std::set<int> covered;
    for (int x = 0; x < g->size(); ++x) {
      if (covered.count(x)) continue;
      ts.push_back(x);
      for (int h : phi.elems) covered.insert(g->mul(x, h));
    }
  }
  auto trace_of = [&](int h) {
    const CycMatrix& m = phi.at(h);
    Cyc tr = Cyc::rational(f, 0);
    for (int i = 0; i < phi.dim; ++i) tr = tr + m[i][i];
    return tr;
  };
  std::vector<Cyc> vals;
  for (int c = 0; c < g->num_classes(); ++c) {
    int x = g->class_rep(c);
    int pi[3];
    for (int j = 0; j < 3; ++j) {
      int img = g->mul(x, ts[j]);
      pi[j] = -1;
      for (int i = 0; i < 3; ++i)
        if (hset.count(g->mul(g->inv(ts[i]), img))) pi[j] = i;
    }
    // Product of phi-traces of the cycle products t_j^{-1} g^{|c|} t_j.
    Cyc val = Cyc::rational(f, 1);
    bool seen[3] = {false, false, false};
    for (int j = 0; j < 3; ++j) {
      if (seen[j]) continue;
      int len = 0, cur = j;
      do {
        seen[cur] = true;
        cur = pi[cur];
        ++len;
      } while (cur != j);
      int gp = g->identity();
      for (int t = 0; t < len; ++t) gp = g->mul(gp, x);
      int h = g->mul(g->mul(g->inv(ts[j]), gp), ts[j]);
      if (!hset.count(h)) throw std::logic_error("tensor_induce_character: cycle product outside H");
      val = val * trace_of(h);
    }
    vals.push_back(val);
  }
  return {g, std::move(vals)};
}

std::vector<int> transfer(const GroupPtr& g, const std::vector<int>& q_elems,
                          const std::vector<int>& h_elems, const std::vector<int>* transversal) {
  std::set<int> hset(h_elems.begin(), h_elems.end());
  std::vector<int> ts;
  if (transversal) {
    ts = *transversal;
  } else {
    std::set<int> covered;
    for (int x : q_elems) {
      if (covered.count(x)) continue;
      ts.push_back(x);
      for (int h : h_elems) covered.insert(g->mul(x, h));
    }
  }
  std::vector<int> out;
  for (int q : q_elems) {
    int prod = g->identity();
    for (int t : ts) {
      int img = g->mul(q, t);
      // find the transversal member representing img's coset
      int found = -1, h = -1;
      for (int t2 : ts) {
        int cand = g->mul(g->inv(t2), img);
        if (hset.count(cand)) {
          found = t2;
          h = cand;
          break;
        }
      }
      if (found < 0) throw std::logic_error("transfer: coset decomposition failed");
      prod = g->mul(prod, h);
    }
    out.push_back(prod);
  }
  return out;
}

Rat invariants_dim(const ClassFunction& chi) { return inner_product(chi, trivial_character(chi.g)); }

Int invariants_rank(const MatrixRep& rep) {
  auto f = field_of(rep.g);
  if (static_cast<int>(rep.elems.size()) != rep.g->size())
    throw std::runtime_error("invariants_rank: full-group representation expected");
  int d = rep.dim;
  CycMatrix p(d, std::vector<Cyc>(d, Cyc::rational(f, 0)));
  for (const auto& m : rep.mats)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) p[i][j] = p[i][j] + m[i][j];
  Cyc inv_n = Cyc::rational(f, Rat(1, Int(rep.g->size())));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p[i][j] = p[i][j] * inv_n;
  // Fraction-free elimination over the cyclotomic field.
  Int rank = 0;
  int row = 0;
  for (int col = 0; col < d && row < d; ++col) {
    int piv = -1;
    for (int r = row; r < d; ++r)
      if (!p[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(p[piv], p[row]);
    for (int r = row + 1; r < d; ++r) {
      if (p[r][col].is_zero()) continue;
      Cyc factor = p[r][col];
      for (int j = col; j < d; ++j)
        p[r][j] = p[r][j] * p[row][col] - factor * p[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace triality::weil
