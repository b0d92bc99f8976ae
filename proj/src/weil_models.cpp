#include <algorithm>
#include <stdexcept>

#include "triality/weil.hpp"

namespace triality::weil {

namespace {

// Quaternion units indexed 0:1, 1:-1, 2:i, 3:-i, 4:j, 5:-j, 6:k, 7:-k.
int q8_mul(int a, int b) {
  auto axis = [](int x) { return x / 2; };   // 0:scalar, 1:i, 2:j, 3:k
  auto sign = [](int x) { return x % 2; };   // 0:+, 1:-
  int ax = axis(a), bx = axis(b);
  int s = sign(a) ^ sign(b);
  int cx;
  if (ax == 0) cx = bx;
  else if (bx == 0) cx = ax;
  else if (ax == bx) {
    cx = 0;
    s ^= 1;  // i^2 = -1
  } else {
    // i j = k and cyclic; swap gives the opposite sign.
    int third = 6 - ax - bx;
    cx = third;
    bool forward = (ax == 1 && bx == 2) || (ax == 2 && bx == 3) || (ax == 3 && bx == 1);
    if (!forward) s ^= 1;
  }
  return 2 * cx + s;
}

GroupPtr quaternion_group() {
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) mul[a][b] = q8_mul(a, b);
  return std::make_shared<FiniteGroup>("Q8", std::move(mul));
}

// SL2(3) = C3 x| Q8 with omega cycling i -> j -> k; elements omega^k q
// encoded as k*8 + q.
int sl23_theta(int q) {  // theta(x) = omega x omega^{-1}: i->j->k->i
  static const int t[8] = {0, 1, 4, 5, 6, 7, 2, 3};
  return t[q];
}

GroupPtr sl23_group() {
  auto theta_pow = [](int q, int k) {
    for (int i = 0; i < ((k % 3) + 3) % 3; ++i) q = sl23_theta(q);
    return q;
  };
  std::vector<std::vector<int>> mul(24, std::vector<int>(24));
  for (int x = 0; x < 24; ++x)
    for (int y = 0; y < 24; ++y) {
      int k1 = x / 8, q1 = x % 8, k2 = y / 8, q2 = y % 8;
      // omega^{k1} q1 omega^{k2} q2 = omega^{k1+k2} theta^{-k2}(q1) q2.
      int q = q8_mul(theta_pow(q1, 3 - (k2 % 3)), q2);
      mul[x][y] = ((k1 + k2) % 3) * 8 + q;
    }
  return std::make_shared<FiniteGroup>("SL2(3)", std::move(mul));
}

// The faithful 2-dimensional representation of SL2(3) over Q(zeta_12):
// the quaternion matrices together with omega = -(1 + i + j + k)/2.
std::vector<MatrixRep> sl23_two_dims(const GroupPtr& g) {
  auto f = CycField::get(g->exponent());  // zeta_12
  Cyc zero = Cyc::rational(f, 0), one = Cyc::rational(f, 1);
  Cyc im = Cyc::zeta_pow(f, g->exponent() / 4);  // i
  auto mat = [&](Cyc a, Cyc b, Cyc c, Cyc d) { return CycMatrix{{a, b}, {c, d}}; };
  std::vector<CycMatrix> qm(8);
  qm[0] = mat(one, zero, zero, one);
  qm[2] = mat(im, zero, zero, -im);
  qm[4] = mat(zero, one, -one, zero);
  qm[6] = mat(zero, im, im, zero);
  for (int ax = 0; ax < 4; ++ax) {
    qm[2 * ax + 1] = qm[2 * ax];
    for (auto& row : qm[2 * ax + 1])
      for (auto& v : row) v = -v;
  }
  Cyc mh = Cyc::rational(f, Rat(-1, 2));
  CycMatrix w(2, std::vector<Cyc>(2, zero));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      w[i][j] = (qm[0][i][j] + qm[2][i][j] + qm[4][i][j] + qm[6][i][j]) * mh;

  auto mul2 = [&](const CycMatrix& a, const CycMatrix& b) {
    CycMatrix out(2, std::vector<Cyc>(2, zero));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    return out;
  };
  MatrixRep base;
  base.g = g;
  base.dim = 2;
  base.elems.resize(24);
  for (int x = 0; x < 24; ++x) base.elems[x] = x;
  base.mats.resize(24);
  for (int x = 0; x < 24; ++x) {
    int k = x / 8, q = x % 8;
    CycMatrix m = qm[q];
    for (int t = 0; t < k; ++t) m = mul2(w, m);
    base.mats[x] = std::move(m);
  }
  verify_rep(base);
  // The other two faithful 2-dims are twists by the C3 quotient characters.
  std::vector<MatrixRep> out{base};
  for (int twist = 1; twist <= 2; ++twist) {
    MatrixRep r = base;
    for (int x = 0; x < 24; ++x) {
      long k = (x / 8) * twist % 3;
      Cyc z = Cyc::zeta_pow(f, g->exponent() / 3 * k);
      for (auto& row : r.mats[x])
        for (auto& v : row) v = v * z;
    }
    verify_rep(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> range_subgroup(const GroupPtr& g, const std::vector<int>& elems) {
  std::vector<int> s = elems;
  std::sort(s.begin(), s.end());
  if (!g->is_subgroup(s)) throw std::logic_error("builtin model: not a subgroup");
  return s;
}

}  // namespace

Model builtin_model(const std::string& name) {
  Model m;
  m.name = name;
  if (name == "d8") {
    m.group = dihedral_group(4);
    m.subgroups["C4"] = range_subgroup(m.group, {0, 1, 2, 3});
  } else if (name == "q8") {
    m.group = quaternion_group();
  } else if (name == "d10") {
    m.group = dihedral_group(5);
    m.subgroups["C5"] = range_subgroup(m.group, {0, 1, 2, 3, 4});
  } else if (name == "sl23") {
    m.group = sl23_group();
    m.extra_two_dim = sl23_two_dims(m.group);
  } else if (name == "f42") {
    // C6 x| C7 with the order-6 action v -> 3v; elements u*7 + v.
    auto c6 = cyclic_group(6);
    std::vector<long> phi(6);
    long p = 1;
    for (int u = 0; u < 6; ++u) {
      phi[u] = p;
      p = p * 3 % 7;
    }
    m.group = semidirect_group("F42", *c6, 7, phi);
    std::vector<int> a, he, hk;
    for (int v = 0; v < 7; ++v) a.push_back(v);
    for (int u : {0, 3})
      for (int v = 0; v < 7; ++v) he.push_back(u * 7 + v);
    for (int u : {0, 2, 4})
      for (int v = 0; v < 7; ++v) hk.push_back(u * 7 + v);
    m.subgroups["A"] = range_subgroup(m.group, a);
    m.subgroups["H_E"] = range_subgroup(m.group, he);
    m.subgroups["H_K"] = range_subgroup(m.group, hk);
  } else if (name == "d12c13") {
    // D12 x| C13: sigma0 (the rotation) inverts, tau acts trivially.
    auto d12 = dihedral_group(6);
    std::vector<long> phi(12);
    for (int w = 0; w < 12; ++w) phi[w] = (w % 6) % 2 ==
0 ? 1 : 12;
    m.group = semidirect_group("D12xC13", *d12, 13, phi);
    auto block = [&](std::initializer_list<int> ws) {
      std::vector<int> out;
      for (int w : ws)
        for (int v = 0; v < 13; ++v) out.push_back(w * 13 + v);
      return out;
    };
    m.subgroups["A"] = range_subgroup(m.group, block({0}));
    m.subgroups["H_Ec"] = range_subgroup(m.group, block({0, 3}));
    m.subgroups["H_E"] = range_subgroup(m.group, block({0, 3, 6, 9}));
    m.subgroups["H_K"] = range_subgroup(m.group, block({0, 2, 4}));
    m.subgroups["M1"] = range_subgroup(m.group, block({0, 6}));
    m.subgroups["M2"] = range_subgroup(m.group, block({0, 9}));
  } else {
    throw std::runtime_error("unknown builtin model: " + name);
  }
  return m;
}

std::vector<std::string> builtin_model_names() {
  return {"d8", "q8", "d10", "sl23", "f42", "d12c13"};
}

}  // namespace triality::weil
