#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "triality/weil.hpp"

namespace triality::weil {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> mul)
    : name_(std::move(name)), mul_(std::move(mul)) {
  n_ = static_cast<int>(mul_.size());
  if (n_ == 0) throw std::runtime_error("FiniteGroup: empty table");
  for (const auto& row : mul_)
    if (static_cast<int>(row.size()) != n_) throw std::runtime_error("FiniteGroup: ragged table");

  // Identity: the unique e with e*x = x*e = x.
  e_ = -1;
  for (int a = 0; a < n_; ++a) {
    bool id = true;
    for (int b = 0; b < n_ && id; ++b)
      if (mul_[a][b] != b || mul_[b][a] != b) id = false;
    if (id) e_ = a;
  }
  if (e_ < 0) throw std::runtime_error("FiniteGroup: no identity");

  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (mul_[a][b] == e_) inv_[a] = b;
  for (int a = 0; a < n_; ++a)
    if (inv_[a] < 0) throw std::runtime_error("FiniteGroup: missing inverse");

  // Associativity: exhaustive up to 128 elements, sampled beyond.
  if (n_ <= 128) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
            throw std::runtime_error("FiniteGroup: not associative");
  } else {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> d(0, n_ - 1);
    for (int t = 0; t < 20000; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]])
        throw std::runtime_error("FiniteGroup: not associative");
    }
  }

  // Conjugacy classes.
  class_of_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    if (class_of_[a] >= 0) continue;
    std::vector<int> cls;
    int id = static_cast<int>(classes_.size());
    for (int g = 0; g < n_; ++g) {
      int x = conj(g, a);
      if (class_of_[x] < 0) {
        class_of_[x] = id;
        cls.push_back(x);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes_.push_back(std::move(cls));
  }

  exponent_ = 1;
  for (int a = 0; a < n_; ++a) exponent_ = std::lcm(exponent_, static_cast<long>(order_of(a)));
}

int FiniteGroup::order_of(int a) const {
  int k = 1, x = a;
  while (x != e_) {
    x = mul_[x][a];
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::subgroup_closure(std::vector<int> gens) const {
  std::set<int> seen{e_};
  std::vector<int> queue{e_};
  for (int g : gens)
    if (seen.insert(g).second) queue.push_back(g);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (int g : gens) {
      int x = mul_[queue[i]][g];
      if (seen.insert(x).second) queue.push_back(x);
      x = mul_[g][queue[i]];
      if (seen.insert(x).second) queue.push_back(x);
    }
  }
  return std::vector<int>(seen.begin(), seen.end());
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(e_)) return false;
  for (int a : elems)
    for (int b : elems)
      if (!s.count(mul_[a][b])) return false;
  return true;
}

std::vector<std::vector<int>> FiniteGroup::index_two_subgroups() const {
  // Kernels of surjections onto C2; each contains the (normal) subgroup
  // N generated by squares and commutators, so enumerate through the
  // small elementary abelian quotient G/N.
  std::vector<int> gens;
  for (int a = 0; a < n_; ++a) gens.push_back(mul_[a][a]);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      gens.push_back(mul_[mul_[a][b]][mul_[inv_[a]][inv_[b]]]);
  auto N = subgroup_closure(std::move(gens));
  std::vector<std::vector<int>> out;
  if (N.size() == static_cast<std::size_t>(n_)) return out;

  std::vector<int> coset(n_, -1);
  std::vector<int> reps;
  for (int a = 0; a < n_; ++a) {
    if (coset[a] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int b : N) coset[mul_[a][b]] = id;
  }
  int q = static_cast<int>(reps.size());
  if (q > 20) throw std::runtime_error("index_two_subgroups: quotient too large");
  std::vector<std::vector<int>> qmul(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) qmul[i][j] = coset[mul_[reps[i]][reps[j]]];
  int qe = coset[e_];
  for (long mask = 1; mask < (1L << q); ++mask) {
    if (!(mask & (1L << qe))) continue;
    int sz = 0;
    for (int i = 0; i < q; ++i)
      if (mask & (1L << i)) ++sz;
    if (sz * 2 != q) continue;
    bool closed = true;
    for (int i = 0; i < q && closed; ++i)
      for (int j = 0; j < q && closed; ++j)
        if ((mask & (1L << i)) && (mask & (1L << j)) && !(mask & (1L << qmul[i][j])))
          closed = false;
    if (!closed) continue;
    std::vector<int> elems;
    for (int a = 0; a < n_; ++a)
      if (mask & (1L << coset[a])) elems.push_back(a);
    out.push_back(std::move(elems));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> FiniteGroup::derived_subgroup(const std::vector<int>& elems) const {
  std::vector<int> gens;
  for (int a : elems)
    for (int b : elems) gens.push_back(mul_[mul_[a][b]][mul_[inv_[a]][inv_[b]]]);
  auto cl = subgroup_closure(std::move(gens));
  // Intersect with elems (closure lives inside the subgroup anyway).
  std::set<int> s(elems.begin(), elems.end());
  std::vector<int> out;
  for (int x : cl)
    if (s.count(x)) out.push_back(x);
  return out;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> out;
  for (int a = 0; a < n_; ++a) {
    bool central = true;
    for (int b = 0; b < n_ && central; ++b)
      if (mul_[a][b] != mul_[b][a]) central = false;
    if (central) out.push_back(a);
  }
  return out;
}

GroupPtr cyclic_group(int n) {
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  return std::make_shared<FiniteGroup>("C" + std::to_string(n), std::move(mul));
}

GroupPtr dihedral_group(int n) {
  // 0..n-1 rotations r^k, n..2n-1 reflections r^k s.
  int sz = 2 * n;
  auto code = [&](bool refl, int k) { return (refl ? n : 0) + ((k % n) + n) % n; };
  std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
  for (int a = 0; a < sz; ++a)
    for (int b = 0; b < sz; ++b) {
      bool ra = a >= n, rb = b >= n;
      int ka = a % n, kb = b % n;
      // (r^ka s^ra)(r^kb s^rb): move s past r: s r^k = r^{-k} s.
      int k = ra ? ka - kb : ka + kb;
      mul[a][b] = code(ra != rb, k);
    }
  return std::make_shared<FiniteGroup>("D" + std::to_string(2 * n), std::move(mul));
}

GroupPtr semidirect_group(const std::string& name, const FiniteGroup& w, int a,
                          const std::vector<long>& phi) {
  int wn = w.size();
  int sz = wn * a;
  for (int i = 0; i < wn; ++i)
    for (int j = 0; j < wn; ++j)
      if ((phi[i] * phi[j] - phi[w.mul(i, j)]) % a != 0)
        throw std::runtime_error("semidirect_group: phi is not a homomorphism");
  auto code = [&](int wi, int v) { return wi * a + ((v % a) + a) % a; };
  std::vector<std::vector<int>> mul(sz, std::vector<int>(sz));
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      int w1 = x / a, v1 = x % a, w2 = y / a, v2 = y % a;
      long v = (static_cast<long>(v1) * phi[w2] + v2) % a;
      mul[x][y] = code(w.mul(w1, w2), static_cast<int>(v));
    }
  return std::make_shared<FiniteGroup>(name, std::move(mul));
}

std::string model_to_text(const Model& m) {
  std::ostringstream os;
  os << "order " << m.group->size() << " exponent " << m.group->exponent() << "\n";
  for (int a = 0; a < m.group->size(); ++a) {
    for (int b = 0; b < m.group->size(); ++b) os << (b ? " " : "") << m.group->mul(a, b);
    os << "\n";
  }
  for (const auto& [name, elems] : m.subgroups) {
    os << "subgroup " << name << " :";
    for (int e : elems) os << " " << e;
    os << "\n";
  }
  return os.str();
}

Model model_from_text(const std::string& text) {
  std::istringstream in(text);
  std::string kw;
  long n = 0, m = 0;
  if (!(in >> kw >> n) || kw != "order") throw std::runtime_error("model: 'order <n>' expected");
  if (!(in >> kw >> m) || kw != "exponent")
    throw std::runtime_error("model: 'exponent <m>' expected");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      if (!(in >> mul[a][b]) || mul[a][b] < 0 || mul[a][b] >= n)
        throw std::runtime_error("model: bad multiplication table entry");
    }
  Model out;
  out.name = "file";
  out.group = std::make_shared<FiniteGroup>("file", std::move(mul));
  if (out.group->exponent() != m) throw std::runtime_error("model: exponent mismatch");
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string w, name, colon;
    if (!(ls >> w)) continue;
    if (w != "subgroup") throw std::runtime_error("model: unknown directive " + w);
    if (!(ls >> name >> colon) || colon != ":")
      throw std::runtime_error("model: subgroup <name> : <elements>");
    std::vector<int> elems;
    int x;
    while (ls >> x) elems.push_back(x);
    std::sort(elems.begin(), elems.end());
    if (!out.group->is_subgroup(elems))
      throw std::runtime_error("model: '" + name + "' is not a subgroup");
    out.subgroups[name] = std::move(elems);
  }
  return out;
}

}  // namespace triality::weil
