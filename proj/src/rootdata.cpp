#include "triality/rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace triality::rootdata {

namespace {

// Integer 2x2 action matrix on column (s1, s2).
struct M2 {
  long a, b, c, d;  // (s1, s2) -> (a s1 + b s2, c s1 + d s2)
  bool operator==(const M2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator<(const M2& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
  M2 operator*(const M2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

constexpr M2 kId{1, 0, 0, 1};
constexpr M2 kA{-1, 1, 0, 1};  // w_alpha: (s1,s2) -> (-s1+s2, s2)
constexpr M2 kB{1, 0, 3, -1};  // w_beta:  (s1,s2) -> (s1, 3s1-s2)

struct Tables {
  std::vector<std::string> word;   // canonical reduced words
  std::vector<M2> mat;
  std::vector<std::vector<int>> mul;  // mul[i][j] = index of i*j (j first)
  std::vector<int> inv;
  std::array<int, 6> reflection;      // Weyl index of each coroot reflection
  // root_action[w][c] = image of positive coroot c under w, as (coroot, sign)
  std::vector<std::array<SignedRoot, 6>> root_action;
};

const Tables& tables() {
  static const Tables t = [] {
    Tables t;
    // Breadth-first closure over words in 'a' < 'b'; 12 elements total.
    std::map<M2, int> seen;
    auto add = [&](const std::string& w, const M2& m) {
      auto it = seen.find(m);
      if (it != seen.end()) {
        // Keep the lexicographically least reduced word (the longest
        // element has two).
        std::string& cur = t.word[it->second];
        if (w.size() == cur.size() && w < cur) cur = w;
        return;
      }
      int id = static_cast<int>(t.word.size());
      seen.emplace(m, id);
      t.word.push_back(w);
      t.mat.push_back(m);
    };
    add("", kId);
    for (std::size_t i = 0; i < t.word.size(); ++i) {
      std::string w = t.word[i];
      M2 m = t.mat[i];
      // Appending a letter on the left applies it after the old word.
      add("a" + w, kA * m);
      add("b" + w, kB * m);
    }
    assert(t.word.size() == 12);
    // Re-sort by (length, lex) so index order is the canonical one.
    std::vector<int> perm(12);
    for (int i = 0; i < 12; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int x, int y) {
      if (t.word[x].size() != t.word[y].size()) return t.word[x].size() < t.word[y].size();
      return t.word[x] < t.word[y];
    });
    Tables s;
    s.word.resize(12);
    s.mat.resize(12);
    std::map<M2, int> index;
    for (int i = 0; i < 12; ++i) {
      s.word[i] = t.word[perm[i]];
      s.mat[i] = t.mat[perm[i]];
      index[s.mat[i]] = i;
    }
    s.mul.assign(12, std::vector<int>(12));
    s.inv.assign(12, 0);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) s.mul[i][j] = index.at(s.mat[i] * s.mat[j]);
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j)
        if (s.mul[i][j] == 0) s.inv[i] = j;

    // Identify the six reflections by their fixed lines / forms.
    auto form_of = [&](Coroot c) { return coroot_form(c); };
    s.root_action.assign(12, {});
    for (int w = 0; w < 12; ++w) {
      int winv = s.inv[w];
      const M2& mi = s.mat[winv];
      for (int ci = 0; ci < 6; ++ci) {
        auto [c1, c2] = form_of(kCoroots[ci]);
        // form_{w.c}(l) = form_c(w^{-1} l): compose with the matrix of w^{-1}.
        long d1 = c1 * mi.a + c2 * mi.c;
        long d2 = c1 * mi.b + c2 * mi.d;
        bool found = false;
        for (int cj = 0; cj < 6 && !found; ++cj) {
          auto [e1, e2] = form_of(kCoroots[cj]);
          if (d1 == e1 && d2 == e2) {
            s.root_action[w][ci] = {kCoroots[cj], +1};
            found = true;
          } else if (d1 == -e1 && d2 == -e2) {
            s.root_action[w][ci] = {kCoroots[cj], -1};
            found = true;
          }
        }
        assert(found);
      }
    }
    for (int ci = 0; ci < 6; ++ci) {
      bool found = false;
      for (int w = 0; w < 12 && !found; ++w) {
        if (s.word[w].size() % 2 == 0) continue;
        // A reflection in gamma negates gamma and fixes its wall.
        if (s.root_action[w][ci].root == kCoroots[ci] && s.root_action[w][ci].sign == -1 &&
            s.mul[w][w] == 0) {
          s.reflection[ci] = w;
          found = true;
        }
      }
      assert(found);
    }
    return s;
  }();
  return t;
}

int index_of_word_a() { return 1; }

}  // namespace

std::string lambda_str(const Lambda& l) {
  return "(" + rat_str(l.s1) + "," + rat_str(l.s2) + ")";
}

std::pair<int, int> coroot_form(Coroot c) {
  switch (c) {
    case Coroot::Alpha: return {2, -1};
    case Coroot::Beta: return {-3, 2};
    case Coroot::AlphaBeta: return {-1, 1};
    case Coroot::TwoAlphaBeta: return {1, 0};
    case Coroot::ThreeAlphaBeta: return {3, -1};
    case Coroot::ThreeAlphaTwoBeta: return {0, 1};
  }
  throw std::logic_error("coroot_form");
}

Rat pairing(const Lambda& l, Coroot c) {
  auto [c1, c2] = coroot_form(c);
  return Rat(c1) * l.s1 + Rat(c2) * l.s2;
}

std::string coroot_name(Coroot c) { return coroot_root_name(c) + "v"; }

std::string coroot_root_name(Coroot c) {
  switch (c) {
    case Coroot::Alpha: return "a";
    case Coroot::Beta: return "b";
    case Coroot::AlphaBeta: return "a+b";
    case Coroot::TwoAlphaBeta: return "2a+b";
    case Coroot::ThreeAlphaBeta: return "3a+b";
    case Coroot::ThreeAlphaTwoBeta: return "3a+2b";
  }
  throw std::logic_error("coroot_root_name");
}

bool coroot_is_short_root(Coroot c) {
  return c == Coroot::Alpha || c == Coroot::AlphaBeta || c == Coroot::TwoAlphaBeta;
}

Weyl Weyl::alpha() { return Weyl(index_of_word_a()); }

Weyl Weyl::beta() {
  const auto& t = tables();
  for (int i = 0; i < 12; ++i)
    if (t.word[i] == "b") return Weyl(i);
  throw std::logic_error("beta");
}

Weyl Weyl::longest() {
  const auto& t = tables();
  for (int i = 0; i < 12; ++i)
    if (t.mat[i] == M2{-1, 0, 0, -1}) return Weyl(i);
  throw std::logic_error("longest");
}

Weyl Weyl::reflection(Coroot c) {
  const auto& t = tables();
  for (int ci = 0; ci < 6; ++ci)
    if (kCoroots[ci] == c) return Weyl(t.reflection[ci]);
  throw std::logic_error("reflection");
}

const std::vector<Weyl>& Weyl::all() {
  static const std::vector<Weyl> v = [] {
    std::vector<Weyl> v;
    for (int i = 0; i < 12; ++i) v.push_back(Weyl(i));
    return v;
  }();
  return v;
}

Weyl Weyl::operator*(const Weyl& o) const { return Weyl(tables().mul[idx_][o.idx_]); }

Weyl Weyl::inverse() const { return Weyl(tables().inv[idx_]); }

const std::string& Weyl::word() const { return tables().word[idx_]; }

Lambda Weyl::apply(const Lambda& l) const {
  const M2& m = tables().mat[idx_];
  return {Rat(m.a) * l.s1 + Rat(m.b) * l.s2, Rat(m.c) * l.s1 + Rat(m.d) * l.s2};
}

SignedRoot Weyl::apply(const SignedRoot& r) const {
  for (int ci = 0; ci < 6; ++ci)
    if (kCoroots[ci] == r.root) {
      SignedRoot img = tables().root_action[idx_][ci];
      img.sign *= r.sign;
      return img;
    }
  throw std::logic_error("apply root");
}

bool is_dominant(const Lambda& l) {
  return pairing(l, Coroot::Alpha) >= 0 && pairing(l, Coroot::Beta) >= 0;
}

bool is_dominant_regular(const Lambda& l) {
  return pairing(l, Coroot::Alpha) > 0 && pairing(l, Coroot::Beta) > 0;
}

ConePosition cone_position(const Lambda& l) {
  if (l.s1 > 0 && l.s2 > 0) return ConePosition::StrictlyPositive;
  if (l.s1 >= 0 && l.s2 >= 0) return ConePosition::BoundaryNonnegative;
  return ConePosition::Outside;
}

std::vector<Lambda> orbit_multiset(const Lambda& l) {
  std::vector<Lambda> out;
  for (const auto& w : Weyl::all()) out.push_back(w.apply(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Lambda, Weyl> dominant_representative(const Lambda& l) {
  for (const auto& w : Weyl::all()) {
    Lambda img = w.apply(l);
    if (is_dominant(img)) return {img, w};
  }
  throw std::logic_error("dominant_representative: no dominant image");
}

Lambda rho_b() { return {Rat(5, 3), Rat(3)}; }

}  // namespace triality::rootdata
