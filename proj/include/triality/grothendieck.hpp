// Integer-coefficient formal calculus in the Grothendieck groups
// R(T), R(M_alpha), R(M_beta), R(G): induction and Jacquet functors by
// the geometric lemma, and the Aubert involution.
//
// Level-M basis objects are parametrized by the torus character seen
// through r_0: PS(chi) is the class of I^gamma(chi) (identified with
// PS(w_gamma chi), the GL2 swap), St(chi) / Triv(chi) are the square-
// integrable and chi o det twists pinned down by r_0 = {chi} with
// coroot pairing +1 / -1. Level-G objects are full principal-series
// classes (orbit-canonical), unexpanded standard modules I_gamma(twist),
// and named constituents resolved through a classification database.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triality/charlattice.hpp"

namespace triality::groth {

using chars::ScenarioPtr;
using chars::TorusChar;

enum class Side { Alpha, Beta };
enum class MKind { PS, St, Triv, Formal };
enum class Level { T, MA, MB, G };

inline Level m_level(Side s) { return s == Side::Alpha ? Level::MA : Level::MB; }
inline rootdata::Weyl w_simple(Side s) {
  return s == Side::Alpha ? rootdata::Weyl::alpha() : rootdata::Weyl::beta();
}
inline rootdata::Weyl w_tilde(Side s) {
  return s == Side::Alpha ? rootdata::Weyl::w_tilde_alpha() : rootdata::Weyl::w_tilde_beta();
}
inline rootdata::Coroot side_coroot(Side s) {
  return s == Side::Alpha ? rootdata::Coroot::Alpha : rootdata::Coroot::Beta;
}
inline std::string side_name(Side s) { return s == Side::Alpha ? "a" : "b"; }

struct BasisObj {
  enum class GKind { None, PSClass, StdModule, Constituent };

  Level level = Level::T;
  MKind mkind = MKind::Formal;      // levels MA/MB; Formal marks bare r_0 bookkeeping
  GKind gkind = GKind::None;        // level G
  Side side = Side::Alpha;          // StdModule side
  TorusChar chi;                    // all kinds except Constituent
  std::string case_id;              // Constituent
  int index = 0;                    // Constituent

  bool operator<(const BasisObj& o) const;
  bool operator==(const BasisObj& o) const;
};

struct Elt {
  Level level = Level::T;
  std::map<BasisObj, Int> c;

  bool zero() const { return c.empty(); }
  Elt& add(const BasisObj& b, const Int& k);
  Elt operator+(const Elt& o) const;
  Elt operator-(const Elt& o) const;
  Elt operator-() const;
  Elt operator*(const Int& k) const;
  bool operator==(const Elt& o) const { return level == o.level && c == o.c; }
};

// Database hook: resolves named constituents and expands standard
// modules / full principal series into constituent combinations.
class ConstituentResolver {
 public:
  virtual ~ConstituentResolver() = default;
  virtual std::optional<Elt> constituent_r0(const std::string& case_id, int index) const = 0;
  virtual std::optional<Elt> constituent_r(const std::string& case_id, int index, Side s) const = 0;
  virtual std::optional<Elt> expand_std(Side s, MKind kind, const TorusChar& chi) const = 0;
  virtual std::optional<Elt> expand_ps(const TorusChar& chi) const = 0;
};

class Calculus {
 public:
  explicit Calculus(ScenarioPtr sc) : sc_(std::move(sc)) {}
  const ScenarioPtr& scenario() const { return sc_; }

  // Twist definedness: St needs pairing +1 and the matching character
  // condition from the rank-1 table, Triv needs pairing -1.
  bool st_defined(Side s, const TorusChar& chi) const;
  bool triv_defined(Side s, const TorusChar& chi) const;
  // GL2-level reducibility of I^gamma(chi).
  bool ps_reducible(Side s, const TorusChar& chi) const;

  Elt t_elt(const TorusChar& chi) const;
  Elt zero(Level l) const { return Elt{l, {}}; }
  BasisObj ps_m(Side s, const TorusChar& chi) const;
  BasisObj st_m(Side s, const TorusChar& chi) const;    // throws if undefined
  BasisObj triv_m(Side s, const TorusChar& chi) const;  // throws if undefined
  Elt m_elt(const BasisObj& b) const;
  Elt ps_class(const TorusChar& chi) const;             // level G, orbit-canonical
  Elt std_module(Side s, MKind kind, const TorusChar& chi) const;
  Elt constituent(const std::string& case_id, int index) const;

  TorusChar ps_class_rep(const TorusChar& chi) const;   // orbit-canonical point

  // r_0 to level T from any level; Constituents need the resolver.
  Elt r0(const Elt& e, const ConstituentResolver* db = nullptr) const;

  // I^gamma: level T -> level M_gamma (PS classes, linear).
  Elt ind_t_to_m(Side s, const Elt& t) const;
  // I_gamma: level M_gamma -> level G.
  Elt ind_m_to_g(const Elt& m) const;

  // The four geometric-lemma formulas, extended linearly:
  //   r_a I_a(s) = s + wt_a.s + I^a(w_{a+b}.r0 s) + I^a(w_b.r0 s)
  //   r_b I_a(s) = I^b(r0 s) + I^b(w_{2a+b}w_a.r0 s) + I^b(w_{3a+b}w_a.r0 s)
  //   r_b I_b(s) = s + wt_b.s + I^b(w_a.r0 s) + I^b(w_{3a+b}.r0 s)
  //   r_a I_b(s) = I^a(r0 s) + I^a(w_{a+b}w_a.r0 s) + I^a(w_b w_a.r0 s)
  Elt jacquet_of_induced(Side target, Side source, const Elt& sigma) const;

  // Jacquet functor on level-G elements.
  Elt jacquet(Side target, const Elt& g, const ConstituentResolver* db = nullptr) const;

  // w-tilde action and the Aubert involution on level M_gamma.
  Elt act_wtilde(Side s, const Elt& m) const;
  Elt aubert_m(Side s, const Elt& m) const;

  // D_G = I r_0 - I_a r_a - I_b r_b + id; with a resolver, database-
  // covered symbols are expanded into constituents.
  Elt aubert(const Elt& g, const ConstituentResolver* db = nullptr) const;

  // Expands database-covered PSClass/StdModule symbols.
  Elt reduce(const Elt& g, const ConstituentResolver* db) const;

  // Equality modulo the structural relations
  //   PSClass(O) = StdModule(g, St, mu) + StdModule(g, Triv, w_g mu)
  // (level G), resp. PS(mu) = St(mu0) + Triv(w_g mu0) (level M).
  bool equal_mod_structural(const Elt& x, const Elt& y) const;

  // r_0(I(chi)): the 12-term orbit sum at level T.
  Elt r0_of_full_ps(const TorusChar& chi) const;
  // The M_gamma-grouping of the 12 terms into six r_0(I^gamma) pairs.
  std::vector<Elt> r0_grouping(Side s, const TorusChar& chi) const;

  // Both Aubert commutation identities for sigma at level M_gamma.
  bool aubert_identities_check(Side s, const Elt& sigma) const;

  std::string to_string(const Elt& e) const;
  std::string to_string(const BasisObj& b) const;

 private:
  std::vector<BasisObj> structural_relation_symbols(const TorusChar& orbit_rep, Side s,
                                                    std::vector<std::pair<BasisObj, BasisObj>>* pairs) const;
  ScenarioPtr sc_;
};

}  // namespace triality::groth
