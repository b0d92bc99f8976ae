// Decidable symbolic algebra for the discrete parts of characters of
// T = E^x x F^x. A scenario is a finite hypothesis set: named character
// atoms with declared orders plus integer relations among atoms and
// their images under res (restriction to F^x) and nm (pullback along
// the norm). Both character groups are finitely presented abelian
// groups; equality is decided by integer lattice membership.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "triality/intlinalg.hpp"
#include "triality/rational.hpp"
#include "triality/rootdata.hpp"

namespace triality::chars {

enum class Domain { E, F };

struct AtomSpec {
  std::string name;
  Domain domain;
  Int order;  // 0 means infinite order
};

// A term of a relation: coefficient times atom / res(atom) / nm(atom).
// nm(res(atom)) is also accepted (the composite "chi o N_{E/F}").
enum class TermOp { Plain, Res, Nm, NmRes };

struct RelTerm {
  Int coef;
  std::string atom;
  TermOp op;
};

struct RelSpec {
  std::vector<RelTerm> terms;  // all terms must land in one domain
};

struct ScenarioSpec {
  bool galois = true;
  std::vector<AtomSpec> atoms;
  std::vector<RelSpec> relations;
};

// Element of X_E or X_F, stored as a lattice-reduced coordinate vector.
struct CharElt {
  Domain domain = Domain::E;
  intlinalg::Row v;

  bool operator==(const CharElt& o) const { return domain == o.domain && v == o.v; }
  bool operator<(const CharElt& o) const {
    if (domain != o.domain) return domain < o.domain;
    return v < o.v;
  }
};

class Scenario {
 public:
  // Throws std::runtime_error on an inconsistent hypothesis set (an
  // atom's computed order disagrees with its declaration).
  static std::shared_ptr<const Scenario> make(const ScenarioSpec& spec);

  bool galois() const { return spec_.galois; }
  const ScenarioSpec& spec() const { return spec_; }

  CharElt one(Domain d) const;           // trivial character
  CharElt atom(const std::string& name) const;
  CharElt res(const CharElt& x) const;   // X_E -> X_F
  CharElt nm(const CharElt& x) const;    // X_F -> X_E
  CharElt norm_twist(const CharElt& x) const;  // chi o N_{E/F} = nm(res(chi))
  CharElt add(const CharElt& x, const CharElt& y) const;
  CharElt neg(const CharElt& x) const;
  CharElt mul(const Int& k, const CharElt& x) const;

  bool is_trivial(const CharElt& x) const;
  bool equal(const CharElt& x, const CharElt& y) const;
  // Smallest k > 0 with x^k trivial; 0 for infinite order.
  Int order(const CharElt& x) const;

  std::string describe(const CharElt& x) const;  // e.g. "chi1^-1*nm(chi2)"

  // Parses "1", "name", "name^k", "res(...)", "nm(...)" and '*'-products.
  CharElt parse(Domain d, const std::string& expr) const;

 private:
  Scenario() = default;
  CharElt reduce(CharElt x) const;

  ScenarioSpec spec_;
  std::vector<std::string> gen_names_e_, gen_names_f_;
  std::map<std::string, std::size_t> atom_e_, atom_f_;  // atom -> gen index
  intlinalg::Mat res_, nm_;     // generator-level maps
  intlinalg::Mat lat_e_, lat_f_;  // relation lattices in HNF
};

using ScenarioPtr = std::shared_ptr<const Scenario>;

// The empty scenario: only trivial discrete characters.
ScenarioPtr trivial_scenario();

// Line-oriented text format:
//   galois true|false
//   atom <name> domain E|F order <n|inf>
//   rel <k>*<term> [<k>*<term> ...] = 0   with term = name | res(name) | nm(name)
// '#' starts a comment. Throws std::runtime_error with a diagnostic.
ScenarioSpec parse_scenario_text(const std::string& text);

// -- torus characters -------------------------------------------------------

struct TorusChar {
  rootdata::Lambda lam;
  CharElt a;  // chi_1, in X_E
  CharElt b;  // chi_2, in X_F

  bool operator==(const TorusChar& o) const { return lam == o.lam && a == o.a && b == o.b; }
  bool operator<(const TorusChar& o) const {
    if (!(lam == o.lam)) return lam < o.lam;
    if (!(a == o.a)) return a < o.a;
    return b < o.b;
  }
};

TorusChar make_torus_char(const ScenarioPtr& sc, const Rat& s1, const Rat& s2,
                          const CharElt& a, const CharElt& b);
TorusChar unramified(const ScenarioPtr& sc, const Rat& s1, const Rat& s2);

// Weyl action: w_alpha (a,b) -> (-a + nm b, b), w_beta (a,b) -> (a, res a - b),
// with the continuous part moved by rootdata::Weyl::apply.
TorusChar weyl_act(const ScenarioPtr& sc, const rootdata::Weyl& w, const TorusChar& chi);

std::vector<rootdata::Weyl> stabilizer(const ScenarioPtr& sc, const TorusChar& chi);

// Orbit multiset (12 entries, sorted).
std::vector<TorusChar> char_orbit(const ScenarioPtr& sc, const TorusChar& chi);

// Normalizes into the closed dominant chamber; returns (chi^w, w).
std::pair<TorusChar, rootdata::Weyl> dominant_char(const ScenarioPtr& sc, const TorusChar& chi);

std::string torus_char_str(const ScenarioPtr& sc, const TorusChar& chi);

// -- singular classification ------------------------------------------------

struct SingularClass {
  std::string label;                 // family tag from the singular list
  std::vector<rootdata::Weyl> stabilizer_generators;
  Int multiplicity;                  // |Stab_W(chi)|
  bool regular = false;
};

// Classifies a dominant chi against the singular-character families.
// Returns regular (multiplicity 1) when the stabilizer is trivial.
SingularClass singular_class(const ScenarioPtr& sc, const TorusChar& chi);

}  // namespace triality::chars
