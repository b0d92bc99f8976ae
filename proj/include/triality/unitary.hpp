// Hermitian-dual criterion, tempered-nondiscrete reducibility lines,
// degenerate-series unitarity bounds, the unitarity classifiers for the
// maximal-parabolic and Borel-supported Langlands quotients, and the
// region sampler behind the spherical-unitary-dual figure.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triality/classify.hpp"

namespace triality::unitary {

using chars::CharElt;
using chars::ScenarioPtr;
using classify::JDatum;
using classify::ParabolicKind;
using groth::Side;

enum class Verdict { Unitary, NonUnitary, IsolatedUnitary, Boundary };
std::string verdict_str(Verdict v);

struct UnitarityVerdict {
  Verdict verdict = Verdict::NonUnitary;
  std::string witness;
  bool is_unitary() const { return verdict != Verdict::NonUnitary; }
};

// Hermitian criterion: there must be a Weyl element fixing the tempered
// part and negating the exponent. Decided mechanically on the torus
// datum; `shape` names the matched printed bullet, or flags a scenario
// outside the printed bullet list.
struct HermitianResult {
  bool hermitian = false;
  std::string shape;
};
HermitianResult is_hermitian(const ScenarioPtr& sc, const JDatum& d);

// Lemma 3.1 reducibility for the four tempered-nondiscrete families.
enum class L31Shape {
  AlphaPair,  // I_a(s, I^a(chi1, chi1^-1 chi2oN) (x) chi2), chi1^2 = chi2^2 = 1
  AlphaSelf,  // I_a(s, I^a(chi1, chi1^-1) (x) 1)
  BetaPair,   // I_b(s, chi1^-1 (x) I^b(chi2, chi1|F chi2^-1)), chi1^2 = chi2^2 = 1
  BetaSelf,   // I_b(s, 1 (x) I^b(chi2, chi2^-1)), chi2 != 1
};
bool lemma31_reducibility(const ScenarioPtr& sc, L31Shape shape, const Rat& s,
                          const CharElt& chi1, const CharElt& chi2);

// The full torus character underlying each Lemma 3.1 family (the
// independent route: rank-1 reducibility on the orbit).
chars::TorusChar l31_character(const ScenarioPtr& sc, L31Shape shape, const Rat& s,
                               const CharElt& chi1, const CharElt& chi2);

// Lemma 3.3: unitarity of the det-twist degenerate series away from
// reducibility points (strict bounds).
bool lemma33_unitary(Side side, const Rat& s);

// Theorem 3.4 clauses (i)-(vi), dispatched on the datum's shape.
UnitarityVerdict thm34_unitarity(const ScenarioPtr& sc, const JDatum& d);

// Lemma 3.5 reducibility segments inside the open chamber.
struct Segment {
  std::string family;     // e.g. "(s1,1,chi1,1;1/2<s1<2/3)"
  Rat x0, y0;             // start point
  Rat x1, y1;             // end point, or a direction when unbounded
  bool bounded = true;
};
std::vector<Segment> lemma35_lines(const ScenarioPtr& sc, const CharElt& chi1,
                                   const CharElt& chi2);

// Theorem 3.6 for J(s1, s2, chi1, chi2) in the open chamber.
UnitarityVerdict thm36_unitarity(const ScenarioPtr& sc, const Rat& s1, const Rat& s2,
                                 const CharElt& chi1, const CharElt& chi2);

// Verdict for a classified constituent (through its Langlands datum;
// square-integrable and tempered pieces are unitary outright).
UnitarityVerdict constituent_unitarity(const ScenarioPtr& sc, const classify::Constituent& c);

// -- region sampling ----------------------------------------------------------

struct RegionNode {
  Rat s1, s2;
  UnitarityVerdict v;
  bool in_chamber = false;
  bool on_line = false;
};

struct IsolatedPoint {
  Rat s1, s2;
  std::string label;
};

struct Region {
  int n = 0;
  Rat x0, x1, y0, y1;
  std::vector<RegionNode> nodes;  // row-major: nodes[j*n + i], s2 outer
  std::vector<Segment> overlays;
  std::vector<IsolatedPoint> isolated;
};

// Exact verdicts on an n x n rational grid over [x0,x1] x [y0,y1].
Region region_sample(const ScenarioPtr& sc, const CharElt& chi1, const CharElt& chi2, const Rat& x0,
                     const Rat& x1, const Rat& y0, const Rat& y1, int n);

std::string region_csv(const ScenarioPtr& sc, const Region& r);
std::string region_svg(const ScenarioPtr& sc, const Region& r);

// Corollary 3.8 check over a database: every unitary-flagged constituent
// has a unitary-flagged Aubert partner. Returns the failures (empty on
// success).
std::vector<std::string> aubert_unitarity_mismatches(const classify::Database& db);

}  // namespace triality::unitary
