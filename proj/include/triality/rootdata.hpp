// Exact geometry of the relative root system: type G2 with short root
// alpha and long root beta, the Weyl group of order 12, chamber tests
// and the six positive coroot pairings.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "triality/rational.hpp"

namespace triality::rootdata {

// Continuous torus parameter: lambda = 3*s1*alpha + s2*beta.
struct Lambda {
  Rat s1, s2;

  bool operator==(const Lambda& o) const { return s1 == o.s1 && s2 == o.s2; }
  bool operator<(const Lambda& o) const {
    if (s1 != o.s1) return s1 < o.s1;
    return s2 < o.s2;
  }
  Lambda operator-() const { return {-s1, -s2}; }
};

std::string lambda_str(const Lambda& l);

// The six positive coroots, in the order of the rank-1 reducibility table.
enum class Coroot { Alpha, Beta, AlphaBeta, TwoAlphaBeta, ThreeAlphaBeta, ThreeAlphaTwoBeta };

constexpr std::array<Coroot, 6> kCoroots = {
    Coroot::Alpha,        Coroot::Beta,          Coroot::AlphaBeta,
    Coroot::TwoAlphaBeta, Coroot::ThreeAlphaBeta, Coroot::ThreeAlphaTwoBeta};

// Linear form of the coroot pairing as (c1, c2): lambda -> c1*s1 + c2*s2.
std::pair<int, int> coroot_form(Coroot c);
Rat pairing(const Lambda& l, Coroot c);
std::string coroot_name(Coroot c);   // e.g. "(3a+2b)v"
std::string coroot_root_name(Coroot c);  // underlying root, e.g. "3a+2b"
bool coroot_is_short_root(Coroot c);  // alpha, alpha+beta, 2alpha+beta

// Signed root: +gamma or -gamma for a positive coroot gamma.
struct SignedRoot {
  Coroot root;
  int sign;  // +1 or -1
};

// One of the 12 Weyl elements. Values are cheap handles; the tables
// behind them are built once.
class Weyl {
 public:
  Weyl() : idx_(0) {}
  static Weyl identity() { return Weyl(0); }
  static Weyl alpha();             // w_alpha
  static Weyl beta();              // w_beta
  static Weyl longest();           // acts as -1
  static Weyl reflection(Coroot c);
  static Weyl w_tilde_alpha() { return reflection(Coroot::ThreeAlphaTwoBeta); }
  static Weyl w_tilde_beta() { return reflection(Coroot::TwoAlphaBeta); }

  // All 12 elements ordered by (word length, lexicographic word).
  static const std::vector<Weyl>& all();

  // Composition: (*this) * o acts by applying o first.
  Weyl operator*(const Weyl& o) const;
  Weyl inverse() const;
  bool operator==(const Weyl& o) const { return idx_ == o.idx_; }
  bool operator<(const Weyl& o) const { return idx_ < o.idx_; }

  // Canonical reduced word over {'a','b'}; "" for the identity. The
  // longest element uses "ababab" (lexicographically least of its two
  // reduced words).
  const std::string& word() const;
  std::size_t length() const { return word().size(); }
  bool is_reflection() const { return length() % 2 == 1 && (*this) * (*this) == identity(); }

  Lambda apply(const Lambda& l) const;
  // Action on roots; the sign flips when the image is a negative root.
  SignedRoot apply(const SignedRoot& r) const;
  SignedRoot apply(Coroot c) const { return apply(SignedRoot{c, +1}); }

  int index() const { return idx_; }

 private:
  explicit Weyl(int idx) : idx_(idx) {}
  int idx_;
};

// -- chamber / cone queries ------------------------------------------------

// Closed dominant chamber: 0 <= (3/2) s2 <= 3 s1 <= 2 s2, i.e. the two
// simple coroot pairings are nonnegative.
bool is_dominant(const Lambda& l);
bool is_dominant_regular(const Lambda& l);

enum class ConePosition { StrictlyPositive, BoundaryNonnegative, Outside };
ConePosition cone_position(const Lambda& l);

// Orbit as a 12-entry multiset (returned sorted, with repetitions).
std::vector<Lambda> orbit_multiset(const Lambda& l);

// Minimal-length (then lexicographically least) w with w(l) dominant;
// returns (w(l), w).
std::pair<Lambda, Weyl> dominant_representative(const Lambda& l);

// rho_B = 5 alpha + 3 beta in (s1, s2) coordinates.
Lambda rho_b();

}  // namespace triality::rootdata
