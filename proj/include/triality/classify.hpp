// Rank-1 reducibility sets, the worked-case engine with machine-checked
// conservation, Casselman temperedness flags, Langlands data, and the
// constituent database behind table regeneration and Aubert queries.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triality/grothendieck.hpp"

namespace triality::classify {

using chars::CharElt;
using chars::ScenarioPtr;
using chars::TorusChar;
using groth::Side;

enum class Temperedness { SquareIntegrable, Tempered, NonTempered };
std::string temperedness_str(Temperedness t);

// Throws on signed (virtual) input.
Temperedness temperedness(const groth::Elt& exponents);

// -- rank 1 reducibility -----------------------------------------------------

struct ReducibilityEntry {
  rootdata::Coroot coroot;
  std::string witness;  // which table row fired, e.g. "2s1-s2=1 & chi1^2=chi2oN"
};

struct ReducibilitySet {
  std::vector<ReducibilityEntry> entries;
  bool contains(rootdata::Coroot c) const;
  std::size_t size() const { return entries.size(); }
};

// Per-row evaluation of the rank-1 table; chi must be dominant.
ReducibilitySet rank1_set(const ScenarioPtr& sc, const TorusChar& chi);

// Corollary 2.1: reducibility of I_gamma(s, delta-twist).
bool gps_reducibility(const ScenarioPtr& sc, Side side, const Rat& s, const CharElt& chi1,
                      const CharElt& chi2);

// -- Langlands data ----------------------------------------------------------

enum class ParabolicKind { B, PAlpha, PBeta, G };

// Datum of a Langlands-quotient-shaped class: J(lam; chi1, chi2) for B,
// J_gamma(s, sigma (x) twist) for a maximal parabolic, tempered for G.
struct JDatum {
  ParabolicKind parabolic = ParabolicKind::G;
  enum class SigmaKind { None, Delta, UnitaryPS };
  SigmaKind sigma = SigmaKind::None;
  Rat s;                   // maximal-parabolic exponent (s > 0 normalized)
  rootdata::Lambda lam;    // B exponent (dominant interior)
  CharElt e_slot, f_slot;  // chi1- and chi2-slots
  CharElt sigma_char;      // delta(sigma_char) or I^gamma(sigma_char, sigma_char2)
  CharElt sigma_char2;
};

std::string jdatum_str(const ScenarioPtr& sc, const JDatum& d);

// Langlands datum of the full principal series at chi (normalized first).
JDatum langlands_datum(const ScenarioPtr& sc, const TorusChar& chi);

// Datum of the twist class St/Triv at a torus character (the delta- or
// det-twist standard module I_gamma(s, ...)), normalized to s >= 0.
JDatum twist_datum(const ScenarioPtr& sc, Side side, groth::MKind kind, const TorusChar& chi);

// -- constituents and reports ------------------------------------------------

struct Constituent {
  std::string label;
  std::string role;  // "subrepresentation" | "subquotient" | "Langlands quotient" |
                     // "irreducible" | "tempered piece"
  Int mult = 1;
  bool jacquet_known = true;
  groth::Elt jacquet;  // level T
  Temperedness temp = Temperedness::NonTempered;
  int aubert_partner = -1;
  bool reconstructed = false;
  std::string printed_note;  // verbatim printed (signed) list, when it differs
  std::optional<JDatum> datum;
};

enum class KeysReading { Corrected, Verbatim };

struct Report {
  ScenarioPtr sc;
  TorusChar input;
  TorusChar normalized;
  rootdata::Weyl normalizer;
  chars::SingularClass singular;
  ReducibilitySet rset;
  std::string family;              // matched family id, or "generic #R=..." etc.
  bool unclassified = false;
  std::string alias_of;            // nonempty when I(chi) was rewritten, e.g. case F7
  Int length = 1;
  Int max_mult = 1;
  std::vector<Constituent> constituents;
  std::string keys_note;           // R-group discrepancy flag for the unitary branch
};

// The classification entry point. Never guesses: characters outside the
// encoded families and the generic branches come back unclassified.
Report classify(const ScenarioPtr& sc, const TorusChar& chi,
                KeysReading reading = KeysReading::Corrected);

// -- database ----------------------------------------------------------------

// A classified case instance registered for Grothendieck-level queries:
// standard modules and the full principal series expand into constituents.
class Database {
 public:
  struct Entry {
    std::string case_id;
    ScenarioPtr sc;
    Report report;
    // canonical G-level symbols -> constituent combinations
    std::vector<std::pair<groth::BasisObj, groth::Elt>> expansions;
  };

  // Registers the report's case (computing expansions); returns case_id.
  std::string add(const groth::Calculus& calc, const Report& report);
  const Entry* find(const std::string& case_id) const;
  const std::vector<Entry>& entries() const { return entries_; }

  std::optional<groth::Elt> constituent_r0(const std::string& case_id, int index) const;
  std::optional<groth::Elt> constituent_r(const std::string& case_id, int index, Side s) const;

 private:
  std::vector<Entry> entries_;
};

// Resolver view of the database bound to one scenario: character
// coordinates are presentation-specific, so expansions only apply to
// symbols from the scenario they were computed in.
class ScopedDatabase : public groth::ConstituentResolver {
 public:
  ScopedDatabase(std::shared_ptr<const Database> db, ScenarioPtr sc)
      : db_(std::move(db)), sc_(std::move(sc)) {}

  std::optional<groth::Elt> constituent_r0(const std::string& case_id, int index) const override;
  std::optional<groth::Elt> constituent_r(const std::string& case_id, int index,
                                          Side s) const override;
  std::optional<groth::Elt> expand_std(Side s, groth::MKind kind,
                                       const TorusChar& chi) const override;
  std::optional<groth::Elt> expand_ps(const TorusChar& chi) const override;

 private:
  std::shared_ptr<const Database> db_;
  ScenarioPtr sc_;
};

// All worked cases of the classification at their minimal scenarios.
struct CanonicalCase {
  std::string id;
  ScenarioPtr sc;
  TorusChar chi;
};
std::vector<CanonicalCase> canonical_cases(bool galois = true);

// Builds the database of every canonical case.
std::shared_ptr<Database> build_database(bool galois = true);

// Exponents of square-integrable principal-series constituents across
// the database, plus the symbolic non-PS families (rendered as text).
struct SpecialExponents {
  std::vector<rootdata::Lambda> principal_series;  // finite, sorted
  std::vector<std::string> symbolic;               // delta- and supercuspidal-supported families
};
SpecialExponents special_exponents();

// M-level lift of a nonnegative level-T element into PS/St/Triv packages
// (used for constituent Jacquet modules; exact, asserts consistency).
groth::Elt lift_to_m(const groth::Calculus& calc, Side side, const groth::Elt& t_elt);

}  // namespace triality::classify
