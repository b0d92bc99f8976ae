// Finite-group brute-force oracle: exact cyclotomic character theory,
// induction, tensor induction, transfer, Sym^2/wedge^2/Ad, invariant
// dimensions, and the appendix criteria checked exhaustively on
// explicit finite models of Weil-group quotients.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "triality/rational.hpp"

namespace triality::weil {

// -- exact cyclotomic arithmetic ----------------------------------------------

// Shared context for Q(zeta_m): the cyclotomic polynomial and the
// reduction table for powers up to 2*deg.
class CycField {
 public:
  static std::shared_ptr<const CycField> get(long m);
  long order() const { return m_; }
  std::size_t degree() const { return phi_.size() - 1; }
  const std::vector<Int>& cyclotomic_polynomial() const { return phi_; }  // monic, ascending
  const std::vector<Rat>& power_reduced(long k) const;  // zeta^k in the power basis

 private:
  explicit CycField(long m);
  long m_;
  std::vector<Int> phi_;
  std::vector<std::vector<Rat>> powers_;  // 0 .. m-1 and beyond as needed
};

class Cyc {
 public:
  Cyc() = default;
  explicit Cyc(std::shared_ptr<const CycField> f) : f_(std::move(f)), c_(f_->degree(), Rat(0)) {}
  static Cyc rational(std::shared_ptr<const CycField> f, const Rat& r);
  static Cyc zeta_pow(std::shared_ptr<const CycField> f, long k);

  const std::shared_ptr<const CycField>& field() const { return f_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_part() const;  // requires is_rational()

  Cyc operator+(const Cyc& o) const;
  Cyc operator-(const Cyc& o) const;
  Cyc operator*(const Cyc& o) const;
  Cyc operator-() const;
  Cyc conj() const;          // complex conjugation: zeta -> zeta^{-1}
  Rat coord(std::size_t i) const { return c_.at(i); }  // power-basis coordinate
  Cyc inverse() const;       // field inverse, throws on zero
  bool operator==(const Cyc& o) const;

  std::string str() const;

 private:
  std::shared_ptr<const CycField> f_;
  std::vector<Rat> c_;
};

// -- finite groups --------------------------------------------------------------

class FiniteGroup {
 public:
  // From a multiplication table; checks associativity (exhaustively for
  // n <= 128, by sampling beyond) and group axioms.
  FiniteGroup(std::string name, std::vector<std::vector<int>> mul);

  const std::string& name() const { return name_; }
  int size() const { return n_; }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return e_; }
  long exponent() const { return exponent_; }
  int order_of(int a) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int a) const { return class_of_[a]; }
  int class_rep(int c) const { return classes_[c][0]; }

  std::vector<int> subgroup_closure(std::vector<int> gens) const;
  bool is_subgroup(const std::vector<int>& elems) const;
  std::vector<std::vector<int>> index_two_subgroups() const;
  std::vector<int> derived_subgroup(const std::vector<int>& elems) const;
  std::vector<int> center() const;

 private:
  std::string name_;
  int n_ = 0, e_ = 0;
  long exponent_ = 1;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Cyclic group written additively on 0..n-1.
GroupPtr cyclic_group(int n);
// Dihedral group of order 2n: 0..n-1 rotations, n..2n-1 reflections.
GroupPtr dihedral_group(int n);
// W x| C_a through a sign-like homomorphism phi: W -> (Z/a)^*:
// (w1,v1)(w2,v2) = (w1 w2, v1*phi(w2) + v2). Elements are w*a + v.
GroupPtr semidirect_group(const std::string& name, const FiniteGroup& w, int a,
                          const std::vector<long>& phi);

// -- class functions and matrix representations --------------------------------

struct ClassFunction {
  GroupPtr g;
  std::vector<Cyc> values;  // per conjugacy class

  const Cyc& at(int elem) const { return values[g->class_of(elem)]; }
  Cyc degree() const { return values[g->class_of(g->identity())]; }
};

ClassFunction trivial_character(const GroupPtr& g);
ClassFunction regular_character(const GroupPtr& g);
ClassFunction cf_add(const ClassFunction& x, const ClassFunction& y);
ClassFunction cf_sub(const ClassFunction& x, const ClassFunction& y);
ClassFunction cf_mul(const ClassFunction& x, const ClassFunction& y);
bool cf_equal(const ClassFunction& x, const ClassFunction& y);
Rat inner_product(const ClassFunction& x, const ClassFunction& y);

// A character of a subgroup, stored per element of the subgroup.
struct SubgroupCharacter {
  GroupPtr g;                // ambient group
  std::vector<int> elems;    // sorted subgroup elements
  std::vector<Cyc> values;   // per elems[] position

  const Cyc& at(int elem) const;
};

// All homomorphisms H -> C^* with values in mu_m (m = ambient exponent).
std::vector<SubgroupCharacter> linear_characters(const GroupPtr& g, const std::vector<int>& elems);

ClassFunction induce(const GroupPtr& g, const SubgroupCharacter& chi);
SubgroupCharacter restrict_to(const ClassFunction& chi, const std::vector<int>& elems);
SubgroupCharacter sub_mul(const SubgroupCharacter& x, const SubgroupCharacter& y);
SubgroupCharacter sub_conjugate(const SubgroupCharacter& chi, int by);  // chi^g(x) = chi(g^-1 x g)
bool sub_equal(const SubgroupCharacter& x, const SubgroupCharacter& y);
bool sub_trivial(const SubgroupCharacter& x);
Rat sub_inner(const SubgroupCharacter& x, const SubgroupCharacter& y);

// Sym^2, wedge^2 and Ad of a degree-2 character.
struct SymAltAd {
  ClassFunction sym2, alt2, ad;
};
SymAltAd sym_alt_ad(const ClassFunction& chi);

// -- matrix representations -----------------------------------------------------

using CycMatrix = std::vector<std::vector<Cyc>>;

struct MatrixRep {
  GroupPtr g;                 // ambient group
  std::vector<int> elems;     // sorted domain subgroup
  int dim = 0;
  std::vector<CycMatrix> mats;  // per elems[] position

  const CycMatrix& at(int elem) const;
  ClassFunction character_on(const GroupPtr& ambient) const;  // requires elems == full group
  SubgroupCharacter character() const;
};

// Induced monomial representation from a linear character of H.
MatrixRep induce_matrix(const GroupPtr& g, const SubgroupCharacter& chi,
                        const std::vector<int>& to_elems);

// Verifies the homomorphism property (all pairs when |H| <= 60, sampled
// otherwise); throws on failure.
void verify_rep(const MatrixRep& rep, int samples = 200);

// Tensor induction from an index-3 subgroup: the degree-d^3 matrix
// construction; `tensor_induce_character` is the independent
// orbit-product formula. Both live on the full group.
MatrixRep tensor_induce(const GroupPtr& g, const MatrixRep& phi);
ClassFunction tensor_induce_character(const GroupPtr& g, const MatrixRep& phi);
// Trace of the tensor-induced matrix at a single element (matrix route,
// built sparsely), and the rank of the averaging projector, without
// materializing the full representation.
Cyc tensor_induce_trace(const GroupPtr& g, const MatrixRep& phi, int x);
// All class-representative traces by the matrix route in one pass.
ClassFunction tensor_induce_character_matrix_route(const GroupPtr& g, const MatrixRep& phi);
Int tensor_induce_invariants_rank(const GroupPtr& g, const MatrixRep& phi);

// Transfer (Verlagerung) Q^{ab} -> H^{ab} for H <= Q inside g; the
// result maps each element of Q to an H-element well-defined modulo
// [H, H]. Uses the given transversal when provided.
std::vector<int> transfer(const GroupPtr& g, const std::vector<int>& q_elems,
                          const std::vector<int>& h_elems,
                          const std::vector<int>* transversal = nullptr);

// <chi, 1> and the independent averaging-projector rank.
Rat invariants_dim(const ClassFunction& chi);
Int invariants_rank(const MatrixRep& rep);  // requires elems == full group

// -- models ----------------------------------------------------------------------

struct Model {
  std::string name;
  GroupPtr group;
  std::map<std::string, std::vector<int>> subgroups;
  // Extra 2-dimensional irreducible representations that are not
  // induced from index-2 subgroups (e.g. the binary tetrahedral ones).
  std::vector<MatrixRep> extra_two_dim;
};

// Builtins: d8, q8, d10, sl23, f42, d12c13.
Model builtin_model(const std::string& name);
std::vector<std::string> builtin_model_names();

// Group model file format:
//   order <n> exponent <m>
//   <n rows of n integers>            (the multiplication table)
//   subgroup <name> : <elements...>
std::string model_to_text(const Model& m);
Model model_from_text(const std::string& text);

// -- appendix checks --------------------------------------------------------------

struct CheckReport {
  bool ok = true;
  std::vector<std::string> lines;     // per-item log
  std::vector<std::string> failures;  // empty iff ok
  void note(const std::string& s) { lines.push_back(s); }
  void fail(const std::string& s) {
    failures.push_back(s);
    ok = false;
  }
};

// Proposition 3.14 over all triples of 2-dim irreducibles of the model:
// nonzero invariants iff a common index-2 dihedral realization with
// chi1 chi2 chi3 = 1; includes the determinant identity and Remark 4.
CheckReport prop314_verify(const Model& m);

// Lemma 3.15 + Theorem 3.16 on a cyclic-C6 metabelian model (f42).
CheckReport lemma315_check(const Model& m);

// Theorem 3.17 + Remark 5 on a D12 metabelian model (d12c13).
CheckReport thm317_check(const Model& m);

// Tensor-induction consistency: matrix construction vs character
// formula on every class, for every registered 2-dim representation.
CheckReport tensor_induction_consistency(const Model& m);

// -- Theorem 3.7 predicates --------------------------------------------------------

struct DihedralData {
  bool self_dual = false;  // rho ~ its contragredient
  // alpha case: J_a(s, rho (x) chi2) with omega_rho chi2 o N = 1
  bool chi2_trivial = false;
  bool dihedral_over_Ec = false;    // rho = Ind_{W_Ec}^{W_E}(chi0)
  bool chi0_trivial_on_S = false;   // chi0|_S = 1
  bool chi2_norm_S_trivial = false;  // chi2 o N_{S/F} = 1
  // beta case: J_b(s, chi1 (x) rho) with omega_rho chi1 = 1
  bool chi1_trivial = false;
  bool im_tau_s3 = false;  // Im(tau) ~ S_3 (non-Galois E/F)
  // Remark 3 (non-Galois alpha family), data-level flags only
  bool remark3_gal_d12 = false;
  bool remark3_chi0_S_matching = false;
  bool remark3_central_matching = false;
  bool remark3_base_change_matching = false;
};

struct Thm37Verdict {
  bool unitarizable = false;
  bool boundary = false;
  std::string witness;
};

Thm37Verdict thm37_alpha(const DihedralData& d, const Rat& s, bool non_galois = false);
Thm37Verdict thm37_beta(const DihedralData& d, const Rat& s);

}  // namespace triality::weil
