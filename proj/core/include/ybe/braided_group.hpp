#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ybe/pbw.hpp"
#include "ybe/solution.hpp"

namespace ybe {

/// An element of the structure group G(X, r) in its normal form
/// x_1^{α_1} ... x_n^{α_n} · x_1^{pκ_1} ... x_n^{pκ_n} with 0 ≤ α_i < p.
/// Two elements are equal in G iff they are componentwise equal.
struct GroupElement {
  std::vector<int> alpha;
  std::vector<long long> kappa;

  bool operator==(const GroupElement&) const = default;

  bool is_identity() const;
  /// kappa = 0: the element lies in the transversal Y.
  bool in_y() const;
  /// alpha = 0: the element lies in the free abelian subgroup F_p.
  bool in_fp() const;
};

/// Strict weak order for map keys (alpha first, then kappa, lexicographic).
struct GroupElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const;
};

/// Everything needed for arithmetic in G(X, r): the solution relabeled by a
/// good enumeration (so letters coincide with positions), its cyclic degree
/// p, and the confluent rewrite system.  Immutable after construction.
class GroupContext {
 public:
  /// Validates s, finds the good enumeration, relabels, and computes p and
  /// the rewrite system.  Throws on invalid input.
  static GroupContext make(const Solution& s);

  const Solution& solution() const { return sol_; }
  const Enumeration& enumeration() const { return enum_; }
  const RewriteSystem& rewrite_system() const { return rs_; }
  int n() const { return sol_.order(); }
  int p() const { return p_; }

  GroupElement identity() const;
  /// The generator x_i as a group element.
  GroupElement letter(int i) const;
  /// x_i^{kp}, a generator (power) of F_p.
  GroupElement fp_generator(int i, long long k = 1) const;

  /// The canonical word of an element: ascending alpha letters followed by
  /// the F_p block x_1^{pκ_1} ... x_n^{pκ_n}.
  SignedWord canonical_word(const GroupElement& g) const;

 private:
  GroupContext(Solution sol, Enumeration e, int p, RewriteSystem rs);

  Solution sol_;
  Enumeration enum_;
  int p_;
  RewriteSystem rs_;
};

/// Letterwise image of `target` under the action of `actor`, both signed
/// words over X ∪ X⁻¹.  The result has one ±1-letter per letter of the
/// expanded target; exponent signs pass through the action.
SignedWord act_word(const Solution& s, Side side, const SignedWord& actor,
                    const SignedWord& target);

/// Expands every exponent to a run of ±1 letters.
SignedWord expand_word(const SignedWord& w);

/// The reversed, sign-flipped word (the group inverse as a word).
SignedWord word_inverse(const SignedWord& w);

/// Normalizes an arbitrary signed word to its unique (alpha, kappa) form:
/// exponents are split about multiples of p, the split-off F_p factors are
/// slid to the right end picking up the right-action index permutation, and
/// the remaining positive word is reduced by the rewrite system.
GroupElement reduce_word(const GroupContext& ctx, const SignedWord& w);

GroupElement mul(const GroupContext& ctx, const GroupElement& g,
                 const GroupElement& h);

GroupElement inv(const GroupContext& ctx, const GroupElement& g);

/// ᵃu (Side::left) or uᵃ (Side::right) as a reduced element; `a` is always
/// the actor.
GroupElement act_group(const GroupContext& ctx, Side side,
                       const GroupElement& a, const GroupElement& u);

/// Membership in the socle Γ (the kernel of the action of G on itself),
/// decided by closing {g} under right actions by the letters inside the
/// finite quotient and checking that every orbit element fixes all of X.
bool in_socle(const GroupContext& ctx, const GroupElement& g);

struct FpIdealReport {
  long long checks = 0;
  /// Human-readable descriptions of failed instances; empty means the
  /// normality and invariance conditions held everywhere.
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Verifies, over all signed words a of length ≤ bound and all generators
/// W = x_i^{±p}, that (a·W)·a⁻¹ and ᵃW both land in F_p (alpha = 0).
FpIdealReport check_fp_ideal(const GroupContext& ctx, int word_length_bound);

/// The finite quotient braided group G/F_p, materialized as explicit
/// multiplication and action tables over its p^n elements.  Element index 0
/// is the unit; element i is identified by its alpha vector.
class FiniteBraidedGroup {
 public:
  static FiniteBraidedGroup from_tables(int n, int p,
                                        std::vector<std::vector<int>> elements,
                                        std::vector<std::uint32_t> mul,
                                        std::vector<std::uint32_t> left_act,
                                        std::vector<std::uint32_t> right_act);

  int n() const { return n_; }
  int p() const { return p_; }
  long long order() const { return static_cast<long long>(elements_.size()); }
  int unit() const { return 0; }

  const std::vector<int>& element(int idx) const { return elements_[idx]; }
  int index_of(const std::vector<int>& alpha) const;

  int mul(int a, int b) const { return mul_[flat(a, b)]; }
  /// ᵃu
  int left_act(int a, int u) const { return lact_[flat(a, u)]; }
  /// uᵃ
  int right_act(int a, int u) const { return ract_[flat(a, u)]; }

  /// Element label: the alpha digits rendered base p (e.g. "0101").
  std::string label(int idx) const;

  const std::vector<std::uint32_t>& mul_table() const { return mul_; }
  const std::vector<std::uint32_t>& left_act_table() const { return lact_; }
  const std::vector<std::uint32_t>& right_act_table() const { return ract_; }

 private:
  FiniteBraidedGroup() = default;

  std::size_t flat(int a, int b) const {
    return static_cast<std::size_t>(a) * elements_.size() + b;
  }

  int n_ = 0;
  int p_ = 1;
  std::vector<std::vector<int>> elements_;
  std::vector<std::uint32_t> mul_, lact_, ract_;
};

/// Builds the quotient tables by reducing products and actions of the Y
/// representatives.  Throws std::invalid_argument when p^n exceeds
/// max_order.
FiniteBraidedGroup quotient(const GroupContext& ctx,
                            long long max_order = 100000);

struct BraidedAxiomsReport {
  bool group_axioms = false;
  bool ml0 = false, ml1 = false, ml2 = false;
  bool mr0 = false, mr1 = false, mr2 = false;
  bool m3 = false;
  bool involutive = false;
  bool nondegenerate = false;
  std::optional<std::string> first_violation;

  bool ok() const {
    return group_axioms && ml0 && ml1 && ml2 && mr0 && mr1 && mr2 && m3 &&
           involutive && nondegenerate;
  }
};

/// Exhaustive table check of the braided-group axioms ML0–ML2, MR0–MR2, M3,
/// involutivity and nondegeneracy of the induced braiding, and the group
/// axioms of the multiplication table (all pairs and triples).
BraidedAxiomsReport check_braided_axioms(const FiniteBraidedGroup& g);

/// The permutation group generated by the left-action rows.
struct PermGroup {
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted closure, contains the identity

  long long order() const { return static_cast<long long>(elements.size()); }
  bool contains(const Perm& p) const;
};

PermGroup permutation_group(const Solution& s);

struct EpimorphismReport {
  bool is_homomorphism = false;
  bool surjective = false;
  bool order_divides = false;
  bool p_prime = false;
  bool image_order_p_power = false;
  long long quotient_order = 0;
  long long image_order = 0;
  long long kernel_size = 0;
  std::optional<std::string> first_violation;

  bool ok() const {
    return is_homomorphism && surjective && order_divides &&
           (!p_prime || image_order_p_power);
  }
};

/// Checks that alpha ↦ L_{x_1}^{α_1} ∘ ... ∘ L_{x_n}^{α_n} is a surjective
/// group homomorphism from the quotient onto the permutation group, that the
/// image order divides p^n, and (for prime p) that the image is a p-group.
EpimorphismReport quotient_epimorphism_check(const FiniteBraidedGroup& g,
                                             const PermGroup& pg);

}  // namespace ybe
