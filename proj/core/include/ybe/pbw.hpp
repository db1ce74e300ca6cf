#pragma once

#include <utility>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe {

/// An ordering of the letters: perm[x] is the position (rank) of letter x in
/// the chain x_1 < x_2 < ... < x_n.  Positions are 0-based internally.
struct Enumeration {
  Perm perm;

  bool operator==(const Enumeration&) const = default;
};

/// The quadratic relations of a solution under a fixed enumeration, oriented
/// as rewrite rules x_j x_i -> x_{i'} x_{j'} for positions j > i, where
/// (x_{i'}, x_{j'}) = r(x_j, x_i).  Everything below is in position space.
///
/// The three flags record whether the rules form a confluent
/// degree-lexicographic system:
///   (a) every descent pair has a rule with j > i' and i' < j',
///   (b) every ascending pair occurs as the reduct of some rule,
///   (c) every length-3 word reduces to the same normal word under both
///       association orders.
class RewriteSystem {
 public:
  explicit RewriteSystem(int n);

  int order() const { return n_; }

  /// r-image of the position pair (j, i) with j > i.
  std::pair<int, int> image(int j, int i) const;
  void set_image(int j, int i, std::pair<int, int> im);

  /// True when the pair actually rewrites (its image differs from itself).
  bool has_rule(int j, int i) const;

  bool cond_a = false;
  bool cond_b = false;
  bool cond_c = false;

  bool pbw() const { return cond_a && cond_b && cond_c; }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> image_;
};

/// Exponent vector of an ordered monomial x_1^{γ_1} ... x_n^{γ_n}.
struct MonoidNF {
  std::vector<long long> gamma;

  bool operator==(const MonoidNF&) const = default;
};

/// Builds the rewrite rules of s under e and evaluates all three flags.
/// Requires a validated square-free solution.
RewriteSystem relations_of(const Solution& s, const Enumeration& e);

/// Searches all n! enumerations for one whose rewrite system has all three
/// flags, returning the lexicographically least such permutation.  Throws
/// std::runtime_error when none exists (impossible for a validated
/// square-free solution) and std::invalid_argument above the size bound.
Enumeration find_good_enumeration(const Solution& s, int bound = 8);

/// Fully reduces a positive word, leftmost descent first.  Requires all
/// three flags.
Word normal_form_word(const RewriteSystem& rs, Word w);

/// The unique monoid normal form of a positive word.
MonoidNF normal_form_monoid(const RewriteSystem& rs, const Word& w);

/// Overload accepting exponent notation; negative exponents are rejected.
MonoidNF normal_form_monoid(const RewriteSystem& rs, const SignedWord& w);

/// Reads the solution back off a rule set satisfying all three flags;
/// the result always passes validate().
Solution solution_from_rewrite_system(const RewriteSystem& rs);

}  // namespace ybe
