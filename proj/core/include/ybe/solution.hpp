#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/perm.hpp"

namespace ybe {

enum class Side { left, right };

/// One factor of a word over X ∪ X⁻¹: a 0-based letter index and a nonzero
/// integer exponent.
struct SignedLetter {
  int letter = 0;
  long long exp = 1;

  bool operator==(const SignedLetter&) const = default;
};

/// A word over X ∪ X⁻¹; the empty word is the identity.
using SignedWord = std::vector<SignedLetter>;

/// A word with positive letters only.
using Word = std::vector<int>;

enum class Axiom { nondegenerate, involutive, braided, square_free, lri };

const char* axiom_name(Axiom a);

/// Witness of a failed axiom: the letter tuple (one to three indices) on
/// which the defining condition breaks.
struct Violation {
  Axiom axiom = Axiom::nondegenerate;
  std::vector<int> where;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  bool nondegenerate = false;
  bool involutive = false;
  bool braided = false;
  bool square_free = false;
  bool lri_holds = false;
  std::optional<Violation> first_violation;

  bool ok() const {
    return nondegenerate && involutive && braided && square_free && lri_holds;
  }
};

/// A finite quadratic set (X, r) with X = {0, ..., n-1}, stored as its two
/// action tables.  Row x of the left table is the permutation L_x with
/// L_x(y) = ˣy; row y of the right table is R_y with R_y(x) = xʸ.  The map
/// itself is r(x, y) = (ˣy, xʸ).  Instances are immutable and cheap to copy.
class Solution {
 public:
  /// Builds the tables from left-action rows alone, deriving each right row
  /// as the inverse permutation (the lri convention).  Throws
  /// std::invalid_argument if some row is not a permutation; no other axiom
  /// is checked here.
  static Solution from_left_action(int n, const std::vector<Perm>& left_rows);

  /// Builds from explicitly given left and right rows (both row sets must be
  /// permutations; consistency is left to validate()).
  static Solution from_tables(int n, std::vector<Perm> left_rows,
                              std::vector<Perm> right_rows);

  int order() const { return n_; }

  /// ˣy
  int left(int x, int y) const { return left_[x][y]; }
  /// xʸ (actor y, target x)
  int right(int y, int x) const { return right_[y][x]; }

  const Perm& left_row(int x) const { return left_[x]; }
  const Perm& right_row(int y) const { return right_[y]; }

  std::pair<int, int> r(int x, int y) const {
    return {left_[x][y], right_[y][x]};
  }

  bool operator==(const Solution&) const = default;

 private:
  Solution(int n, std::vector<Perm> left, std::vector<Perm> right)
      : n_(n), left_(std::move(left)), right_(std::move(right)) {}

  int n_ = 0;
  std::vector<Perm> left_;
  std::vector<Perm> right_;
};

/// The trivial solution r(x, y) = (y, x) on n letters.
Solution trivial_solution(int n);

/// Exhaustively checks all axioms: nondegeneracy of both tables, r² = id on
/// all n² pairs, the braid relation on all n³ triples, r(x,x) = (x,x), and
/// the lri cross-check (each right row is the inverse of the matching left
/// row).  Failures are reported, never thrown.
ValidationReport validate(const Solution& s);

/// The cyclic degree p: lcm of the multiplicative orders of the left-action
/// permutations.  Throws std::invalid_argument unless validate(s) passes.
int cyclic_degree(const Solution& s);

/// Action of a signed word on a single letter.  Side::left computes ᵃy
/// right-to-left over the actor's letters; Side::right computes yᵃ
/// left-to-right.  Inverse letters act through the opposite table.
int act(const Solution& s, Side side, const SignedWord& actor, int target);

/// The permutation x ↦ xᵘ of X induced by the right action of a word.
Perm right_action_perm(const Solution& s, const SignedWord& u);

/// The permutation x ↦ ᵘx of X induced by the left action of a word.
Perm left_action_perm(const Solution& s, const SignedWord& u);

/// Relabels letters by `perm` (letter x becomes perm[x]).
Solution relabel(const Solution& s, const Perm& perm);

/// True iff some bijection of the letters carries one solution onto the
/// other.  Both inputs must have equal order.
bool are_isomorphic(const Solution& a, const Solution& b);

/// All square-free solutions of order n, found by exhausting the left
/// actions with L_x(x) = x and keeping those whose derived map passes
/// validate().  With up_to_iso, one representative per relabeling orbit.
/// The result is sorted by flattened left table, so the output is
/// deterministic.  Throws std::invalid_argument when n exceeds the bound.
std::vector<Solution> enumerate_square_free(int n, bool up_to_iso,
                                            int bound = 5);

}  // namespace ybe
