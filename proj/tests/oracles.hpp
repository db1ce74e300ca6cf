#pragma once

// Test-only oracles, deliberately independent of the rewriting and
// normal-form machinery they are used to check.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "ybe/solution.hpp"

namespace ybe::oracle {

/// Re-derives every axiom straight from the tables with fresh loops (no call
/// into validate()).
bool brute_force_is_solution(const Solution& s);

/// Exact congruence classes of all positive words of one fixed length under
/// the closure of the quadratic relations (which preserve length): the class
/// id of each word, computed by union-find over relation swaps, no
/// rewriting involved.
std::map<Word, int> monoid_classes(const Solution& s, int length);

/// Bounded congruence closure of the group presentation over signed words:
/// relation swaps on positive and on inverse pairs, plus free cancellation,
/// all inside the space of words of length <= max_len.  Every merge is a
/// genuine equality in G, so equal classes are a sound (if incomplete)
/// equality witness.
class GroupWordOracle {
 public:
  GroupWordOracle(const Solution& s, int max_len);

  int max_len() const { return max_len_; }
  std::size_t word_count() const { return codes_.size(); }

  /// Class id of a word (exponents must be ±1 and length <= max_len).
  int class_of(const SignedWord& w) const;

  /// Decoded word for each id, in enumeration order.
  SignedWord word(std::size_t id) const;

 private:
  std::uint64_t encode(const SignedWord& w) const;
  int find(int v) const;

  int n_;
  int max_len_;
  std::vector<std::uint64_t> codes_;
  std::unordered_map<std::uint64_t, int> id_of_;
  mutable std::vector<int> parent_;
};

/// Fixture: the order-4 solution with L_1 = L_2 = (3 4), L_3 = L_4 = (1 2).
Solution sf4();

/// Fixture: the order-4 solution whose only nontrivial action is the
/// 3-cycle L_4 = (1 2 3); its cyclic degree is 3.
Solution three_cycle4();

}  // namespace ybe::oracle
