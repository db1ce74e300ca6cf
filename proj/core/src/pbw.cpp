#include "ybe/pbw.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

namespace ybe {

RewriteSystem::RewriteSystem(int n) : n_(n), image_(n * n, {-1, -1}) {
  if (n < 1) throw std::invalid_argument("rewrite system order must be positive");
}

std::pair<int, int> RewriteSystem::image(int j, int i) const {
  if (j <= i || i < 0 || j >= n_)
    throw std::invalid_argument("rewrite rule index must satisfy j > i");
  return image_[j * n_ + i];
}

void RewriteSystem::set_image(int j, int i, std::pair<int, int> im) {
  if (j <= i || i < 0 || j >= n_)
    throw std::invalid_argument("rewrite rule index must satisfy j > i");
  image_[j * n_ + i] = im;
}

bool RewriteSystem::has_rule(int j, int i) const {
  return image(j, i) != std::pair<int, int>{j, i};
}

namespace {

// One rewrite pass on a length-3 word choosing the leftmost or rightmost
// applicable descent; nullopt when already normal.
std::optional<Word> step3(const RewriteSystem& rs, const Word& w,
                          bool leftmost) {
  const int len = static_cast<int>(w.size());
  for (int k = 0; k < len - 1; ++k) {
    int t = leftmost ? k : len - 2 - k;
    if (w[t] > w[t + 1] && rs.has_rule(w[t], w[t + 1])) {
      auto [a, b] = rs.image(w[t], w[t + 1]);
      Word out = w;
      out[t] = a;
      out[t + 1] = b;
      return out;
    }
  }
  return std::nullopt;
}

// Reduces to exhaustion under one strategy, detecting cycles so that
// non-terminating rule sets are reported rather than looped on.
std::optional<Word> exhaust3(const RewriteSystem& rs, Word w, bool leftmost) {
  std::set<Word> visited;
  while (auto next = step3(rs, w, leftmost)) {
    if (!visited.insert(w).second) return std::nullopt;
    w = std::move(*next);
  }
  return w;
}

}  // namespace

RewriteSystem relations_of(const Solution& s, const Enumeration& e) {
  const int n = s.order();
  if (static_cast<int>(e.perm.size()) != n || !is_permutation(e.perm))
    throw std::invalid_argument("relations_of: enumeration is not a bijection");
  if (!validate(s).ok())
    throw std::invalid_argument("relations_of: solution does not validate");

  Solution pos = relabel(s, e.perm);
  RewriteSystem rs(n);

  rs.cond_a = true;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto [i2, j2] = pos.r(j, i);
      rs.set_image(j, i, {i2, j2});
      if (!rs.has_rule(j, i) || i2 >= j || i2 >= j2) rs.cond_a = false;
    }

  std::set<std::pair<int, int>> reducts;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (rs.has_rule(j, i)) reducts.insert(rs.image(j, i));
  rs.cond_b = true;
  for (int i = 0; i < n && rs.cond_b; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!reducts.count({i, j})) {
        rs.cond_b = false;
        break;
      }

  // Degree-3 overlap resolution over every triple, both association orders.
  rs.cond_c = true;
  for (int a = 0; a < n && rs.cond_c; ++a)
    for (int b = 0; b < n && rs.cond_c; ++b)
      for (int c = 0; c < n; ++c) {
        auto lhs = exhaust3(rs, {a, b, c}, true);
        auto rhs = exhaust3(rs, {a, b, c}, false);
        if (!lhs || !rhs || *lhs != *rhs) {
          rs.cond_c = false;
          break;
        }
      }

  return rs;
}

namespace {

// Cheap condition-(a) screen used to prune the n! search before the cubic
// overlap check runs.
bool rules_satisfy_a(const Solution& pos) {
  const int n = pos.order();
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto [i2, j2] = pos.r(j, i);
      if ((i2 == j && j2 == i) || i2 >= j || i2 >= j2) return false;
    }
  return true;
}

}  // namespace

Enumeration find_good_enumeration(const Solution& s, int bound) {
  const int n = s.order();
  if (n > bound)
    throw std::invalid_argument("find_good_enumeration: order exceeds bound " +
                                std::to_string(bound));
  if (!validate(s).ok())
    throw std::invalid_argument(
        "find_good_enumeration: solution does not validate");

  Perm perm = identity_perm(n);
  do {
    if (!rules_satisfy_a(relabel(s, perm))) continue;
    RewriteSystem rs = relations_of(s, Enumeration{perm});
    if (rs.pbw()) return Enumeration{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw std::runtime_error(
      "no good enumeration found: input violates the ordering theorem's "
      "hypotheses or the rule evaluation is broken");
}

Word normal_form_word(const RewriteSystem& rs, Word w) {
  if (!rs.pbw())
    throw std::invalid_argument(
        "normal_form requires a rewrite system with all flags set");
  const long long cap =
      1000000 + 100LL * static_cast<long long>(w.size()) * w.size();
  long long steps = 0;
  int t = 0;
  while (t + 1 < static_cast<int>(w.size())) {
    if (w[t] > w[t + 1]) {
      auto [a, b] = rs.image(w[t], w[t + 1]);
      w[t] = a;
      w[t + 1] = b;
      if (++steps > cap)
        throw std::runtime_error("rewriting exceeded its step bound");
      if (t > 0) --t;  // a new descent can only appear one slot back
    } else {
      ++t;
    }
  }
  return w;
}

MonoidNF normal_form_monoid(const RewriteSystem& rs, const Word& w) {
  for (int letter : w)
    if (letter < 0 || letter >= rs.order())
      throw std::invalid_argument("normal_form_monoid: letter out of range");
  Word nf = normal_form_word(rs, w);
  MonoidNF result{std::vector<long long>(rs.order(), 0)};
  for (int letter : nf) ++result.gamma[letter];
  return result;
}

MonoidNF normal_form_monoid(const RewriteSystem& rs, const SignedWord& w) {
  Word flat;
  for (const auto& sl : w) {
    if (sl.exp < 0)
      throw std::invalid_argument(
          "normal_form_monoid: negative exponents belong to the group");
    for (long long i = 0; i < sl.exp; ++i) flat.push_back(sl.letter);
  }
  return normal_form_monoid(rs, flat);
}

Solution solution_from_rewrite_system(const RewriteSystem& rs) {
  if (!rs.pbw())
    throw std::invalid_argument(
        "solution_from_rewrite_system requires all flags set");
  const int n = rs.order();
  std::vector<Perm> left(n, Perm(n, -1)), right(n, Perm(n, -1));
  for (int x = 0; x < n; ++x) {
    left[x][x] = x;
    right[x][x] = x;
  }
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      auto [i2, j2] = rs.image(j, i);
      left[j][i] = i2;   // ʲi
      right[i][j] = j2;  // jⁱ
      left[i2][j2] = j;  // the involutive mirror r(i2, j2) = (j, i)
      right[j2][i2] = i;
    }
  Solution s = Solution::from_tables(n, std::move(left), std::move(right));
  if (!validate(s).ok())
    throw std::runtime_error(
        "rewrite system does not define a square-free solution");
  return s;
}

}  // namespace ybe
