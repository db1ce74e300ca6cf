#include "ybe/solution.hpp"

#include <array>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ybe {

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::nondegenerate:
      return "nondegenerate";
    case Axiom::involutive:
      return "involutive";
    case Axiom::braided:
      return "braided";
    case Axiom::square_free:
      return "square_free";
    case Axiom::lri:
      return "lri";
  }
  return "?";
}

namespace {

void check_rows(int n, const std::vector<Perm>& rows, const char* which) {
  if (n < 1) throw std::invalid_argument("solution order must be positive");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument(std::string(which) + " table must have n rows");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n || !is_permutation(rows[x]))
      throw std::invalid_argument("row " + std::to_string(x + 1) + " of " +
                                  which + " table is not a permutation");
  }
}

}  // namespace

Solution Solution::from_left_action(int n, const std::vector<Perm>& left_rows) {
  check_rows(n, left_rows, "left");
  std::vector<Perm> right_rows(n);
  for (int y = 0; y < n; ++y) right_rows[y] = inverse_perm(left_rows[y]);
  return Solution(n, left_rows, std::move(right_rows));
}

Solution Solution::from_tables(int n, std::vector<Perm> left_rows,
                               std::vector<Perm> right_rows) {
  check_rows(n, left_rows, "left");
  check_rows(n, right_rows, "right");
  return Solution(n, std::move(left_rows), std::move(right_rows));
}

Solution trivial_solution(int n) {
  std::vector<Perm> rows(n, identity_perm(n));
  return Solution::from_left_action(n, rows);
}

ValidationReport validate(const Solution& s) {
  const int n = s.order();
  ValidationReport rep;
  auto note = [&rep](Axiom a, std::vector<int> where) {
    if (!rep.first_violation) rep.first_violation = Violation{a, std::move(where)};
  };

  rep.nondegenerate = true;
  for (int x = 0; x < n && rep.nondegenerate; ++x) {
    if (!is_permutation(s.left_row(x)) || !is_permutation(s.right_row(x))) {
      rep.nondegenerate = false;
      note(Axiom::nondegenerate, {x});
    }
  }

  rep.square_free = true;
  for (int x = 0; x < n; ++x)
    if (s.left(x, x) != x || s.right(x, x) != x) {
      rep.square_free = false;
      note(Axiom::square_free, {x});
      break;
    }

  rep.involutive = true;
  for (int x = 0; x < n && rep.involutive; ++x)
    for (int y = 0; y < n; ++y) {
      auto [z, t] = s.r(x, y);
      if (s.r(z, t) != std::pair<int, int>{x, y}) {
        rep.involutive = false;
        note(Axiom::involutive, {x, y});
        break;
      }
    }

  // r¹²r²³r¹² = r²³r¹²r²³ on every triple.
  rep.braided = true;
  auto r12 = [&s](std::array<int, 3> v) {
    auto [a, b] = s.r(v[0], v[1]);
    return std::array<int, 3>{a, b, v[2]};
  };
  auto r23 = [&s](std::array<int, 3> v) {
    auto [a, b] = s.r(v[1], v[2]);
    return std::array<int, 3>{v[0], a, b};
  };
  for (int x = 0; x < n && rep.braided; ++x)
    for (int y = 0; y < n && rep.braided; ++y)
      for (int z = 0; z < n; ++z) {
        std::array<int, 3> v{x, y, z};
        if (r12(r23(r12(v))) != r23(r12(r23(v)))) {
          rep.braided = false;
          note(Axiom::braided, {x, y, z});
          break;
        }
      }

  rep.lri_holds = true;
  for (int y = 0; y < n && rep.lri_holds; ++y)
    for (int x = 0; x < n; ++x)
      if (s.right(y, s.left(y, x)) != x || s.left(y, s.right(y, x)) != x) {
        rep.lri_holds = false;
        note(Axiom::lri, {y, x});
        break;
      }

  return rep;
}

int cyclic_degree(const Solution& s) {
  if (!validate(s).ok())
    throw std::invalid_argument("cyclic_degree requires a validated solution");
  long long p = 1;
  for (int x = 0; x < s.order(); ++x)
    p = std::lcm(p, perm_order(s.left_row(x)));
  return static_cast<int>(p);
}

namespace {

// One signed letter acting k times on a target letter, with exponent reduced
// modulo the cycle length of the target.
int act_letter_power(const Perm& pos_row, const Perm& neg_row, long long k,
                     int target) {
  const Perm& row = k >= 0 ? pos_row : neg_row;
  long long reps = k >= 0 ? k : -k;
  reps %= cycle_length(row, target);
  int t = target;
  for (long long i = 0; i < reps; ++i) t = row[t];
  return t;
}

}  // namespace

int act(const Solution& s, Side side, const SignedWord& actor, int target) {
  const int n = s.order();
  if (target < 0 || target >= n)
    throw std::invalid_argument("act: target letter out of range");
  for (const auto& sl : actor)
    if (sl.letter < 0 || sl.letter >= n)
      throw std::invalid_argument("act: actor letter out of range");

  int t = target;
  if (side == Side::left) {
    // ML1: the rightmost factor acts first; x⁻¹ acts through the right row.
    for (auto it = actor.rbegin(); it != actor.rend(); ++it)
      t = act_letter_power(s.left_row(it->letter), s.right_row(it->letter),
                           it->exp, t);
  } else {
    // MR1: the leftmost factor acts first; x⁻¹ acts through the left row.
    for (const auto& sl : actor)
      t = act_letter_power(s.right_row(sl.letter), s.left_row(sl.letter),
                           sl.exp, t);
  }
  return t;
}

Perm right_action_perm(const Solution& s, const SignedWord& u) {
  Perm out(s.order());
  for (int x = 0; x < s.order(); ++x) out[x] = act(s, Side::right, u, x);
  return out;
}

Perm left_action_perm(const Solution& s, const SignedWord& u) {
  Perm out(s.order());
  for (int x = 0; x < s.order(); ++x) out[x] = act(s, Side::left, u, x);
  return out;
}

Solution relabel(const Solution& s, const Perm& perm) {
  const int n = s.order();
  if (static_cast<int>(perm.size()) != n || !is_permutation(perm))
    throw std::invalid_argument("relabel: not a permutation of the letters");
  std::vector<Perm> left(n, Perm(n)), right(n, Perm(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      left[perm[x]][perm[y]] = perm[s.left(x, y)];
      right[perm[y]][perm[x]] = perm[s.right(y, x)];
    }
  return Solution::from_tables(n, std::move(left), std::move(right));
}

}  // namespace ybe
