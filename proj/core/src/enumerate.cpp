#include <algorithm>
#include <set>
#include <stdexcept>

#include "ybe/solution.hpp"

namespace ybe {

namespace {

std::vector<Perm> perms_fixing(int n, int x) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    if (p[x] == x) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Involutivity and the braid relation evaluated straight off candidate rows,
// with the right action taken as the rowwise inverse.
bool candidate_is_solution(int n, const std::vector<const Perm*>& L,
                           const std::vector<const Perm*>& Linv) {
  auto r1 = [&](int x, int y) { return (*L[x])[y]; };
  auto r2 = [&](int x, int y) { return (*Linv[y])[x]; };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int z = r1(x, y), t = r2(x, y);
      if (r1(z, t) != x || r2(z, t) != y) return false;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        // r12 r23 r12
        int a1 = r1(x, y), b1 = r2(x, y);
        int b2 = r1(b1, z), c2 = r2(b1, z);
        int a3 = r1(a1, b2), b3 = r2(a1, b2);
        // r23 r12 r23
        int e1 = r1(y, z), f1 = r2(y, z);
        int d2 = r1(x, e1), e2 = r2(x, e1);
        int e3 = r1(e2, f1), f3 = r2(e2, f1);
        if (a3 != d2 || b3 != e3 || c2 != f3) return false;
      }
  return true;
}

std::vector<int> flatten_left(const Solution& s) {
  std::vector<int> flat;
  flat.reserve(s.order() * s.order());
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y) flat.push_back(s.left(x, y));
  return flat;
}

std::vector<int> min_relabeling(const Solution& s) {
  const int n = s.order();
  std::vector<int> best;
  Perm sigma = identity_perm(n);
  do {
    std::vector<int> cand(n * n);
    Perm inv = inverse_perm(sigma);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        cand[a * n + b] = sigma[s.left(inv[a], inv[b])];
    if (best.empty() || cand < best) best = std::move(cand);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

Solution from_flat(int n, const std::vector<int>& flat) {
  std::vector<Perm> rows(n, Perm(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) rows[x][y] = flat[x * n + y];
  return Solution::from_left_action(n, rows);
}

}  // namespace

std::vector<Solution> enumerate_square_free(int n, bool up_to_iso, int bound) {
  if (n < 1) throw std::invalid_argument("enumerate_square_free: n must be positive");
  if (n > bound)
    throw std::invalid_argument("enumerate_square_free: n exceeds the bound " +
                                std::to_string(bound));

  std::vector<std::vector<Perm>> choices(n);
  std::vector<std::vector<Perm>> inverses(n);
  for (int x = 0; x < n; ++x) {
    choices[x] = perms_fixing(n, x);
    for (const Perm& p : choices[x]) inverses[x].push_back(inverse_perm(p));
  }

  std::vector<int> idx(n, 0);
  std::vector<const Perm*> L(n), Linv(n);
  std::set<std::vector<int>> seen;
  std::vector<Solution> out;

  // Odometer over all assignments x ↦ L_x with L_x(x) = x.
  for (;;) {
    for (int x = 0; x < n; ++x) {
      L[x] = &choices[x][idx[x]];
      Linv[x] = &inverses[x][idx[x]];
    }
    if (candidate_is_solution(n, L, Linv)) {
      std::vector<Perm> rows(n);
      for (int x = 0; x < n; ++x) rows[x] = *L[x];
      Solution s = Solution::from_left_action(n, rows);
      std::vector<int> key = up_to_iso ? min_relabeling(s) : flatten_left(s);
      if (seen.insert(key).second)
        out.push_back(up_to_iso ? from_flat(n, key) : std::move(s));
    }
    int pos = n - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(choices[pos].size()))
      idx[pos--] = 0;
    if (pos < 0) break;
  }

  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) {
    return flatten_left(a) < flatten_left(b);
  });
  return out;
}

bool are_isomorphic(const Solution& a, const Solution& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  Perm sigma = identity_perm(n);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (sigma[a.left(x, y)] != b.left(sigma[x], sigma[y])) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace ybe
