#include "ybe/perm.hpp"

#include <numeric>

namespace ybe {

bool is_permutation(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse_perm(const Perm& p) {
  Perm inv(p.size());
  for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
  return inv;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (int i = 0; i < static_cast<int>(b.size()); ++i) c[i] = a[b[i]];
  return c;
}

long long perm_order(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  long long ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool is_identity_perm(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

int cycle_length(const Perm& p, int point) {
  int len = 1;
  for (int j = p[point]; j != point; j = p[j]) ++len;
  return len;
}

}  // namespace ybe
