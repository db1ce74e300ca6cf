#pragma once

#include <vector>

namespace ybe {

/// A permutation of {0, ..., n-1} stored as its image array: p[i] is the
/// image of i.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);

Perm identity_perm(int n);

Perm inverse_perm(const Perm& p);

/// Function composition: compose(a, b)[x] = a[b[x]] (b acts first).
Perm compose_perm(const Perm& a, const Perm& b);

/// Multiplicative order of p in Sym(n) (lcm of cycle lengths).
long long perm_order(const Perm& p);

bool is_identity_perm(const Perm& p);

/// Length of the cycle of `point` under p.
int cycle_length(const Perm& p, int point);

}  // namespace ybe
