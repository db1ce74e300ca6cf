#include "oracles.hpp"

#include <stdexcept>

namespace ybe::oracle {

bool brute_force_is_solution(const Solution& s) {
  const int n = s.order();
  for (int x = 0; x < n; ++x) {
    std::vector<bool> seen_l(n, false), seen_r(n, false);
    for (int y = 0; y < n; ++y) {
      int l = s.left(x, y), r = s.right(x, y);
      if (l < 0 || l >= n || r < 0 || r >= n || seen_l[l] || seen_r[r])
        return false;
      seen_l[l] = true;
      seen_r[r] = true;
    }
  }
  for (int x = 0; x < n; ++x)
    if (s.left(x, x) != x || s.right(x, x) != x) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int z = s.left(x, y), t = s.right(y, x);
      if (s.left(z, t) != x || s.right(t, z) != y) return false;
      if (s.right(x, s.left(x, y)) != y) return false;
      if (s.left(x, s.right(x, y)) != y) return false;
    }
  auto first = [&s](int a, int b) { return s.left(a, b); };
  auto second = [&s](int a, int b) { return s.right(b, a); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int a1 = first(x, y), b1 = second(x, y);
        int b2 = first(b1, z), c2 = second(b1, z);
        int a3 = first(a1, b2), b3 = second(a1, b2);
        int e1 = first(y, z), f1 = second(y, z);
        int d2 = first(x, e1), e2 = second(x, e1);
        int e3 = first(e2, f1), f3 = second(e2, f1);
        if (a3 != d2 || b3 != e3 || c2 != f3) return false;
      }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t size) : parent(size) {
    for (std::size_t i = 0; i < size; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::map<Word, int> monoid_classes(const Solution& s, int length) {
  const int n = s.order();
  std::size_t total = 1;
  for (int i = 0; i < length; ++i) total *= n;

  auto decode = [&](std::size_t code) {
    Word w(length);
    for (int i = length - 1; i >= 0; --i) {
      w[i] = static_cast<int>(code % n);
      code /= n;
    }
    return w;
  };
  auto encode = [&](const Word& w) {
    std::size_t code = 0;
    for (int letter : w) code = code * n + letter;
    return code;
  };

  UnionFind uf(total);
  for (std::size_t code = 0; code < total; ++code) {
    Word w = decode(code);
    for (int t = 0; t + 1 < length; ++t) {
      auto [z, t2] = s.r(w[t], w[t + 1]);
      if (z == w[t] && t2 == w[t + 1]) continue;
      Word swapped = w;
      swapped[t] = z;
      swapped[t + 1] = t2;
      uf.unite(static_cast<int>(code), static_cast<int>(encode(swapped)));
    }
  }

  std::map<Word, int> out;
  for (std::size_t code = 0; code < total; ++code)
    out[decode(code)] = uf.find(static_cast<int>(code));
  return out;
}

GroupWordOracle::GroupWordOracle(const Solution& s, int max_len)
    : n_(s.order()), max_len_(max_len) {
  if (2 * n_ > 16 || max_len > 14)
    throw std::invalid_argument("oracle encoding limits exceeded");

  // Enumerate all signed words of length <= max_len, breadth first.
  codes_.push_back(0);
  id_of_.emplace(0, 0);
  std::size_t lo = 0, hi = 1;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t next_lo = codes_.size();
    for (std::size_t i = lo; i < hi; ++i)
      for (int sym = 0; sym < 2 * n_; ++sym) {
        std::uint64_t base = codes_[i];
        int old_len = static_cast<int>(base & 0xF);
        std::uint64_t code = (base & ~0xFULL) | (old_len + 1) |
                             (static_cast<std::uint64_t>(sym)
                              << (4 + 4 * old_len));
        id_of_.emplace(code, static_cast<int>(codes_.size()));
        codes_.push_back(code);
      }
    lo = next_lo;
    hi = codes_.size();
  }

  UnionFind uf(codes_.size());
  auto unite_with = [&](std::size_t id, const SignedWord& m) {
    uf.unite(static_cast<int>(id), id_of_.at(encode(m)));
  };
  for (std::size_t id = 0; id < codes_.size(); ++id) {
    SignedWord w = word(id);
    const int len = static_cast<int>(w.size());
    for (int t = 0; t + 1 < len; ++t) {
      const SignedLetter a = w[t];
      const SignedLetter b = w[t + 1];
      if (a.exp > 0 && b.exp > 0) {
        // xy = zt with r(x, y) = (z, t)
        auto [z, t2] = s.r(a.letter, b.letter);
        if (z != a.letter || t2 != b.letter) {
          SignedWord m = w;
          m[t] = {z, 1};
          m[t + 1] = {t2, 1};
          unite_with(id, m);
        }
      }
      if (a.exp < 0 && b.exp < 0) {
        // the inverse form: y⁻¹x⁻¹ = t⁻¹z⁻¹
        auto [z, t2] = s.r(b.letter, a.letter);
        if (z != b.letter || t2 != a.letter) {
          SignedWord m = w;
          m[t] = {t2, -1};
          m[t + 1] = {z, -1};
          unite_with(id, m);
        }
      }
      if (a.letter == b.letter && a.exp == -b.exp) {
        SignedWord m;
        m.reserve(len - 2);
        for (int i = 0; i < len; ++i)
          if (i != t && i != t + 1) m.push_back(w[i]);
        unite_with(id, m);
      }
    }
  }
  parent_ = uf.parent;
}

int GroupWordOracle::class_of(const SignedWord& w) const {
  auto it = id_of_.find(encode(w));
  if (it == id_of_.end())
    throw std::invalid_argument("word outside the oracle's length bound");
  return find(it->second);
}

SignedWord GroupWordOracle::word(std::size_t id) const {
  std::uint64_t code = codes_[id];
  int len = static_cast<int>(code & 0xF);
  SignedWord w(len);
  for (int i = 0; i < len; ++i) {
    int sym = static_cast<int>((code >> (4 + 4 * i)) & 0xF);
    w[i] = {sym / 2, sym % 2 == 0 ? 1 : -1};
  }
  return w;
}

std::uint64_t GroupWordOracle::encode(const SignedWord& w) const {
  std::uint64_t code = w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    int sym = w[i].letter * 2 + (w[i].exp < 0 ? 1 : 0);
    code |= static_cast<std::uint64_t>(sym) << (4 + 4 * i);
  }
  return code;
}

int GroupWordOracle::find(int v) const {
  while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
  return v;
}

Solution sf4() {
  return Solution::from_left_action(
      4, {{0, 1, 3, 2}, {0, 1, 3, 2}, {1, 0, 2, 3}, {1, 0, 2, 3}});
}

Solution three_cycle4() {
  return Solution::from_left_action(
      4, {{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}, {1, 2, 0, 3}});
}

}  // namespace ybe::oracle
