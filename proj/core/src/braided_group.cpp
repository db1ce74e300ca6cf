#include "ybe/braided_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ybe {

bool GroupElement::is_identity() const { return in_y() && in_fp(); }

bool GroupElement::in_y() const {
  return std::all_of(kappa.begin(), kappa.end(),
                     [](long long k) { return k == 0; });
}

bool GroupElement::in_fp() const {
  return std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
}

bool GroupElementLess::operator()(const GroupElement& a,
                                  const GroupElement& b) const {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  return a.kappa < b.kappa;
}

GroupContext::GroupContext(Solution sol, Enumeration e, int p, RewriteSystem rs)
    : sol_(std::move(sol)), enum_(std::move(e)), p_(p), rs_(std::move(rs)) {}

GroupContext GroupContext::make(const Solution& s) {
  if (!validate(s).ok())
    throw std::invalid_argument("make_context: solution does not validate");
  Enumeration e = find_good_enumeration(s);
  Solution pos = relabel(s, e.perm);
  int p = cyclic_degree(pos);
  RewriteSystem rs = relations_of(pos, Enumeration{identity_perm(s.order())});
  return GroupContext(std::move(pos), std::move(e), p, std::move(rs));
}

GroupElement GroupContext::identity() const {
  return GroupElement{std::vector<int>(n(), 0),
                      std::vector<long long>(n(), 0)};
}

GroupElement GroupContext::letter(int i) const {
  if (i < 0 || i >= n()) throw std::invalid_argument("letter out of range");
  return reduce_word(*this, {{i, 1}});
}

GroupElement GroupContext::fp_generator(int i, long long k) const {
  if (i < 0 || i >= n()) throw std::invalid_argument("letter out of range");
  GroupElement g = identity();
  g.kappa[i] = k;
  return g;
}

SignedWord GroupContext::canonical_word(const GroupElement& g) const {
  SignedWord w;
  for (int i = 0; i < n(); ++i)
    if (g.alpha[i] != 0) w.push_back({i, g.alpha[i]});
  for (int i = 0; i < n(); ++i)
    if (g.kappa[i] != 0) w.push_back({i, g.kappa[i] * p_});
  return w;
}

SignedWord expand_word(const SignedWord& w) {
  SignedWord out;
  for (const auto& sl : w) {
    if (sl.exp == 0)
      throw std::invalid_argument("signed words carry nonzero exponents");
    long long reps = sl.exp > 0 ? sl.exp : -sl.exp;
    for (long long i = 0; i < reps; ++i)
      out.push_back({sl.letter, sl.exp > 0 ? 1 : -1});
  }
  return out;
}

SignedWord word_inverse(const SignedWord& w) {
  SignedWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->letter, -it->exp});
  return out;
}

namespace {

// Action of one ±1 letter on another; the target's sign passes through, the
// actor's sign selects the table (inverse letters act by the opposite row).
SignedLetter letter_act(const Solution& s, Side side, const SignedLetter& actor,
                        const SignedLetter& target) {
  int img;
  if (side == Side::left)
    img = actor.exp > 0 ? s.left(actor.letter, target.letter)
                        : s.right(actor.letter, target.letter);
  else
    img = actor.exp > 0 ? s.right(actor.letter, target.letter)
                        : s.left(actor.letter, target.letter);
  return {img, target.exp};
}

// ML2 chain: one letter acting on a word from the left.
SignedWord act_one_left(const Solution& s, SignedLetter actor,
                        const SignedWord& u) {
  SignedWord out;
  out.reserve(u.size());
  for (const auto& eta : u) {
    out.push_back(letter_act(s, Side::left, actor, eta));
    actor = letter_act(s, Side::right, eta, actor);
  }
  return out;
}

// MR2 chain: one letter acting on a word from the right (rightmost target
// letter is hit first).
SignedWord act_one_right(const Solution& s, const SignedWord& u,
                         SignedLetter actor) {
  SignedWord out(u.size());
  for (int i = static_cast<int>(u.size()) - 1; i >= 0; --i) {
    out[i] = letter_act(s, Side::right, actor, u[i]);
    actor = letter_act(s, Side::left, u[i], actor);
  }
  return out;
}

}  // namespace

SignedWord act_word(const Solution& s, Side side, const SignedWord& actor,
                    const SignedWord& target) {
  SignedWord a = expand_word(actor);
  SignedWord u = expand_word(target);
  if (side == Side::left) {
    // ML1: rightmost actor letter first.
    for (auto it = a.rbegin(); it != a.rend(); ++it)
      u = act_one_left(s, *it, u);
  } else {
    // MR1: leftmost actor letter first.
    for (const auto& zeta : a) u = act_one_right(s, u, zeta);
  }
  return u;
}

GroupElement reduce_word(const GroupContext& ctx, const SignedWord& w) {
  const int n = ctx.n();
  const int p = ctx.p();
  const Solution& sol = ctx.solution();

  struct Seg {
    int letter;
    int beta;     // 0 ≤ beta < p, the part kept in the positive word
    long long m;  // the F_p exponent split off: x^k = x^beta · x^{pm}
  };
  std::vector<Seg> segs;
  segs.reserve(w.size());
  for (const auto& sl : w) {
    if (sl.letter < 0 || sl.letter >= n)
      throw std::invalid_argument("reduce_word: letter out of range");
    if (sl.exp == 0)
      throw std::invalid_argument("reduce_word: exponents must be nonzero");
    long long m = sl.exp >= 0 ? sl.exp / p : -((-sl.exp + p - 1) / p);
    segs.push_back({sl.letter, static_cast<int>(sl.exp - m * p), m});
  }

  // Slide every F_p factor to the right end.  Walking right to left, sigma
  // is the right-action permutation of the positive letters already passed,
  // so a factor x_i^{pm} lands on position sigma(i) (F_p is abelian, and it
  // acts trivially on everything it passes).
  std::vector<long long> kappa(n, 0);
  Perm sigma = identity_perm(n);
  Word tail;
  for (auto it = segs.rbegin(); it != segs.rend(); ++it) {
    if (it->m != 0) kappa[sigma[it->letter]] += it->m;
    const Perm& row = sol.right_row(it->letter);
    for (int c = 0; c < it->beta; ++c) {
      Perm next(n);
      for (int x = 0; x < n; ++x) next[x] = sigma[row[x]];
      sigma = std::move(next);
      tail.push_back(it->letter);
    }
  }
  std::reverse(tail.begin(), tail.end());

  Word nf = normal_form_word(ctx.rewrite_system(), std::move(tail));
  std::vector<long long> gamma(n, 0);
  for (int letter : nf) ++gamma[letter];

  // Split gamma_i = alpha_i + p·delta_i and slide each x_i^{p·delta_i} past
  // the ascending alpha suffix to its right.
  GroupElement out{std::vector<int>(n, 0), std::move(kappa)};
  Perm suffix_sigma = identity_perm(n);
  for (int i = n - 1; i >= 0; --i) {
    long long delta = gamma[i] / p;
    out.alpha[i] = static_cast<int>(gamma[i] - delta * p);
    if (delta != 0) out.kappa[suffix_sigma[i]] += delta;
    const Perm& row = sol.right_row(i);
    for (int c = 0; c < out.alpha[i]; ++c) {
      Perm next(n);
      for (int x = 0; x < n; ++x) next[x] = suffix_sigma[row[x]];
      suffix_sigma = std::move(next);
    }
  }
  return out;
}

namespace {

void check_element(const GroupContext& ctx, const GroupElement& g,
                   const char* who) {
  if (static_cast<int>(g.alpha.size()) != ctx.n() ||
      static_cast<int>(g.kappa.size()) != ctx.n())
    throw std::invalid_argument(std::string(who) +
                                ": element size does not match the context");
  for (int a : g.alpha)
    if (a < 0 || a >= ctx.p())
      throw std::invalid_argument(std::string(who) +
                                  ": alpha entry out of range");
}

SignedWord concat(SignedWord a, const SignedWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

GroupElement mul(const GroupContext& ctx, const GroupElement& g,
                 const GroupElement& h) {
  check_element(ctx, g, "mul");
  check_element(ctx, h, "mul");
  return reduce_word(ctx,
                     concat(ctx.canonical_word(g), ctx.canonical_word(h)));
}

GroupElement inv(const GroupContext& ctx, const GroupElement& g) {
  check_element(ctx, g, "inv");
  return reduce_word(ctx, word_inverse(ctx.canonical_word(g)));
}

GroupElement act_group(const GroupContext& ctx, Side side,
                       const GroupElement& a, const GroupElement& u) {
  check_element(ctx, a, "act_group");
  check_element(ctx, u, "act_group");
  SignedWord image = act_word(ctx.solution(), side, ctx.canonical_word(a),
                              ctx.canonical_word(u));
  return reduce_word(ctx, image);
}

bool in_socle(const GroupContext& ctx, const GroupElement& g) {
  check_element(ctx, g, "in_socle");
  const int n = ctx.n();

  // The W-part acts trivially on letters, so socle membership and the orbit
  // under right actions by letters both depend on alpha alone; the orbit
  // lives in the finite quotient and the closure terminates.
  auto fixes_all_letters = [&](const std::vector<int>& alpha) {
    SignedWord word;
    for (int i = 0; i < n; ++i)
      if (alpha[i] != 0) word.push_back({i, alpha[i]});
    for (int x = 0; x < n; ++x)
      if (act(ctx.solution(), Side::left, word, x) != x) return false;
    return true;
  };

  std::vector<GroupElement> letters;
  for (int i = 0; i < n; ++i) letters.push_back(ctx.letter(i));

  std::set<std::vector<int>> seen{g.alpha};
  std::deque<std::vector<int>> queue{g.alpha};
  while (!queue.empty()) {
    std::vector<int> a = std::move(queue.front());
    queue.pop_front();
    if (!fixes_all_letters(a)) return false;
    GroupElement rep{a, std::vector<long long>(n, 0)};
    for (int i = 0; i < n; ++i) {
      GroupElement next = act_group(ctx, Side::right, letters[i], rep);
      if (seen.insert(next.alpha).second) queue.push_back(next.alpha);
    }
  }
  return true;
}

namespace {

std::string word_str(const SignedWord& w) {
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << (w[i].letter + 1);
    if (w[i].exp != 1) os << '^' << w[i].exp;
  }
  return w.empty() ? "1" : os.str();
}

}  // namespace

FpIdealReport check_fp_ideal(const GroupContext& ctx, int word_length_bound) {
  if (word_length_bound < 1)
    throw std::invalid_argument("check_fp_ideal: bound must be at least 1");
  const int n = ctx.n();
  FpIdealReport rep;

  std::vector<SignedWord> frontier{SignedWord{}};
  for (int len = 0; len <= word_length_bound; ++len) {
    std::vector<SignedWord> next;
    for (const SignedWord& a : frontier) {
      GroupElement ga = reduce_word(ctx, a);
      GroupElement ga_inv = inv(ctx, ga);
      for (int i = 0; i < n; ++i)
        for (int sgn : {1, -1}) {
          GroupElement w = ctx.fp_generator(i, sgn);
          ++rep.checks;
          if (!mul(ctx, mul(ctx, ga, w), ga_inv).in_fp())
            rep.violations.push_back("normality fails for a = " + word_str(a) +
                                     ", W = x" + std::to_string(i + 1) +
                                     "^" + std::to_string(sgn * ctx.p()));
          ++rep.checks;
          if (!act_group(ctx, Side::left, ga, w).in_fp())
            rep.violations.push_back("invariance fails for a = " +
                                     word_str(a) + ", W = x" +
                                     std::to_string(i + 1) + "^" +
                                     std::to_string(sgn * ctx.p()));
        }
      if (len < word_length_bound)
        for (int i = 0; i < n; ++i)
          for (int sgn : {1, -1}) {
            SignedWord longer = a;
            longer.push_back({i, sgn});
            next.push_back(std::move(longer));
          }
    }
    frontier = std::move(next);
  }
  return rep;
}

FiniteBraidedGroup FiniteBraidedGroup::from_tables(
    int n, int p, std::vector<std::vector<int>> elements,
    std::vector<std::uint32_t> mul, std::vector<std::uint32_t> left_act,
    std::vector<std::uint32_t> right_act) {
  FiniteBraidedGroup g;
  g.n_ = n;
  g.p_ = p;
  const std::size_t size = elements.size();
  if (mul.size() != size * size || left_act.size() != size * size ||
      right_act.size() != size * size)
    throw std::invalid_argument("from_tables: table sizes do not match");
  g.elements_ = std::move(elements);
  g.mul_ = std::move(mul);
  g.lact_ = std::move(left_act);
  g.ract_ = std::move(right_act);
  return g;
}

int FiniteBraidedGroup::index_of(const std::vector<int>& alpha) const {
  long long idx = 0;
  for (int digit : alpha) idx = idx * p_ + digit;
  return static_cast<int>(idx);
}

std::string FiniteBraidedGroup::label(int idx) const {
  const std::vector<int>& alpha = elements_[idx];
  std::ostringstream os;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (p_ > 10 && i) os << '-';
    os << alpha[i];
  }
  return os.str();
}

FiniteBraidedGroup quotient(const GroupContext& ctx, long long max_order) {
  const int n = ctx.n();
  const int p = ctx.p();
  long long order = 1;
  for (int i = 0; i < n; ++i) {
    order *= p;
    if (order > max_order)
      throw std::invalid_argument("quotient: p^n exceeds the size guard");
  }

  // Elements in mixed-radix order, alpha_1 most significant.
  std::vector<std::vector<int>> elements(order, std::vector<int>(n, 0));
  for (long long idx = 1; idx < order; ++idx) {
    elements[idx] = elements[idx - 1];
    for (int i = n - 1; i >= 0; --i) {
      if (++elements[idx][i] < p) break;
      elements[idx][i] = 0;
    }
  }

  std::vector<SignedWord> words(order);
  for (long long i = 0; i < order; ++i) {
    for (int j = 0; j < n; ++j)
      if (elements[i][j] != 0) words[i].push_back({j, elements[i][j]});
  }

  auto index_of = [&](const std::vector<int>& alpha) {
    long long idx = 0;
    for (int digit : alpha) idx = idx * p + digit;
    return static_cast<std::uint32_t>(idx);
  };

  const std::size_t sz = static_cast<std::size_t>(order);
  std::vector<std::uint32_t> mul_t(sz * sz), lact(sz * sz), ract(sz * sz);
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j) {
      mul_t[i * sz + j] =
          index_of(reduce_word(ctx, concat(words[i], words[j])).alpha);
      lact[i * sz + j] = index_of(
          reduce_word(ctx, act_word(ctx.solution(), Side::left, words[i],
                                    words[j]))
              .alpha);
      ract[i * sz + j] = index_of(
          reduce_word(ctx, act_word(ctx.solution(), Side::right, words[i],
                                    words[j]))
              .alpha);
    }

  return FiniteBraidedGroup::from_tables(n, p, std::move(elements),
                                         std::move(mul_t), std::move(lact),
                                         std::move(ract));
}

namespace {

bool rows_are_permutations(const std::vector<std::uint32_t>& table,
                           std::size_t size) {
  std::vector<bool> seen(size);
  for (std::size_t a = 0; a < size; ++a) {
    std::fill(seen.begin(), seen.end(), false);
    for (std::size_t b = 0; b < size; ++b) {
      std::uint32_t v = table[a * size + b];
      if (v >= size || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

}  // namespace

BraidedAxiomsReport check_braided_axioms(const FiniteBraidedGroup& g) {
  BraidedAxiomsReport rep;
  const int size = static_cast<int>(g.order());
  auto fail = [&rep](const std::string& what) {
    if (!rep.first_violation) rep.first_violation = what;
  };

  rep.group_axioms = true;
  for (int a = 0; a < size && rep.group_axioms; ++a)
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      rep.group_axioms = false;
      fail("unit fails at " + g.label(a));
    }
  if (rep.group_axioms) {
    bool latin = rows_are_permutations(g.mul_table(), size);
    for (int b = 0; b < size && latin; ++b) {
      std::vector<bool> seen(size, false);
      for (int a = 0; a < size; ++a) {
        int v = g.mul(a, b);
        if (seen[v]) {
          latin = false;
          break;
        }
        seen[v] = true;
      }
    }
    if (!latin) {
      rep.group_axioms = false;
      fail("multiplication table is not a Latin square");
    }
  }
  for (int a = 0; a < size && rep.group_axioms; ++a)
    for (int b = 0; b < size && rep.group_axioms; ++b)
      for (int c = 0; c < size; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          rep.group_axioms = false;
          fail("associativity fails at (" + g.label(a) + "," + g.label(b) +
               "," + g.label(c) + ")");
          break;
        }

  rep.ml0 = rep.mr0 = true;
  for (int a = 0; a < size; ++a) {
    if (g.left_act(a, 0) != 0 || g.left_act(0, a) != a) {
      rep.ml0 = false;
      fail("ML0 fails at " + g.label(a));
      break;
    }
  }
  for (int a = 0; a < size; ++a) {
    if (g.right_act(a, 0) != 0 || g.right_act(0, a) != a) {
      rep.mr0 = false;
      fail("MR0 fails at " + g.label(a));
      break;
    }
  }

  rep.ml1 = true;
  for (int a = 0; a < size && rep.ml1; ++a)
    for (int b = 0; b < size && rep.ml1; ++b)
      for (int u = 0; u < size; ++u)
        if (g.left_act(g.mul(a, b), u) != g.left_act(a, g.left_act(b, u))) {
          rep.ml1 = false;
          fail("ML1 fails at (" + g.label(a) + "," + g.label(b) + "," +
               g.label(u) + ")");
          break;
        }

  rep.ml2 = true;
  for (int a = 0; a < size && rep.ml2; ++a)
    for (int u = 0; u < size && rep.ml2; ++u)
      for (int v = 0; v < size; ++v)
        if (g.left_act(a, g.mul(u, v)) !=
            g.mul(g.left_act(a, u), g.left_act(g.right_act(u, a), v))) {
          rep.ml2 = false;
          fail("ML2 fails at (" + g.label(a) + "," + g.label(u) + "," +
               g.label(v) + ")");
          break;
        }

  rep.mr1 = true;
  for (int a = 0; a < size && rep.mr1; ++a)
    for (int u = 0; u < size && rep.mr1; ++u)
      for (int v = 0; v < size; ++v)
        if (g.right_act(g.mul(u, v), a) !=
            g.right_act(v, g.right_act(u, a))) {
          rep.mr1 = false;
          fail("MR1 fails at (" + g.label(a) + "," + g.label(u) + "," +
               g.label(v) + ")");
          break;
        }

  rep.mr2 = true;
  for (int a = 0; a < size && rep.mr2; ++a)
    for (int b = 0; b < size && rep.mr2; ++b)
      for (int u = 0; u < size; ++u)
        if (g.right_act(u, g.mul(a, b)) !=
            g.mul(g.right_act(g.left_act(b, u), a), g.right_act(u, b))) {
          rep.mr2 = false;
          fail("MR2 fails at (" + g.label(a) + "," + g.label(b) + "," +
               g.label(u) + ")");
          break;
        }

  rep.m3 = true;
  for (int u = 0; u < size && rep.m3; ++u)
    for (int v = 0; v < size; ++v)
      if (g.mul(u, v) != g.mul(g.left_act(u, v), g.right_act(v, u))) {
        rep.m3 = false;
        fail("M3 fails at (" + g.label(u) + "," + g.label(v) + ")");
        break;
      }

  rep.involutive = true;
  for (int u = 0; u < size && rep.involutive; ++u)
    for (int v = 0; v < size; ++v) {
      int u2 = g.left_act(u, v);
      int v2 = g.right_act(v, u);
      if (g.left_act(u2, v2) != u || g.right_act(v2, u2) != v) {
        rep.involutive = false;
        fail("involutivity fails at (" + g.label(u) + "," + g.label(v) + ")");
        break;
      }
    }

  rep.nondegenerate = rows_are_permutations(g.left_act_table(), size) &&
                      rows_are_permutations(g.right_act_table(), size);
  if (!rep.nondegenerate) fail("an action row is not a permutation");

  return rep;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

PermGroup permutation_group(const Solution& s) {
  if (!validate(s).ok())
    throw std::invalid_argument(
        "permutation_group requires a validated solution");
  PermGroup pg;
  for (int x = 0; x < s.order(); ++x) pg.generators.push_back(s.left_row(x));

  std::set<Perm> closure{identity_perm(s.order())};
  std::deque<Perm> queue{identity_perm(s.order())};
  while (!queue.empty()) {
    Perm cur = std::move(queue.front());
    queue.pop_front();
    for (const Perm& gen : pg.generators) {
      Perm next = compose_perm(gen, cur);
      if (closure.insert(next).second) queue.push_back(next);
    }
  }
  pg.elements.assign(closure.begin(), closure.end());
  return pg;
}

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of(long long v, int p) {
  if (v < 1) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

}  // namespace

EpimorphismReport quotient_epimorphism_check(const FiniteBraidedGroup& g,
                                             const PermGroup& pg) {
  EpimorphismReport rep;
  rep.quotient_order = g.order();
  rep.image_order = pg.order();
  auto fail = [&rep](const std::string& what) {
    if (!rep.first_violation) rep.first_violation = what;
  };

  const int size = static_cast<int>(g.order());
  std::vector<Perm> image(size);
  std::set<Perm> image_set;
  bool all_in_group = true;
  for (int idx = 0; idx < size; ++idx) {
    Perm cur = identity_perm(g.n());
    const std::vector<int>& alpha = g.element(idx);
    for (int i = 0; i < g.n(); ++i)
      for (int c = 0; c < alpha[i]; ++c)
        cur = compose_perm(cur, pg.generators[i]);
    if (!pg.contains(cur)) {
      all_in_group = false;
      fail("image of " + g.label(idx) + " is outside the permutation group");
    }
    image_set.insert(cur);
    image[idx] = std::move(cur);
  }

  rep.is_homomorphism = all_in_group;
  for (int a = 0; a < size && rep.is_homomorphism; ++a)
    for (int b = 0; b < size; ++b)
      if (image[g.mul(a, b)] != compose_perm(image[a], image[b])) {
        rep.is_homomorphism = false;
        fail("homomorphism fails at (" + g.label(a) + "," + g.label(b) + ")");
        break;
      }

  rep.surjective =
      static_cast<long long>(image_set.size()) == pg.order();
  if (!rep.surjective) fail("the map is not onto the permutation group");

  rep.order_divides = pg.order() != 0 && g.order() % pg.order() == 0;
  if (!rep.order_divides) fail("image order does not divide p^n");
  rep.kernel_size = rep.order_divides ? g.order() / pg.order() : 0;

  rep.p_prime = is_prime(g.p());
  rep.image_order_p_power = is_power_of(pg.order(), std::max(g.p(), 2));
  if (rep.p_prime && !rep.image_order_p_power)
    fail("p is prime but the image is not a p-group");
  return rep;
}

}  // namespace ybe
