#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "ybe/group_algebra.hpp"

using namespace ybe;

namespace {

const FieldDesc kQ = FieldDesc::rational();

AlgebraElement single(const GroupElement& g, FieldDesc f = kQ) {
  return AlgebraElement::term(f, g, Scalar::one(f));
}

AlgebraElement random_element(const GroupContext& ctx, std::mt19937_64& rng,
                              int terms, FieldDesc f = kQ) {
  AlgebraElement a(f);
  for (int t = 0; t < terms; ++t) {
    GroupElement g = ctx.identity();
    for (int i = 0; i < ctx.n(); ++i) {
      g.alpha[i] = static_cast<int>(rng() % ctx.p());
      g.kappa[i] = static_cast<long long>(rng() % 7) - 3;
    }
    a.add_term(g, Scalar::from_int(f, static_cast<long long>(rng() % 9) - 4));
  }
  return a;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar third = Scalar::rational(1, 3);
  Scalar three = Scalar::from_int(kQ, 3);
  CHECK(third * three == Scalar::one(kQ));
  CHECK((third + third + third) == Scalar::one(kQ));
  CHECK(third.inverse() == three);
  CHECK((-third + third).is_zero());

  FieldDesc f5 = FieldDesc::prime(5);
  Scalar two = Scalar::from_int(f5, 2);
  CHECK(two.inverse() == Scalar::from_int(f5, 3));
  CHECK(Scalar::from_int(f5, -1) == Scalar::from_int(f5, 4));
  CHECK((two * Scalar::from_int(f5, 3)) == Scalar::one(f5));

  CHECK_THROWS_AS(FieldDesc::prime(6), std::invalid_argument);
  CHECK_THROWS_AS(third + two, std::invalid_argument);
  CHECK_THROWS_AS(Scalar::zero(kQ).inverse(), std::invalid_argument);
}

TEST_CASE("algebra ring operations") {
  GroupContext ctx = GroupContext::make(oracle::sf4());
  std::mt19937_64 rng(11);

  SUBCASE("unit law") {
    for (int t = 0; t < 10; ++t) {
      AlgebraElement a = random_element(ctx, rng, 3);
      CHECK(algebra_mul(ctx, a, algebra_one(ctx, kQ)) == a);
      CHECK(algebra_mul(ctx, algebra_one(ctx, kQ), a) == a);
    }
  }
  SUBCASE("single-term products agree with the group product") {
    AlgebraElement prod =
        algebra_mul(ctx, single(ctx.letter(2)), single(ctx.letter(0)));
    REQUIRE(prod.support_size() == 1);
    CHECK(prod.terms().begin()->first ==
          mul(ctx, ctx.letter(2), ctx.letter(0)));
    CHECK(prod.terms().begin()->first.alpha == std::vector<int>{0, 1, 0, 1});
  }
  SUBCASE("bilinearity and associativity on random elements") {
    for (int t = 0; t < 5; ++t) {
      AlgebraElement a = random_element(ctx, rng, 3);
      AlgebraElement b = random_element(ctx, rng, 3);
      AlgebraElement c = random_element(ctx, rng, 2);
      CHECK(algebra_mul(ctx, algebra_add(a, b), c) ==
            algebra_add(algebra_mul(ctx, a, c), algebra_mul(ctx, b, c)));
      CHECK(algebra_mul(ctx, c, algebra_add(a, b)) ==
            algebra_add(algebra_mul(ctx, c, a), algebra_mul(ctx, c, b)));
      CHECK(algebra_mul(ctx, algebra_mul(ctx, a, b), c) ==
            algebra_mul(ctx, a, algebra_mul(ctx, b, c)));
      CHECK(algebra_scale(Scalar::from_int(kQ, 2), a) ==
            algebra_add(a, a));
    }
  }
  SUBCASE("field mismatch is rejected") {
    AlgebraElement a = random_element(ctx, rng, 2);
    AlgebraElement b = random_element(ctx, rng, 2, FieldDesc::prime(5));
    CHECK_THROWS_AS(algebra_mul(ctx, a, b), std::invalid_argument);
  }
}

TEST_CASE("LaurentPoly multiplies by exponent addition") {
  LaurentPoly a = LaurentPoly::monomial(kQ, {1, 0}, Scalar::one(kQ));
  LaurentPoly b = LaurentPoly::monomial(kQ, {-2, 3}, Scalar::from_int(kQ, 2));
  LaurentPoly prod = a * b;
  REQUIRE(prod.support_size() == 1);
  CHECK(prod.terms().begin()->first == std::vector<long long>{-1, 3});
  CHECK(prod.terms().begin()->second == Scalar::from_int(kQ, 2));
  // cancellation drops terms
  LaurentPoly c = LaurentPoly::monomial(kQ, {1, 0}, Scalar::from_int(kQ, -1));
  CHECK((a + c).is_zero());
}

TEST_CASE("decompose and recompose") {
  GroupContext ctx = GroupContext::make(oracle::sf4());

  SUBCASE("an element supported on the identity coset") {
    AlgebraElement a = single(ctx.fp_generator(0, 2));
    auto dec = decompose(ctx, a, Side::right);
    REQUIRE(dec.size() == 1);
    CHECK(dec.begin()->first == std::vector<int>{0, 0, 0, 0});
    CHECK(dec.begin()->second ==
          LaurentPoly::monomial(kQ, {2, 0, 0, 0}, Scalar::one(kQ)));
  }
  SUBCASE("right split reads the pair directly") {
    GroupElement g{{0, 1, 0, 1}, {1, 0, 0, 0}};
    auto dec = decompose(ctx, single(g), Side::right);
    REQUIRE(dec.size() == 1);
    CHECK(dec.begin()->first == std::vector<int>{0, 1, 0, 1});
    CHECK(dec.begin()->second ==
          LaurentPoly::monomial(kQ, {1, 0, 0, 0}, Scalar::one(kQ)));
  }
  SUBCASE("left split permutes kappa by the independently computed action") {
    GroupElement g{{0, 1, 0, 1}, {1, 0, 0, 0}};
    auto dec = decompose(ctx, single(g), Side::left);
    REQUIRE(dec.size() == 1);
    // the left coefficient must be ʸ(x₁^p) computed through act_group
    GroupElement y{g.alpha, {0, 0, 0, 0}};
    GroupElement moved = act_group(ctx, Side::left, y, ctx.fp_generator(0, 1));
    REQUIRE(moved.in_fp());
    CHECK(dec.begin()->second ==
          LaurentPoly::monomial(kQ, moved.kappa, Scalar::one(kQ)));
  }
  SUBCASE("left/right coefficients differ by the L(y) index permutation") {
    std::mt19937_64 rng(3);
    AlgebraElement a = random_element(ctx, rng, 6);
    auto right = decompose(ctx, a, Side::right);
    auto left = decompose(ctx, a, Side::left);
    for (const auto& [alpha, poly] : right) {
      SignedWord y_word;
      for (int i = 0; i < ctx.n(); ++i)
        if (alpha[i]) y_word.push_back({i, alpha[i]});
      Perm sigma = left_action_perm(ctx.solution(), y_word);
      LaurentPoly moved(kQ);
      for (const auto& [kappa, c] : poly.terms()) {
        std::vector<long long> mk(kappa.size());
        for (std::size_t i = 0; i < kappa.size(); ++i) mk[sigma[i]] = kappa[i];
        moved.add_term(mk, c);
      }
      CHECK(moved == left.at(alpha));
    }
  }
  SUBCASE("roundtrips on random elements, both sides") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 25; ++t) {
      AlgebraElement a = random_element(ctx, rng, 5);
      for (Side side : {Side::right, Side::left})
        CHECK(recompose(ctx, decompose(ctx, a, side), side, kQ) == a);
    }
    CHECK(recompose(ctx, {}, Side::right, kQ).is_zero());
  }
}

TEST_CASE("basis property: Y-products are single monomial columns") {
  GroupContext ctx = GroupContext::make(oracle::three_cycle4());
  FiniteBraidedGroup q = quotient(ctx);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 50; ++t) {
    int i = static_cast<int>(rng() % q.order());
    int j = static_cast<int>(rng() % q.order());
    GroupElement y{q.element(i), std::vector<long long>(4, 0)};
    GroupElement z{q.element(j), std::vector<long long>(4, 0)};
    auto dec =
        decompose(ctx, algebra_mul(ctx, single(y), single(z)),
                  Side::right);
    REQUIRE(dec.size() == 1);
    CHECK(dec.begin()->second.support_size() == 1);
    CHECK(dec.begin()->second.terms().begin()->second == Scalar::one(kQ));
  }
}

TEST_CASE("power sums") {
  GroupContext t3 = GroupContext::make(trivial_solution(3));
  AlgebraElement s1 = power_sum(t3, 1, kQ);
  CHECK(s1.support_size() == 3);
  for (const auto& [g, c] : s1.terms()) {
    CHECK(g.in_fp());
    long long total = 0;
    for (long long k : g.kappa) total += k;
    CHECK(total == 1);
  }

  GroupContext ctx = GroupContext::make(oracle::sf4());
  AlgebraElement s2 = power_sum(ctx, 2, kQ);
  CHECK(s2.support_size() == 4);
  for (const auto& [g, c] : s2.terms()) {
    CHECK(g.in_fp());
    CHECK(*std::max_element(g.kappa.begin(), g.kappa.end()) == 2);
  }
  CHECK_THROWS_AS(power_sum(ctx, 0, kQ), std::invalid_argument);
}

TEST_CASE("centrality") {
  GroupContext ctx = GroupContext::make(oracle::sf4());
  SUBCASE("the identity is central") {
    CHECK(is_central_on_generators(ctx, algebra_one(ctx, kQ)).central);
  }
  SUBCASE("power sums are central over Q and F_5") {
    for (FieldDesc f : {kQ, FieldDesc::prime(5)})
      for (int k = 1; k <= 4; ++k)
        CHECK(is_central_on_generators(ctx, power_sum(ctx, k, f)).central);
  }
  SUBCASE("x1 is not central, witnessed by x3") {
    CentralityReport rep =
        is_central_on_generators(ctx, single(ctx.letter(0)));
    CHECK_FALSE(rep.central);
    REQUIRE(rep.witness.has_value());
    CHECK(rep.witness->letter == 2);
  }
  SUBCASE("symmetric polynomials in the x_i^p are central") {
    AlgebraElement s1 = power_sum(ctx, 1, kQ);
    AlgebraElement s2 = power_sum(ctx, 2, kQ);
    AlgebraElement f = algebra_add(algebra_mul(ctx, s1, s2),
                                   algebra_scale(Scalar::from_int(kQ, 2),
                                                 power_sum(ctx, 3, kQ)));
    CHECK(is_central_on_generators(ctx, f).central);
  }
}

TEST_CASE("is_symmetric on Laurent polynomials") {
  GroupContext ctx = GroupContext::make(oracle::sf4());
  for (int k = 1; k <= 3; ++k) {
    auto dec = decompose(ctx, power_sum(ctx, k, kQ), Side::right);
    CHECK(is_symmetric(dec.at({0, 0, 0, 0})));
  }
  LaurentPoly skew = LaurentPoly::monomial(kQ, {1, 0, 0, 0}, Scalar::one(kQ));
  CHECK_FALSE(is_symmetric(skew));
  // s1 * s2 as Laurent polynomials stays symmetric
  auto s1 = decompose(ctx, power_sum(ctx, 1, kQ), Side::right).at({0, 0, 0, 0});
  auto s2 = decompose(ctx, power_sum(ctx, 2, kQ), Side::right).at({0, 0, 0, 0});
  CHECK(is_symmetric(s1 * s2));
  CHECK(from_laurent(ctx, s1) == power_sum(ctx, 1, kQ));
}

TEST_CASE("monoid algebra embeds: positive supports are closed under product") {
  GroupContext ctx = GroupContext::make(oracle::sf4());
  std::mt19937_64 rng(29);
  for (int t = 0; t < 10; ++t) {
    AlgebraElement a(kQ), b(kQ);
    for (int term = 0; term < 3; ++term) {
      GroupElement g = ctx.identity(), h = ctx.identity();
      for (int i = 0; i < 4; ++i) {
        g.alpha[i] = static_cast<int>(rng() % 2);
        g.kappa[i] = static_cast<long long>(rng() % 3);
        h.alpha[i] = static_cast<int>(rng() % 2);
        h.kappa[i] = static_cast<long long>(rng() % 3);
      }
      a.add_term(g, Scalar::one(kQ));
      b.add_term(h, Scalar::one(kQ));
    }
    REQUIRE(has_positive_support(a));
    REQUIRE(has_positive_support(b));
    CHECK(has_positive_support(algebra_mul(ctx, a, b)));
  }
  CHECK_FALSE(
      has_positive_support(single(ctx.fp_generator(1, -1))));
}

TEST_CASE("zero divisor probe") {
  GroupContext ctx = GroupContext::make(oracle::sf4());
  SUBCASE("single terms always multiply to a group element") {
    AlgebraElement prod =
        algebra_mul(ctx, single(ctx.letter(1)), single(ctx.letter(2)));
    CHECK(prod.support_size() == 1);
  }
  SUBCASE("seeded trials find no violations") {
    ZeroDivisorReport rep = zero_divisor_probe(ctx, 42, 200);
    CHECK(rep.trials == 200);
    CHECK(rep.ok());
  }
  SUBCASE("geometric truncations against 1 + x1") {
    AlgebraElement one_plus(kQ);
    one_plus.add_term(ctx.identity(), Scalar::one(kQ));
    one_plus.add_term(ctx.letter(0), Scalar::one(kQ));
    AlgebraElement alt(kQ);
    GroupElement x1k = ctx.identity();
    for (int k = 0; k <= 6; ++k) {
      alt.add_term(x1k, Scalar::from_int(kQ, k % 2 == 0 ? 1 : -1));
      x1k = mul(ctx, x1k, ctx.letter(0));
    }
    CHECK_FALSE(algebra_mul(ctx, one_plus, alt).is_zero());
  }
  SUBCASE("probe is deterministic for a fixed seed") {
    ZeroDivisorReport a = zero_divisor_probe(ctx, 7, 50);
    ZeroDivisorReport b = zero_divisor_probe(ctx, 7, 50);
    CHECK(a.trials == b.trials);
    CHECK(a.violations == b.violations);
  }
}
