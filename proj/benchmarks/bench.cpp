#include <benchmark/benchmark.h>

#include <random>

#include "ybe/braided_group.hpp"
#include "ybe/group_algebra.hpp"

namespace {

using namespace ybe;

Solution sf4() {
  return Solution::from_left_action(
      4, {{0, 1, 3, 2}, {0, 1, 3, 2}, {1, 0, 2, 3}, {1, 0, 2, 3}});
}

void BM_validate(benchmark::State& state) {
  Solution s = sf4();
  for (auto _ : state) benchmark::DoNotOptimize(validate(s).ok());
}
BENCHMARK(BM_validate);

void BM_enumerate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_square_free(n, true).size());
}
BENCHMARK(BM_enumerate)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_normal_form(benchmark::State& state) {
  GroupContext ctx = GroupContext::make(sf4());
  std::mt19937_64 rng(1);
  Word w(static_cast<std::size_t>(state.range(0)));
  for (auto& letter : w) letter = static_cast<int>(rng() % 4);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        normal_form_word(ctx.rewrite_system(), w).size());
}
BENCHMARK(BM_normal_form)->Arg(16)->Arg(64)->Arg(256);

void BM_reduce_word(benchmark::State& state) {
  GroupContext ctx = GroupContext::make(sf4());
  std::mt19937_64 rng(2);
  SignedWord w;
  for (int i = 0; i < state.range(0); ++i)
    w.push_back({static_cast<int>(rng() % 4), rng() % 2 ? 3 : -2});
  for (auto _ : state) benchmark::DoNotOptimize(reduce_word(ctx, w).alpha[0]);
}
BENCHMARK(BM_reduce_word)->Arg(4)->Arg(16)->Arg(64);

void BM_quotient(benchmark::State& state) {
  GroupContext ctx = GroupContext::make(sf4());
  for (auto _ : state) benchmark::DoNotOptimize(quotient(ctx).order());
}
BENCHMARK(BM_quotient)->Unit(benchmark::kMillisecond);

void BM_axiom_check(benchmark::State& state) {
  FiniteBraidedGroup q = quotient(GroupContext::make(sf4()));
  for (auto _ : state) benchmark::DoNotOptimize(check_braided_axioms(q).ok());
}
BENCHMARK(BM_axiom_check);

void BM_algebra_mul(benchmark::State& state) {
  GroupContext ctx = GroupContext::make(sf4());
  const FieldDesc f = FieldDesc::rational();
  std::mt19937_64 rng(3);
  AlgebraElement a(f), b(f);
  for (int t = 0; t < state.range(0); ++t) {
    GroupElement g = ctx.identity(), h = ctx.identity();
    for (int i = 0; i < 4; ++i) {
      g.alpha[i] = static_cast<int>(rng() % 2);
      g.kappa[i] = static_cast<long long>(rng() % 5) - 2;
      h.alpha[i] = static_cast<int>(rng() % 2);
      h.kappa[i] = static_cast<long long>(rng() % 5) - 2;
    }
    a.add_term(g, Scalar::one(f));
    b.add_term(h, Scalar::one(f));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(algebra_mul(ctx, a, b).support_size());
}
BENCHMARK(BM_algebra_mul)->Arg(4)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
