#include <benchmark/benchmark.h>

#include "riordan/connection.hpp"
#include "riordan/genlagrange.hpp"
#include "riordan/numerator.hpp"
#include "riordan/series.hpp"

namespace {

using riordan::Rational;
using riordan::Series;

Series sample(std::size_t order) {
  std::vector<Rational> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = Rational(static_cast<long>(k % 5) - 2, static_cast<long>(k % 3) + 1);
  c[0] = 1;
  return Series(std::move(c));
}

void series_product(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series a = sample(order);
  for (auto _ : state) benchmark::DoNotOptimize(a * a);
}
BENCHMARK(series_product)->Arg(16)->Arg(64);

void series_reversion(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series g = sample(order).times_x().truncated(order);
  for (auto _ : state) benchmark::DoNotOptimize(riordan::reversion(g));
}
BENCHMARK(series_reversion)->Arg(16)->Arg(32);

void rational_power(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series a = sample(order);
  for (auto _ : state) benchmark::DoNotOptimize(riordan::pow_series(a, Rational(1, 3)));
}
BENCHMARK(rational_power)->Arg(16)->Arg(64);

void alpha_numerator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series a = sample(2 * n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(riordan::alpha_poly(a, n));
}
BENCHMARK(alpha_numerator)->Arg(8)->Arg(16);

void phi_numerator(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series a = sample(2 * n + 2);
  for (auto _ : state) benchmark::DoNotOptimize(riordan::phi_poly(a, n));
}
BENCHMARK(phi_numerator)->Arg(8)->Arg(16);

void conjugated_g(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(riordan::beta_conjugated(riordan::BetaKind::G, n, Rational(1, 2)));
}
BENCHMARK(conjugated_g)->Arg(8)->Arg(16);

void closed_g(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(riordan::beta_closed(riordan::BetaKind::G, n, Rational(1, 2)));
}
BENCHMARK(closed_g)->Arg(8)->Arg(16);

void amazing(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(riordan::amazing_matrix(n, 3));
}
BENCHMARK(amazing)->Arg(8)->Arg(16);

void generalized_lagrange(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  const Series a = sample(order);
  for (auto _ : state) benchmark::DoNotOptimize(riordan::gen_lagrange_series(a, Rational(3, 2), order));
}
BENCHMARK(generalized_lagrange)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
