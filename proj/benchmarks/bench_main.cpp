#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "toric/lifting.hpp"
#include "toric/pade.hpp"
#include "toric/polytope.hpp"
#include "toric/projection.hpp"
#include "toric/support_analysis.hpp"
#include "toric/text.hpp"
#include "toric/zerodim.hpp"

using namespace toric;

namespace {

std::vector<SparsePoly> curve() {
  return {parse_poly("2+3*X1*X2-X2*X3", 3), parse_poly("-1+2*X1^2*X2*X3+2*X2^2+X1*X2*X3", 3)};
}

std::vector<SparsePoly> five_var() {
  return {parse_poly("3+2*X1*X2*X3-X1^2*X4^4*X5^2+5*X4^8*X5^4", 5),
          parse_poly("2*X1*X3*X4*X5^2-3*X2*X3^2*X4^5*X5^4+7*X1*X2^3*X4^5*X5^4", 5)};
}

SparsePoly random_poly(std::mt19937_64& g, std::size_t n, int terms, int deg) {
  std::uniform_int_distribution<int> e(0, deg), c(-20, 20);
  SparsePoly f(n);
  for (int i = 0; i < terms; ++i) {
    ExpVec v(n);
    for (std::size_t k = 0; k < n; ++k) v.set(k, static_cast<std::uint32_t>(e(g)));
    int a = 0;
    while (a == 0) a = c(g);
    f += SparsePoly::monomial(v, Rat(a));
  }
  return f;
}

void BM_MixedVolume(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(1);
  std::vector<SparsePoly> sys;
  for (std::size_t i = 0; i < n; ++i) sys.push_back(random_poly(g, n, 6, 3));
  const SupportFamily f = supports_of(sys);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(f));
}
BENCHMARK(BM_MixedVolume)->DenseRange(2, 4);

void BM_MixedVolumeFiveVar(benchmark::State& state) {
  const SupportFamily f = supports_of(five_var()).with_simplices(3);
  for (auto _ : state) benchmark::DoNotOptimize(mixed_volume(f));
}
BENCHMARK(BM_MixedVolumeFiveVar);

void BM_SeriesMul(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  const auto prec = static_cast<std::size_t>(state.range(1));
  auto ring = std::make_shared<const SeriesRing>(t, prec);
  std::mt19937_64 g(2);
  const TruncSeries a = TruncSeries::expand(ring, prec, random_poly(g, t, 30, static_cast<int>(prec)));
  const TruncSeries b = TruncSeries::expand(ring, prec, random_poly(g, t, 30, static_cast<int>(prec)));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Args({1, 32})->Args({2, 16})->Args({2, 32})->Args({3, 12});

void BM_LiftCurve(benchmark::State& state) {
  const auto prec = static_cast<std::size_t>(state.range(0));
  const ZeroDimSolution base =
      solve_toric_0d_rat({parse_poly("2+3*X1-X1*X2", 2), parse_poly("-1+3*X1*X2+2*X1^2", 2)}, {0, 1});
  const auto sys = curve();
  for (auto _ : state) benchmark::DoNotOptimize(newton_hensel_lift(sys, {0}, {1, 2}, {0, 1}, base, {Rat(1)}, prec));
}
BENCHMARK(BM_LiftCurve)->Arg(12)->Arg(24)->Arg(48);

void BM_Gcd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 g(3);
  const SparsePoly c = random_poly(g, n, 4, 2);
  const SparsePoly a = c * random_poly(g, n, 5, 2);
  const SparsePoly b = c * random_poly(g, n, 5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_Gcd)->DenseRange(1, 3);

void BM_PadeUnivariate(benchmark::State& state) {
  auto ring = std::make_shared<const SeriesRing>(1, 40);
  const SparsePoly num = parse_poly("3-X1+2*X1^3-X1^5", 1);
  const SparsePoly den = parse_poly("1+2*X1-X1^4+X1^6", 1);
  const TruncSeries s = TruncSeries::expand(ring, 40, num) * series_inv(TruncSeries::expand(ring, 40, den));
  for (auto _ : state) benchmark::DoNotOptimize(pade_univariate(s, 6));
}
BENCHMARK(BM_PadeUnivariate);

void BM_ProjectCurve(benchmark::State& state) {
  for (auto _ : state) {
    ProjectionProblem p;
    p.system = curve();
    p.ell = 2;
    p.options.seed = 1;
    benchmark::DoNotOptimize(q_projection(p));
  }
}
BENCHMARK(BM_ProjectCurve)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
