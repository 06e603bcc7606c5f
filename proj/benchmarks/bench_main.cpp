#include <benchmark/benchmark.h>

#include <random>

#include "linftrees/linear_program.hpp"
#include "linftrees/tree_metrics.hpp"
#include "linftrees/ultrametrics.hpp"

using namespace linftrees;

namespace {

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> l;
  for (std::size_t i = 1; i <= n; ++i) l.push_back(std::to_string(i));
  return l;
}

DissimilarityMap random_point4(std::mt19937_64& rng) {
  static const long primes[6] = {101, 103, 107, 109, 113, 127};
  RatVector v(6);
  for (std::size_t c = 0; c < 6; ++c) {
    v[c] = Rational(static_cast<long>(rng() % 100)) +
           Rational(1 + static_cast<long>(rng() % (primes[c] - 1)), primes[c]);
  }
  return DissimilarityMap(numeric_labels(4), std::move(v));
}

void BM_SimplexSmall(benchmark::State& state) {
  // the census workhorse shape: box bands plus a strict chain
  std::vector<LinearConstraint> cs;
  const long lo[3] = {2, 5, 9}, hi[3] = {8, 7, 9};
  for (int v = 0; v < 3; ++v) {
    RatVector up(3), down(3);
    up[v] = 1;
    down[v] = -1;
    cs.push_back({up, Relation::LessEq, Rational(hi[v])});
    cs.push_back({down, Relation::LessEq, Rational(-lo[v])});
  }
  cs.push_back({{Rational(1), Rational(-1), Rational(0)}, Relation::StrictLess, Rational(0)});
  cs.push_back({{Rational(0), Rational(1), Rational(-1)}, Relation::StrictLess, Rational(0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(strictly_feasible(3, cs).feasible);
  }
}
BENCHMARK(BM_SimplexSmall);

void BM_Subdominant(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const auto delta = random_point4(rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subdominant(delta).values().size());
  }
}
BENCHMARK(BM_Subdominant);

void BM_District4(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::vector<DissimilarityMap> points;
  for (int i = 0; i < 64; ++i) points.push_back(random_point4(rng));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(district(points[k++ % points.size()]).size());
  }
}
BENCHMARK(BM_District4);

void BM_EnumerateRooted6(benchmark::State& state) {
  const auto labels = numeric_labels(6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_rooted(labels, false).size());
  }
}
BENCHMARK(BM_EnumerateRooted6);

void BM_TreeDistance5(benchmark::State& state) {
  const RatVector v{Rational(4), Rational(7), Rational(9), Rational(6), Rational(5), Rational(8),
                    Rational(7), Rational(9), Rational(6), Rational(5)};
  const DissimilarityMap delta(numeric_labels(5), v);
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_to_tree_metrics(delta, FitMode::TreeMetric).distance.sign());
  }
}
BENCHMARK(BM_TreeDistance5);

}  // namespace

BENCHMARK_MAIN();
