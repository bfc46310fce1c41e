// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <string>

#include "incidence/elementary.hpp"
#include "incidence/kernels.hpp"
#include "incidence/lie_maps.hpp"

using namespace incidence;

namespace {

PosetPtr chain(int n)
{
  std::vector<std::string> labels;
  std::vector<ElementPair> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i > 0)
      covers.emplace_back(i - 1, i);
  }
  return std::make_shared<const FinitePoset>(FinitePoset::from_cover_indices(labels, covers));
}

/// Complete bipartite poset K_{k,k}: every minimal element below every maximal one.
PosetPtr bipartite(int k)
{
  std::vector<std::string> labels;
  std::vector<ElementPair> covers;
  for (int i = 0; i < 2 * k; ++i)
    labels.push_back(std::to_string(i + 1));
  for (int i = 0; i < k; ++i)
    for (int j = k; j < 2 * k; ++j)
      covers.emplace_back(i, j);
  return std::make_shared<const FinitePoset>(FinitePoset::from_cover_indices(labels, covers));
}

LinearMap sample_map(int n)
{
  auto p = chain(n);
  auto a = make_algebra(p, Field::prime(101));
  AlgebraElement beta = AlgebraElement::identity(a);
  for (auto [x, y] : p->strict_pairs())
    beta.add_term(a->index(x, y), Scalar(a->field(), x + 2 * y + 1));
  return compose(inner_from_unit(InnerUnit(beta)), LinearMap::identity(a));
}

void BM_LawSerial(benchmark::State &state)
{
  auto m = sample_map(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_law_violations_serial(m, ProductLaw::Bracket));
}

void BM_LawParallel(benchmark::State &state)
{
  auto m = sample_map(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_law_violations_parallel(m, ProductLaw::Bracket));
}

void BM_ThetaSerial(benchmark::State &state)
{
  auto p = bipartite(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_theta_serial(p));
}

void BM_ThetaParallel(benchmark::State &state)
{
  auto p = bipartite(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_theta_parallel(p));
}

} // namespace

BENCHMARK(BM_LawSerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LawParallel)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThetaParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
