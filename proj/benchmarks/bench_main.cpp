#include <benchmark/benchmark.h>

#include "isrlab/characters.hpp"
#include "isrlab/random.hpp"
#include "isrlab/zoo.hpp"

using namespace isrlab;

namespace {

F2Matrix random_invertible(int n, Rng& rng) {
  const auto& gl = general_linear_group(n);
  return gl[rng.below(gl.size())];
}

void BM_Inverse(benchmark::State& state) {
  Rng rng(1);
  const F2Matrix g = random_invertible(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(mat_inverse(g));
}
BENCHMARK(BM_Inverse)->Arg(3)->Arg(4);

void BM_TransvectionFactorize(benchmark::State& state) {
  Rng rng(2);
  const F2Matrix g = random_invertible(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(transvection_factorize(g));
}
BENCHMARK(BM_TransvectionFactorize)->Arg(3)->Arg(4);

void BM_Convolution(benchmark::State& state) {
  Rng rng(3);
  const Truncation t{Family::Affine, 3};
  auto random_algebra = [&] {
    AlgebraElement x;
    for (int k = 0; k < state.range(0); ++k) x += AlgebraElement::unit(random_element(t, rng));
    return x;
  };
  const AlgebraElement a = random_algebra(), b = random_algebra();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Convolution)->Arg(8)->Arg(64);

void BM_BuildMexo(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_mexo(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildMexo)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ConditionalExpectation(benchmark::State& state) {
  const SubalgebraSpec spec = build_mexo(3);
  Rng rng(4);
  const GroupElement g = random_element({Family::Affine, 3}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(conditional_expectation(g, spec));
}
BENCHMARK(BM_ConditionalExpectation)->Unit(benchmark::kMicrosecond);

void BM_NormalClosure(benchmark::State& state) {
  const Truncation t{Family::Wreath, static_cast<int>(state.range(0))};
  const std::vector<GroupElement> gens = {make_wreath(Permutation::transposition(1, 2))};
  for (auto _ : state) benchmark::DoNotOptimize(normal_closure(gens, t));
}
BENCHMARK(BM_NormalClosure)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PositiveDefinite(benchmark::State& state) {
  Rng rng(5);
  std::vector<GroupElement> sample;
  for (int k = 0; k < state.range(0); ++k) sample.push_back(random_element({Family::Affine, 3}, rng));
  const CharacterSpec chi = CharacterSpec::affine(1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(is_positive_definite(chi, sample));
}
BENCHMARK(BM_PositiveDefinite)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
