#include <benchmark/benchmark.h>

#include <vector>

#include "orefrac/braid_monoid.hpp"
#include "orefrac/fraction.hpp"
#include "orefrac/klein_monoid.hpp"
#include "orefrac/sampling.hpp"
#include "orefrac/torsion.hpp"

using namespace orefrac;

namespace {

constexpr std::size_t kPool = 64;

std::vector<Element> pool(const Monoid& m, std::uint64_t seed,
                          std::size_t length) {
  Rng rng(seed);
  std::vector<Element> out;
  out.reserve(kPool);
  for (std::size_t i = 0; i < kPool; ++i)
    out.push_back(random_element(m, rng, length));
  return out;
}

void braid_mul(benchmark::State& state) {
  const auto m = BraidMonoid::create(4);
  const auto xs = pool(*m, 1, static_cast<std::size_t>(state.range(0)));
  const auto ys = pool(*m, 2, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m->mul(xs[i % kPool], ys[(i + 7) % kPool]));
    ++i;
  }
}
BENCHMARK(braid_mul)->Arg(4)->Arg(16);

void braid_right_lcm(benchmark::State& state) {
  const auto m = BraidMonoid::create(4);
  const auto xs = pool(*m, 3, static_cast<std::size_t>(state.range(0)));
  const auto ys = pool(*m, 4, static_cast<std::size_t>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m->right_lcm(xs[i % kPool], ys[(i + 7) % kPool]));
    ++i;
  }
}
BENCHMARK(braid_right_lcm)->Arg(4)->Arg(8);

void klein_right_lcm(benchmark::State& state) {
  const auto m = KleinMonoid::create();
  const auto xs = pool(*m, 5, 12);
  const auto ys = pool(*m, 6, 12);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m->right_lcm(xs[i % kPool], ys[(i + 7) % kPool]));
    ++i;
  }
}
BENCHMARK(klein_right_lcm);

void braid_fraction_mul(benchmark::State& state) {
  const auto m = BraidMonoid::create(3);
  Rng rng(7);
  std::vector<Fraction> fs;
  for (std::size_t i = 0; i < kPool; ++i)
    fs.push_back(random_fraction(*m, rng, 4));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fraction_mul(fs[i % kPool], fs[(i + 7) % kPool]));
    ++i;
  }
}
BENCHMARK(braid_fraction_mul);

void braid_torsion_check(benchmark::State& state) {
  const auto m = BraidMonoid::create(3);
  Rng rng(8);
  std::vector<Fraction> zs;
  for (std::size_t i = 0; i < kPool; ++i)
    zs.push_back(random_fraction(*m, rng, 3));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(torsion_check(zs[i % kPool], 6));
    ++i;
  }
}
BENCHMARK(braid_torsion_check);

}  // namespace

BENCHMARK_MAIN();
