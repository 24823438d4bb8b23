#include <benchmark/benchmark.h>

#include <random>

#include "orelab/algebra.hpp"
#include "orelab/lnd.hpp"
#include "orelab/skew.hpp"

using namespace orelab;

namespace {

Vec random_vec(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = Rational(num(rng), den(rng));
  return v;
}

GeneratorFamily shift_family(const GrassmannInstance& inst, int gens) {
  GeneratorFamily fam;
  for (int i = 0; i < gens; ++i) {
    fam.gens.push_back(Generator{"x", SigmaDerivation{identity_automorphism(inst.algebra.dim()),
                                                      inst.derivation.map}});
  }
  return fam;
}

void bm_rref(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(42);
  std::vector<Vec> rows;
  for (int i = 0; i < n; ++i) rows.push_back(random_vec(rng, n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Subspace::span(n, rows));
  }
}
BENCHMARK(bm_rref)->Arg(16)->Arg(32)->Arg(64);

void bm_grassmann_multiply(benchmark::State& state) {
  auto inst = grassmann_algebra(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(43);
  Vec x = random_vec(rng, inst.algebra.dim());
  Vec y = random_vec(rng, inst.algebra.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(inst.algebra.multiply(x, y));
  }
}
BENCHMARK(bm_grassmann_multiply)->Arg(4)->Arg(6)->Arg(8);

void bm_wedderburn(benchmark::State& state) {
  auto inst = grassmann_algebra(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wedderburn_radical(inst.algebra));
  }
}
BENCHMARK(bm_wedderburn)->Arg(3)->Arg(4);

void bm_delta_nk(benchmark::State& state) {
  auto inst = grassmann_algebra(4);
  GeneratorFamily fam = shift_family(inst, 2);
  std::mt19937_64 rng(44);
  Subspace v = Subspace::span(15, {random_vec(rng, 15), random_vec(rng, 15)});
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(delta_nk_image(v, n, n / 2, fam));
  }
}
BENCHMARK(bm_delta_nk)->Arg(3)->Arg(5);

void bm_multiply_skew(benchmark::State& state) {
  auto inst = grassmann_algebra(3);
  GeneratorFamily fam = shift_family(inst, 2);
  std::mt19937_64 rng(45);
  SkewPolynomial p, q;
  for (int t = 0; t < 4; ++t) {
    Word w;
    for (int i = 0; i < t; ++i) w.letters.push_back(i % 2);
    p.add_term(w, random_vec(rng, 7));
    q.add_term(w, random_vec(rng, 7));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply_skew(inst.algebra, fam, p, q));
  }
}
BENCHMARK(bm_multiply_skew);

void bm_certify_theorem_14(benchmark::State& state) {
  auto inst = grassmann_algebra(static_cast<int>(state.range(0)));
  GeneratorFamily fam = shift_family(inst, 1);
  Subspace v = Subspace::full(inst.algebra.dim());
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_theorem_14(inst.algebra, v, fam, 1));
  }
}
BENCHMARK(bm_certify_theorem_14)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void bm_grassmann_preimage(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  GrassmannBasis basis(g);
  for (auto _ : state) {
    for (const GrassmannMonomial& m : basis.monomials()) {
      if (m.back() >= g) continue;
      benchmark::DoNotOptimize(grassmann_preimage(g, m));
    }
  }
}
BENCHMARK(bm_grassmann_preimage)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
