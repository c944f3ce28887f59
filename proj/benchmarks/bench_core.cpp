// Micro-benchmarks for the hot paths: lattice construction, congruence
// closure, equalizer checks, descent cohomology, localization, homology.
#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "finsite/complex.hpp"
#include "finsite/congruence.hpp"
#include "finsite/descent.hpp"
#include "finsite/lattice.hpp"
#include "finsite/module.hpp"
#include "finsite/ring.hpp"
#include "finsite/simplicial.hpp"
#include "finsite/site.hpp"

namespace {

using namespace finsite;

void bm_free_lattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const Lattice l = free_distributive_lattice(n);
    benchmark::DoNotOptimize(l.size());
  }
}
BENCHMARK(bm_free_lattice)->Arg(3)->Arg(4);

void bm_congruence_closure(benchmark::State& state) {
  const Lattice l = free_distributive_lattice(static_cast<int>(state.range(0)));
  const std::vector<std::pair<int, int>> pairs{{1, l.size() - 2}};
  for (auto _ : state) {
    const Congruence theta = congruence_closure(l, pairs);
    benchmark::DoNotOptimize(theta.num_classes);
  }
}
BENCHMARK(bm_congruence_closure)->Arg(3)->Arg(4);

void bm_simplicial_equalizer(benchmark::State& state) {
  const Lattice l = free_distributive_lattice(static_cast<int>(state.range(0)));
  const int i = free_lattice_generator(l, static_cast<int>(state.range(0)), 0);
  const int j = free_lattice_generator(l, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    const EqualizerReport rep = check_simplicial_equalizer(l, i, j);
    benchmark::DoNotOptimize(rep.bijective);
  }
}
BENCHMARK(bm_simplicial_equalizer)->Arg(3)->Arg(4);

void bm_cech_cohomology(benchmark::State& state) {
  const FiniteRing r = cyclic_ring(30);
  const FiniteModule m = module_self(r);
  const std::vector<int> cover{6, 10, 15};
  for (auto _ : state) {
    const CohomologyReport rep = cech_cohomology(r, m, cover);
    benchmark::DoNotOptimize(rep.h1);
  }
}
BENCHMARK(bm_cech_cohomology);

void bm_localize(benchmark::State& state) {
  const FiniteRing r = cyclic_ring(30);
  for (auto _ : state) {
    for (int f = 0; f < r.size(); ++f) {
      const Localization loc = localize(r, f);
      benchmark::DoNotOptimize(loc.idempotent);
    }
  }
}
BENCHMARK(bm_localize);

void bm_homology_iterated_join(benchmark::State& state) {
  const SimplicialComplex c =
      iterated_join(discrete_points(static_cast<int>(state.range(0))), 3);
  for (auto _ : state) {
    const HomologyReport h = homology(c);
    benchmark::DoNotOptimize(h.dimension);
  }
}
BENCHMARK(bm_homology_iterated_join)->Arg(2)->Arg(4);

void bm_set_sheaf_equalizer(benchmark::State& state) {
  const FiniteMap f{5, 2, {0, 1, 0, 1, 0}};
  for (auto _ : state) {
    const SheafReport rep = set_sheaf_equalizer(f, 3);
    benchmark::DoNotOptimize(rep.equalizer);
  }
}
BENCHMARK(bm_set_sheaf_equalizer);

}  // namespace

BENCHMARK_MAIN();
