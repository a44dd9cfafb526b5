// Throughput benchmarks for the periodicity kernels, the detectors, and
// the trie search, over prefixes of the square-free leech_l fixed point
// (worst case for the detectors: nothing short-circuits).

#include <benchmark/benchmark.h>

#include "ppfree/detect.hpp"
#include "ppfree/morphism.hpp"
#include "ppfree/periodicity.hpp"
#include "ppfree/search.hpp"

namespace {

using namespace ppfree;

Word leech_prefix(std::size_t n) {
  static const Word big =
      fixed_point_prefix(builtin_morphism(BuiltinMorphism::leech_l), 0, 1 << 15);
  return big.prefix(n);
}

void bm_compute_rmp(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_rmp(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_compute_rmp)->Range(1 << 10, 1 << 15)->Complexity(benchmark::oNLogN);

void bm_compute_cmp(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  Involution mir = Involution::mirror(w.alphabet());
  for (auto _ : state) benchmark::DoNotOptimize(compute_cmp(w, mir));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_compute_cmp)->Range(1 << 10, 1 << 15)->Complexity(benchmark::oN);

void bm_linear_square_check(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  Involution mir = Involution::mirror(w.alphabet());
  for (auto _ : state)
    benchmark::DoNotOptimize(is_pseudo_square_free(w, mir).has_value());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_linear_square_check)->Range(1 << 10, 1 << 15)->Complexity(benchmark::oNLogN);

void bm_quadratic_cube_check(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  Involution mir = Involution::mirror(w.alphabet());
  for (auto _ : state)
    benchmark::DoNotOptimize(is_pseudo_cube_free(w, mir).has_value());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_quadratic_cube_check)->Range(1 << 10, 1 << 13);

void bm_match_matrix(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  Involution mir = Involution::mirror(w.alphabet());
  for (auto _ : state) benchmark::DoNotOptimize(build_match_matrix(w, mir));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_match_matrix)->Range(1 << 10, 1 << 12);

void bm_matrix_route_k4(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  Involution mir = Involution::mirror(w.alphabet());
  for (auto _ : state)
    benchmark::DoNotOptimize(find_all(w, mir, 4, Algorithm::matrix));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_matrix_route_k4)->Range(1 << 10, 1 << 12);

void bm_scan_route_k4(benchmark::State& state) {
  Word w = leech_prefix(static_cast<std::size_t>(state.range(0)));
  Involution mir = Involution::mirror(w.alphabet());
  for (auto _ : state)
    benchmark::DoNotOptimize(find_k_powers(scan_bitmaps(w, mir), 4, w, mir));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_scan_route_k4)->Range(1 << 10, 1 << 13);

void bm_trie_search(benchmark::State& state) {
  Alphabet a = Alphabet::digits(3);
  Involution phi = parse_involution(a, "(0,1).mir");
  for (auto _ : state) benchmark::DoNotOptimize(dfs_search(a, phi, 2));
}
BENCHMARK(bm_trie_search);

}  // namespace

BENCHMARK_MAIN();
