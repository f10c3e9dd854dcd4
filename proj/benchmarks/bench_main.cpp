// Microbenchmarks for the hot paths of an extension step.
#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "mds/canonical.hpp"
#include "mds/extension.hpp"
#include "mds/latin.hpp"
#include "mds/linear.hpp"
#include "mds/partitions.hpp"
#include "mds/search.hpp"

using namespace mds;

namespace {

// RS codes of growing size; Arg is k for (q+1,k)_q with q = 5.
void BM_CanonicalFormRS(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const Code c = rs_code(5, 6, k);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    state.PauseTiming();
    const Code moved = apply_isometry(Isometry::random(5, 6, rng), c);
    state.ResumeTiming();
    benchmark::DoNotOptimize(canonical_form(moved));
  }
  state.counters["words"] = static_cast<double>(c.size());
}
BENCHMARK(BM_CanonicalFormRS)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CanonicalFormLatin(benchmark::State& state) {
  const Code c = cyclic_group_code(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(c));
}
BENCHMARK(BM_CanonicalFormLatin)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

// Splitting A^2 into permutation codes, one set per permutation.
void BM_ExactCoverPermutations(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const Code a2 = full_space(q, 2);
  ExactCoverInstance inst;
  inst.universe_size = a2.size();
  std::vector<int> perm(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    std::vector<std::uint32_t> s;
    for (int i = 0; i < q; ++i) s.push_back(static_cast<std::uint32_t>(i * q + perm[static_cast<std::size_t>(i)]));
    inst.sets.push_back(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::uint64_t covers = 0;
  for (auto _ : state) covers = count_exact_covers(inst);
  state.counters["covers"] = static_cast<double>(covers);
}
BENCHMARK(BM_ExactCoverPermutations)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_FindPartitionsRS(benchmark::State& state) {
  // (5,3)_5 into (5,2) subcodes, with the (4,2)_5 registry as the lower level.
  Registry r22 = full_space_registry(5, 2);
  Registry r32 = extension_step(r22, nullptr);
  Registry r42 = extension_step(r32, nullptr);
  extension_step(r42, nullptr);  // stores the (4,2) partition sets
  const Code c = canonical_form(rs_code(5, 5, 3)).canon;
  std::uint64_t found = 0;
  for (auto _ : state) found = find_partitions(c, &r42).size();
  state.counters["partitions"] = static_cast<double>(found);
}
BENCHMARK(BM_FindPartitionsRS)->Unit(benchmark::kMillisecond);

void BM_LatinClassification(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_latin_squares(q).size());
}
BENCHMARK(BM_LatinClassification)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
