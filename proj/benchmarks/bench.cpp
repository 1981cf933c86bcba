#include <benchmark/benchmark.h>

#include <random>

#include "kauffman/diagrams.hpp"
#include "kauffman/idempotents.hpp"
#include "kauffman/rewrite.hpp"

using namespace kauffman;

namespace {

  Word random_word(degree_type n, std::size_t len, std::uint64_t seed) {
    std::mt19937_64                           rng(seed);
    std::uniform_int_distribution<index_type> pick(0, static_cast<index_type>(n - 1));
    Word                                      w;
    for (std::size_t k = 0; k < len; ++k) {
      index_type x = pick(rng);
      w.push_back(x == 0 ? Letter::c() : Letter::h(x));
    }
    return w;
  }

  void BM_normal_form(benchmark::State& state) {
    Word w = random_word(8, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) {
      benchmark::DoNotOptimize(normal_form(w));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_normal_form)->RangeMultiplier(2)->Range(8, 256)->Complexity();

  void BM_normalize_trace(benchmark::State& state) {
    Word w = random_word(8, static_cast<std::size_t>(state.range(0)), 2);
    for (auto _ : state) {
      benchmark::DoNotOptimize(normalize(w));
    }
  }
  BENCHMARK(BM_normalize_trace)->Arg(32)->Arg(128);

  void BM_kmul(benchmark::State& state) {
    auto const n = static_cast<degree_type>(state.range(0));
    KElement   a = eval(random_word(n, 40, 3), n);
    KElement   b = eval(random_word(n, 40, 4), n);
    for (auto _ : state) {
      benchmark::DoNotOptimize(kmul(a, b));
    }
  }
  BENCHMARK(BM_kmul)->Arg(8)->Arg(32)->Arg(100);

  void BM_closure_bfs(benchmark::State& state) {
    auto const n = static_cast<degree_type>(state.range(0));
    for (auto _ : state) {
      benchmark::DoNotOptimize(closure_bfs(n, 3));
    }
  }
  BENCHMARK(BM_closure_bfs)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

  void BM_decompose(benchmark::State& state) {
    auto const       n = static_cast<degree_type>(state.range(0));
    std::vector<Word> members;
    for (auto const& j : enumerate_jnf(n, 2)) {
      if (is_member(j.to_word()).member) {
        members.push_back(j.to_word());
      }
    }
    std::size_t k = 0;
    for (auto _ : state) {
      benchmark::DoNotOptimize(decompose(members[k++ % members.size()], n));
    }
  }
  BENCHMARK(BM_decompose)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
