#include <benchmark/benchmark.h>

#include "lep/bridge.hpp"
#include "lep/generate.hpp"
#include "lep/normalize.hpp"
#include "lep/oracle.hpp"
#include "lep/script.hpp"

namespace {

using namespace lep;

std::vector<le::Deriv> corpus(unsigned height) {
  Generator g(height * 7919u, GenOptions{{"A", "B", "C"}, 2, height});
  std::vector<le::Deriv> out;
  for (int i = 0; i < 64; ++i) out.push_back(g.derivation());
  return out;
}

void BM_CheckLe(benchmark::State& state) {
  const auto ds = corpus(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    for (const auto& d : ds) benchmark::DoNotOptimize(le::check_le(d));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ds.size()));
}
BENCHMARK(BM_CheckLe)->Arg(6)->Arg(8)->Arg(10);

void BM_Normalize(benchmark::State& state) {
  const auto ds = corpus(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    for (const auto& d : ds) benchmark::DoNotOptimize(normalize(d));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ds.size()));
}
BENCHMARK(BM_Normalize)->Arg(6)->Arg(8)->Arg(10);

void BM_RoundTrip(benchmark::State& state) {
  const auto ds = corpus(8);
  for (auto _ : state) {
    for (const auto& d : ds) {
      const le::Judgment j = le::check_le(d);
      const RootStoup root = j.conclusion.stoup ? RootStoup::Formula : RootStoup::Empty;
      benchmark::DoNotOptimize(ne_to_le(le_to_ne(d), negate_all(j.conclusion.context), root));
    }
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ds.size()));
}
BENCHMARK(BM_RoundTrip);

void BM_ScriptParse(benchmark::State& state) {
  std::vector<std::string> texts;
  for (const auto& d : corpus(8)) texts.push_back(write_le_script(d));
  for (auto _ : state) {
    for (const auto& t : texts) benchmark::DoNotOptimize(read_le_script(t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(texts.size()));
}
BENCHMARK(BM_ScriptParse);

void BM_Decide(benchmark::State& state) {
  Generator g(99, GenOptions{{"A", "B", "C"}, static_cast<unsigned>(state.range(0)), 4});
  std::vector<Formula> fs;
  for (int i = 0; i < 32; ++i) fs.push_back(g.formula());
  for (auto _ : state) {
    for (const auto& f : fs) benchmark::DoNotOptimize(decide(f));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}
BENCHMARK(BM_Decide)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
