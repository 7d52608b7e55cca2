#include <benchmark/benchmark.h>

#include "vtm/analysis.hpp"
#include "vtm/claims.hpp"
#include "vtm/corpus.hpp"
#include "vtm/json_io.hpp"
#include "vtm/parse.hpp"
#include "vtm/scenario.hpp"
#include "vtm/serialize.hpp"

namespace {

const vtm::TrustModel& corpus() {
  static const vtm::TrustModel model = vtm::load_builtin_corpus();
  return model;
}

void ParseCorpus(benchmark::State& state) {
  const std::string text(vtm::builtin_table_text());
  for (auto _ : state) {
    auto result = vtm::parse_model(text, "table1.vtm");
    benchmark::DoNotOptimize(result);
  }
  state.SetBytesProcessed(int64_t(state.iterations()) * int64_t(text.size()));
}
BENCHMARK(ParseCorpus);

void SerializeCorpus(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  for (auto _ : state) {
    std::string text = vtm::serialize_model(m);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(SerializeCorpus);

void JsonExportCorpus(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  for (auto _ : state) {
    std::string text = vtm::model_to_json(m);
    benchmark::DoNotOptimize(text);
  }
}
BENCHMARK(JsonExportCorpus);

void DominanceAllPairs(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  for (auto _ : state) {
    for (vtm::System a : m.systems()) {
      for (vtm::System b : m.systems()) {
        auto result = vtm::dominance(m, a, b, std::nullopt);
        benchmark::DoNotOptimize(result);
      }
    }
  }
}
BENCHMARK(DominanceAllPairs);

void FrontierAllGoals(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  for (auto _ : state) {
    for (vtm::Goal g : m.goals()) {
      auto frontier = vtm::pareto_frontier(m, g);
      benchmark::DoNotOptimize(frontier);
    }
  }
}
BENCHMARK(FrontierAllGoals);

void RankOverall(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  const auto weights = vtm::WeightConfig::defaults();
  for (auto _ : state) {
    auto entries = vtm::rank(m, std::nullopt, weights);
    benchmark::DoNotOptimize(entries);
  }
}
BENCHMARK(RankOverall);

void MinimalCoalitionsSweep(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  const auto env = vtm::ScenarioEnv::defaults();
  for (auto _ : state) {
    for (vtm::System s : m.systems()) {
      for (vtm::Goal g : m.goals()) {
        auto coalitions =
            vtm::minimal_coalitions(m, s, g, vtm::Impact::all, env);
        benchmark::DoNotOptimize(coalitions);
      }
    }
  }
}
BENCHMARK(MinimalCoalitionsSweep);

void CheckClaims(benchmark::State& state) {
  const vtm::TrustModel& m = corpus();
  const auto catalog = vtm::builtin_claims();
  for (auto _ : state) {
    auto report = vtm::check_claims(m, catalog);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(CheckClaims);

}  // namespace

BENCHMARK_MAIN();
