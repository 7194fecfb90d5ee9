#include <benchmark/benchmark.h>

#include "stpref/compile_expert.hpp"
#include "stpref/llm/mock.hpp"

using namespace stpref;

namespace {

// One iteration's worth of generated code: N intents x T samples.
const std::vector<CodeSample>& corpus() {
  static const std::vector<CodeSample> samples = [] {
    std::vector<CodeSample> out;
    for (int i = 0; i < 100; ++i) {
      const Intent intent{"intent-" + std::to_string(i), "Count rising edges and raise an alarm", "apps",
                          Split::train};
      for (int k = 0; k < 15; ++k) {
        CodeSample s;
        s.id = intent.id + "/" + std::to_string(k);
        s.text = llm::mock_program(intent, static_cast<std::uint64_t>(i * 15 + k), k % 3 != 0, k % 2 == 0);
        out.push_back(std::move(s));
      }
    }
    return out;
  }();
  return samples;
}

void BM_LabelSerial(benchmark::State& state) {
  const auto expert = CompileExpert::builtin();
  for (auto _ : state) benchmark::DoNotOptimize(expert.label_batch_serial(corpus()));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

void BM_LabelParallel(benchmark::State& state) {
  const auto expert = CompileExpert::builtin();
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expert.label_batch(corpus(), threads));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}

}  // namespace

BENCHMARK(BM_LabelSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LabelParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
