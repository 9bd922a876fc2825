// Serial reference vs OpenMP kernels. HERMLIFT_THREADS caps the parallel side.

#include <benchmark/benchmark.h>

#include "hermlift/code.hpp"
#include "hermlift/kernels.hpp"
#include "hermlift/liftcrit.hpp"
#include "hermlift/parallel.hpp"
#include "hermlift/recovery.hpp"

using namespace hermlift;
using codes::CodeKind;
using codes::CodeOptions;
using gf::Field;

namespace {

struct Classify {
  Field f;
  lift::ReductionTables tables;
  std::vector<curve::LineParam> lines;

  explicit Classify(unsigned l)
      : f(Field::create(3, l)),
        tables(lift::ReductionTables::build(f)),
        lines(lift::scoped_lines(f, lift::LineScope::NonTangent)) {}
};

const Classify& classify_case(unsigned l) {
  static const Classify one(1), two(2);
  return l == 1 ? one : two;
}

const codes::Code& lifted_q9() {
  static const codes::Code code = codes::build_code(Field::create(3, 2), CodeOptions{CodeKind::LiftedOracle});
  return code;
}

template <bool Parallel>
void BM_Classify(benchmark::State& state) {
  const auto& c = classify_case(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::classify_monomials(c.tables, c.lines));
    } else {
      benchmark::DoNotOptimize(kernels::serial::classify_monomials(c.tables, c.lines));
    }
  }
  state.counters["workers"] = Parallel ? worker_count() : 1;
}

template <bool Parallel>
void BM_Evaluate(benchmark::State& state) {
  const auto& code = lifted_q9();
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::evaluate_monomials(code.curve, code.spec.basis));
    } else {
      benchmark::DoNotOptimize(kernels::serial::evaluate_monomials(code.curve, code.spec.basis));
    }
  }
}

template <bool Parallel>
void BM_MinWeight(benchmark::State& state) {
  const Field f = Field::create(3, 1);
  const auto code = codes::build_code(f, CodeOptions{CodeKind::OnePoint, static_cast<std::uint64_t>(state.range(0))});
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::min_weight(f, code.generator));
    } else {
      benchmark::DoNotOptimize(kernels::serial::min_weight(f, code.generator));
    }
  }
  state.counters["k"] = static_cast<double>(code.k());
}

template <bool Parallel>
void BM_ErasureTrials(benchmark::State& state) {
  const auto& code = lifted_q9();
  static const auto plan = recovery::build_plan(code.curve);
  const recovery::SimulationOptions opts{static_cast<std::size_t>(state.range(0)), 1, 1};
  for (auto _ : state) {
    if constexpr (Parallel) {
      benchmark::DoNotOptimize(kernels::parallel::erasure_trials(code, plan, opts));
    } else {
      benchmark::DoNotOptimize(kernels::serial::erasure_trials(code, plan, opts));
    }
  }
}

}  // namespace

BENCHMARK(BM_Classify<false>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Classify<true>)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Evaluate<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight<false>)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MinWeight<true>)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErasureTrials<false>)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ErasureTrials<true>)->Arg(50)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
