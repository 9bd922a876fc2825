#include <omp.h>

#include <limits>

#include "hermlift/kernels.hpp"
#include "hermlift/parallel.hpp"
#include "kernel_detail.hpp"

namespace hermlift::kernels::parallel {

std::vector<lift::MonomialVerdict> classify_monomials(const lift::ReductionTables& tables,
                                                      std::span<const curve::LineParam> lines) {
  const detail::ClassifyContext ctx(tables, lines);
  const auto count = static_cast<std::int64_t>(ctx.monomial_count());
  std::vector<lift::MonomialVerdict> out(ctx.monomial_count());
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
  for (std::int64_t m = 0; m < count; ++m) out[m] = ctx.classify(static_cast<std::size_t>(m));
  return out;
}

FieldMatrix evaluate_monomials(const curve::HermitianCurve& curve, std::span<const codes::Monomial> basis) {
  FieldMatrix g(basis.size(), curve.size());
  const auto rows = static_cast<std::int64_t>(basis.size());
#pragma omp parallel for schedule(static) num_threads(worker_count())
  for (std::int64_t r = 0; r < rows; ++r) detail::evaluate_row(curve, basis[r], g.row(r));
  return g;
}

namespace {

template <class F>
std::size_t min_weight_impl(const F& f, const FieldMatrix& generator) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto order = static_cast<std::int64_t>(f.order());
#pragma omp parallel for schedule(dynamic, 1) reduction(min : best) num_threads(worker_count())
  for (std::int64_t lead = 0; lead < order; ++lead) {
    best = std::min(best, detail::min_weight_with_lead(f, generator, static_cast<std::uint64_t>(lead)));
  }
  return best;
}

}  // namespace

std::size_t min_weight(const gf::Field& f, const FieldMatrix& generator) { return min_weight_impl(f, generator); }
std::size_t min_weight(const gf::PrimeField& f, const FieldMatrix& generator) {
  return min_weight_impl(f, generator);
}

recovery::ErasureReport erasure_trials(const codes::Code& code, const recovery::RecoveryPlan& plan,
                                       const recovery::SimulationOptions& options) {
  std::vector<detail::TrialResult> results(options.trials);
  const auto trials = static_cast<std::int64_t>(options.trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
  for (std::int64_t t = 0; t < trials; ++t) {
    results[t] = detail::run_trial(code, plan, options, static_cast<std::size_t>(t));
  }
  return detail::merge_trials(options, code.spec.field.q2() - 1, results);
}

}  // namespace hermlift::kernels::parallel
