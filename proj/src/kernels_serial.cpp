#include <limits>

#include "hermlift/kernels.hpp"
#include "kernel_detail.hpp"

namespace hermlift::kernels::serial {

std::vector<lift::MonomialVerdict> classify_monomials(const lift::ReductionTables& tables,
                                                      std::span<const curve::LineParam> lines) {
  const detail::ClassifyContext ctx(tables, lines);
  std::vector<lift::MonomialVerdict> out;
  out.reserve(ctx.monomial_count());
  for (std::size_t m = 0; m < ctx.monomial_count(); ++m) out.push_back(ctx.classify(m));
  return out;
}

FieldMatrix evaluate_monomials(const curve::HermitianCurve& curve, std::span<const codes::Monomial> basis) {
  FieldMatrix g(basis.size(), curve.size());
  for (std::size_t r = 0; r < basis.size(); ++r) detail::evaluate_row(curve, basis[r], g.row(r));
  return g;
}

namespace {

template <class F>
std::size_t min_weight_impl(const F& f, const FieldMatrix& generator) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t lead = 0; lead < f.order(); ++lead) {
    best = std::min(best, detail::min_weight_with_lead(f, generator, lead));
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
  std::vector<detail::TrialResult> results;
  results.reserve(options.trials);
  for (std::size_t t = 0; t < options.trials; ++t) results.push_back(detail::run_trial(code, plan, options, t));
  return detail::merge_trials(options, code.spec.field.q2() - 1, results);
}

}  // namespace hermlift::kernels::serial
