#include "hermlift/recovery.hpp"

#include <algorithm>

#include "hermlift/code.hpp"
#include "hermlift/errors.hpp"
#include "hermlift/kernels.hpp"
#include "hermlift/polyring.hpp"

namespace hermlift::recovery {

std::vector<RecoverySet> recovery_sets(const curve::HermitianCurve& curve, std::size_t index) {
  if (index >= curve.size()) throw Error(Errc::InvalidArgument, "position out of range");
  const auto& point = curve[index];
  std::vector<RecoverySet> out;
  for (const auto& line : curve::lines_through(curve.field(), point)) {
    if (line.tangent) continue;
    auto members = curve.points_on_line(line);
    std::erase(members, index);
    out.push_back({line, std::move(members)});
  }
  return out;
}

RecoveryPlan build_plan(const curve::HermitianCurve& curve) {
  RecoveryPlan plan;
  plan.sets.reserve(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) plan.sets.push_back(recovery_sets(curve, i));
  return plan;
}

namespace {

bool on_line(const gf::Field& f, const curve::LineParam& line, const curve::CurvePoint& pt) {
  return f.add(f.mul(line.alpha, pt.y), line.beta) == pt.x;
}

}  // namespace

FieldElem recover_symbol(const curve::HermitianCurve& curve, std::span<const FieldElem> codeword, std::size_t i,
                         const RecoverySet& set) {
  const gf::Field& f = curve.field();
  if (codeword.size() != curve.size()) throw Error(Errc::LengthMismatch, "codeword length != q^3");
  if (i >= curve.size()) throw Error(Errc::InvalidArgument, "position out of range");
  const bool valid = !set.line.tangent && set.members.size() == f.q() && on_line(f, set.line, curve[i]) &&
                     std::all_of(set.members.begin(), set.members.end(), [&](std::size_t j) {
                       return j < curve.size() && j != i && on_line(f, set.line, curve[j]);
                     });
  if (!valid) throw Error(Errc::NotARecoverySet, "set is not a recovery set of position " + std::to_string(i));

  std::vector<poly::Sample> samples;
  samples.reserve(set.members.size());
  for (std::size_t j : set.members) samples.push_back({curve[j].y, codeword[j]});
  // t is the y coordinate, so distinct points on the line give distinct nodes
  const poly::UniPoly g = poly::lagrange_interpolate(f, samples);
  return g.evaluate(f, curve[i].y);
}

RepairOutcome repair_position(const curve::HermitianCurve& curve, std::span<const FieldElem> codeword,
                              const std::vector<bool>& erased, std::size_t i, std::span<const RecoverySet> sets,
                              FieldElem truth) {
  RepairOutcome out;
  out.status.reserve(sets.size());
  for (const auto& set : sets) {
    const auto& members = set.members;
    if (std::any_of(members.begin(), members.end(), [&](std::size_t j) { return erased[j]; })) {
      ++out.skipped;
      out.status.push_back(SetStatus::Skipped);
      continue;
    }
    ++out.attempted;
    if (recover_symbol(curve, codeword, i, set) == truth) {
      ++out.recovered;
      out.status.push_back(SetStatus::Recovered);
    } else {
      out.status.push_back(SetStatus::Failed);
    }
  }
  return out;
}

ErasureReport erasure_simulation(const codes::Code& code, const SimulationOptions& options, Execution exec) {
  if (options.trials == 0) throw Error(Errc::InvalidArgument, "trials must be >= 1");
  if (options.erasures == 0 || options.erasures > code.n()) {
    throw Error(Errc::InvalidArgument, "erasures must be in [1, n]");
  }
  const RecoveryPlan plan = build_plan(code.curve);
  return exec == Execution::Serial ? kernels::serial::erasure_trials(code, plan, options)
                                   : kernels::parallel::erasure_trials(code, plan, options);
}

}  // namespace hermlift::recovery
