#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hermlift/curve.hpp"
#include "hermlift/gf.hpp"
#include "hermlift/parallel.hpp"

namespace hermlift::codes {
struct Code;
}

namespace hermlift::recovery {

using gf::FieldElem;

/// The other q curve points on a non-tangent line through a position.
struct RecoverySet {
  curve::LineParam line;
  std::vector<std::size_t> members;  // ordered by y code
};

/// q^2 - 1 pairwise disjoint sets of size q, one per non-tangent line through
/// the point, ordered by alpha code.
std::vector<RecoverySet> recovery_sets(const curve::HermitianCurve& curve, std::size_t index);

struct RecoveryPlan {
  std::vector<std::vector<RecoverySet>> sets;  // per position
};

RecoveryPlan build_plan(const curve::HermitianCurve& curve);

/// Interpolates the degree <= q-1 restriction through the q set members
/// (t = y) and evaluates it at y_i. Only members are read; position i may
/// hold anything. Throws Error(NotARecoverySet).
FieldElem recover_symbol(const curve::HermitianCurve& curve, std::span<const FieldElem> codeword, std::size_t i,
                         const RecoverySet& set);

enum class SetStatus { Recovered, Skipped, Failed };

struct RepairOutcome {
  std::vector<SetStatus> status;  // per set ordinal; Skipped when the set holds another erasure
  std::size_t attempted = 0;
  std::size_t recovered = 0;
  std::size_t skipped = 0;
};

/// Tries every recovery set of position i; erased[j] marks unavailable symbols.
RepairOutcome repair_position(const curve::HermitianCurve& curve, std::span<const FieldElem> codeword,
                              const std::vector<bool>& erased, std::size_t i, std::span<const RecoverySet> sets,
                              FieldElem truth);

struct SimulationOptions {
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t erasures = 1;
};

struct RecoveryFailure {
  std::size_t trial = 0;
  std::size_t position = 0;
  std::size_t set_ordinal = 0;

  friend bool operator==(const RecoveryFailure&, const RecoveryFailure&) = default;
};

struct ErasureReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t erasures = 0;
  std::size_t positions_tested = 0;
  std::size_t sets_attempted = 0;
  std::size_t sets_recovered = 0;
  std::size_t sets_skipped = 0;
  std::size_t positions_unrecoverable = 0;  // every set hit by another erasure
  std::vector<std::size_t> per_set_success;  // indexed by set ordinal
  std::vector<RecoveryFailure> failures;

  friend bool operator==(const ErasureReport&, const ErasureReport&) = default;
};

/// Seeded trials: random message, `erasures` distinct erased positions, every
/// recovery set of every erased position tried. Results are merged in trial
/// order, so the report depends only on the seed.
ErasureReport erasure_simulation(const codes::Code& code, const SimulationOptions& options,
                                 Execution exec = Execution::Parallel);

}  // namespace hermlift::recovery
