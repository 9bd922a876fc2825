#pragma once

// Exact checks of the good-monomial machinery for one field, as run by
// `hermlift verify-lemmas`.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hermlift/gf.hpp"
#include "hermlift/parallel.hpp"

namespace hermlift::suite {

enum class Scope { Exhaustive, Sampled, Skipped };

const char* scope_name(Scope s) noexcept;

struct CheckResult {
  std::string id;
  std::string statement;
  Scope scope = Scope::Exhaustive;
  bool passed = false;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::string note;
};

struct SuiteOptions {
  bool force = false;  // sample instead of failing above kMaxExhaustiveLines
  std::uint64_t seed = 1;
  std::size_t sample_lines = 200;
  std::size_t sample_monomials = 64;
  std::size_t dual_path_monomials = 16;
  Execution exec = Execution::Parallel;
};

/// Exhaustive sweeps run while q^4 (the number of lines) stays at or below this.
inline constexpr std::uint64_t kMaxExhaustiveLines = 10'000;
/// Ceiling even with force: the curve is still enumerated point by point.
inline constexpr std::uint64_t kMaxSampledQ = 64;

bool exhaustive_feasible(const gf::Field& f) noexcept;

/// Runs every check for the field. Above kMaxExhaustiveLines it throws
/// Error(TooLarge) unless options.force is set; then line and monomial
/// quantifiers are sampled with options.seed and the affected checks report
/// Scope::Sampled. Checks that only make sense for odd p are Skipped at p = 2.
std::vector<CheckResult> run_lemma_suite(const gf::Field& f, const SuiteOptions& options);

bool all_passed(std::span<const CheckResult> results);

}  // namespace hermlift::suite
