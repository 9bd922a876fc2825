#pragma once

// Per-item kernel bodies shared by the serial and OpenMP drivers.

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "hermlift/code.hpp"
#include "hermlift/curve.hpp"
#include "hermlift/liftcrit.hpp"
#include "hermlift/numtheory.hpp"
#include "hermlift/recovery.hpp"
#include "hermlift/rng.hpp"

namespace hermlift::kernels::detail {

using gf::Field;
using gf::FieldElem;

/// Per-line powers of alpha and beta plus the nonvanishing binomials C(a, j)
/// mod p, so that each (monomial, line) test is a short dot product.
class ClassifyContext {
 public:
  ClassifyContext(const lift::ReductionTables& tables, std::span<const curve::LineParam> lines)
      : tables_(tables), lines_(lines), q_(tables.field().q()) {
    const Field& f = tables.field();
    rows_.reserve(lines.size());
    alpha_pow_.resize(lines.size() * q_);
    beta_pow_.resize(lines.size() * q_);
    for (std::size_t li = 0; li < lines.size(); ++li) {
      const auto& line = lines[li];
      rows_.push_back(tables.row(line.alpha, line.gamma).data());
      FieldElem ap = f.one(), bp = f.one();
      for (std::size_t j = 0; j < q_; ++j) {
        alpha_pow_[li * q_ + j] = ap;
        beta_pow_[li * q_ + j] = bp;
        ap = f.mul(ap, line.alpha);
        bp = f.mul(bp, line.beta);
      }
    }
    binoms_.resize(q_);
    for (unsigned a = 0; a < q_; ++a) {
      for (unsigned j = 0; j <= a; ++j) {
        const std::uint64_t c = binomial_mod_p(a, j, f.p());
        if (c != 0) binoms_[a].emplace_back(j, f.from_int(static_cast<std::int64_t>(c)));
      }
    }
  }

  std::size_t monomial_count() const noexcept { return q_ * q_ * q_; }

  /// Verdict for the m-th monomial in (b, a) order.
  lift::MonomialVerdict classify(std::size_t m) const {
    const Field& f = tables_.field();
    const auto a = static_cast<unsigned>(m % q_);
    const auto b = static_cast<unsigned>(m / q_);
    lift::MonomialVerdict v{a, b, true, lift::sufficient_condition(a, b, f), std::nullopt};
    const auto& terms = binoms_[a];
    for (std::size_t li = 0; li < lines_.size(); ++li) {
      const FieldElem* row = rows_[li];
      const FieldElem* ap = &alpha_pow_[li * q_];
      const FieldElem* bp = &beta_pow_[li * q_];
      FieldElem acc{};
      for (const auto& [j, c] : terms) {
        const FieldElem r = row[b + j];
        if (r.is_zero()) continue;
        acc = f.add(acc, f.mul(f.mul(c, r), f.mul(ap[j], bp[a - j])));
      }
      if (!acc.is_zero()) {
        v.oracle_good = false;
        v.witness = lines_[li];
        break;
      }
    }
    return v;
  }

 private:
  const lift::ReductionTables& tables_;
  std::span<const curve::LineParam> lines_;
  std::size_t q_;
  std::vector<const FieldElem*> rows_;
  std::vector<FieldElem> alpha_pow_;
  std::vector<FieldElem> beta_pow_;
  std::vector<std::vector<std::pair<unsigned, FieldElem>>> binoms_;
};

inline void evaluate_row(const curve::HermitianCurve& curve, const codes::Monomial& mono, std::span<FieldElem> out) {
  const Field& f = curve.field();
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& pt = curve[i];
    out[i] = f.mul(f.pow(pt.x, mono.a), f.pow(pt.y, mono.b));
  }
}

/// Minimum nonzero weight among messages whose last coordinate equals `lead`.
/// The remaining coordinates run through an odometer; each digit change
/// updates the codeword by one precomputed row multiple.
template <class F>
std::size_t min_weight_with_lead(const F& f, const FieldMatrix& g, std::uint64_t lead) {
  const std::size_t k = g.rows;
  const std::size_t n = g.cols;
  const std::uint64_t order = f.order();
  // multiples[(r * order + e) * n + c] = e * g(r, c)
  std::vector<FieldElem> multiples(k * order * n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::uint64_t e = 0; e < order; ++e) {
      for (std::size_t c = 0; c < n; ++c) multiples[(r * order + e) * n + c] = f.mul(FieldElem{e}, g(r, c));
    }
  }
  auto row_multiple = [&](std::size_t r, std::uint64_t e) { return &multiples[(r * order + e) * n]; };

  std::vector<FieldElem> word(row_multiple(k - 1, lead), row_multiple(k - 1, lead) + n);
  std::vector<std::uint64_t> digits(k - 1, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  auto weigh = [&] {
    const auto w = static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](FieldElem x) {
      return !x.is_zero();
    }));
    best = std::min(best, w);
  };
  if (lead != 0) weigh();
  while (true) {
    std::size_t d = 0;
    while (d < k - 1 && digits[d] == order - 1) {
      const FieldElem* old_row = row_multiple(d, digits[d]);
      for (std::size_t c = 0; c < n; ++c) word[c] = f.sub(word[c], old_row[c]);
      digits[d] = 0;
      ++d;
    }
    if (d == k - 1) break;
    const FieldElem* old_row = row_multiple(d, digits[d]);
    const FieldElem* new_row = row_multiple(d, digits[d] + 1);
    for (std::size_t c = 0; c < n; ++c) word[c] = f.add(f.sub(word[c], old_row[c]), new_row[c]);
    ++digits[d];
    weigh();
  }
  return best;
}

struct TrialResult {
  std::size_t positions_tested = 0;
  std::size_t sets_attempted = 0;
  std::size_t sets_recovered = 0;
  std::size_t sets_skipped = 0;
  std::size_t positions_unrecoverable = 0;
  std::vector<std::size_t> per_set_success;
  std::vector<recovery::RecoveryFailure> failures;
};

inline TrialResult run_trial(const codes::Code& code, const recovery::RecoveryPlan& plan,
                             const recovery::SimulationOptions& options, std::size_t trial) {
  const Field& f = code.spec.field;
  Rng rng(options.seed, trial);
  std::vector<FieldElem> message(code.k());
  for (auto& m : message) m = FieldElem{rng.below(f.q2())};
  const std::vector<FieldElem> truth = codes::encode(f, code.generator, message);

  // partial Fisher-Yates for distinct erased positions
  std::vector<std::size_t> order(code.n());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i < options.erasures; ++i) {
    std::swap(order[i], order[i + rng.below(order.size() - i)]);
  }
  std::vector<bool> erased(code.n(), false);
  std::vector<FieldElem> received = truth;
  for (std::size_t i = 0; i < options.erasures; ++i) {
    erased[order[i]] = true;
    received[order[i]] = FieldElem{};
  }

  TrialResult out;
  out.per_set_success.assign(f.q2() - 1, 0);
  for (std::size_t e = 0; e < options.erasures; ++e) {
    const std::size_t pos = order[e];
    const auto& sets = plan.sets[pos];
    const auto res = recovery::repair_position(code.curve, received, erased, pos, sets, truth[pos]);
    ++out.positions_tested;
    out.sets_attempted += res.attempted;
    out.sets_recovered += res.recovered;
    out.sets_skipped += res.skipped;
    if (res.attempted == 0) ++out.positions_unrecoverable;
    for (std::size_t s = 0; s < res.status.size(); ++s) {
      if (res.status[s] == recovery::SetStatus::Recovered) ++out.per_set_success[s];
      if (res.status[s] == recovery::SetStatus::Failed) out.failures.push_back({trial, pos, s});
    }
  }
  return out;
}

inline recovery::ErasureReport merge_trials(const recovery::SimulationOptions& options, std::size_t set_count,
                                            const std::vector<TrialResult>& results) {
  recovery::ErasureReport rep;
  rep.trials = options.trials;
  rep.seed = options.seed;
  rep.erasures = options.erasures;
  rep.per_set_success.assign(set_count, 0);
  for (const auto& r : results) {
    rep.positions_tested += r.positions_tested;
    rep.sets_attempted += r.sets_attempted;
    rep.sets_recovered += r.sets_recovered;
    rep.sets_skipped += r.sets_skipped;
    rep.positions_unrecoverable += r.positions_unrecoverable;
    for (std::size_t s = 0; s < set_count; ++s) rep.per_set_success[s] += r.per_set_success[s];
    rep.failures.insert(rep.failures.end(), r.failures.begin(), r.failures.end());
  }
  return rep;
}

}  // namespace hermlift::kernels::detail
