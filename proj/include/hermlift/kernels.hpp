#pragma once

// Data-parallel kernels. Every kernel has a serial reference and an OpenMP
// version in a namespace of the same shape; the two return identical results
// for any worker count.

#include <span>
#include <vector>

#include "hermlift/code.hpp"
#include "hermlift/curve.hpp"
#include "hermlift/liftcrit.hpp"
#include "hermlift/matrix.hpp"
#include "hermlift/recovery.hpp"

namespace hermlift::kernels {

namespace serial {

std::vector<lift::MonomialVerdict> classify_monomials(const lift::ReductionTables& tables,
                                                      std::span<const curve::LineParam> lines);

/// Row m, column i = x_i^{a_m} y_i^{b_m}.
FieldMatrix evaluate_monomials(const curve::HermitianCurve& curve, std::span<const codes::Monomial> basis);

/// Smallest nonzero codeword weight over all order^k - 1 nonzero messages.
std::size_t min_weight(const gf::Field& f, const FieldMatrix& generator);
std::size_t min_weight(const gf::PrimeField& f, const FieldMatrix& generator);

recovery::ErasureReport erasure_trials(const codes::Code& code, const recovery::RecoveryPlan& plan,
                                       const recovery::SimulationOptions& options);

}  // namespace serial

namespace parallel {

std::vector<lift::MonomialVerdict> classify_monomials(const lift::ReductionTables& tables,
                                                      std::span<const curve::LineParam> lines);
FieldMatrix evaluate_monomials(const curve::HermitianCurve& curve, std::span<const codes::Monomial> basis);
std::size_t min_weight(const gf::Field& f, const FieldMatrix& generator);
std::size_t min_weight(const gf::PrimeField& f, const FieldMatrix& generator);
recovery::ErasureReport erasure_trials(const codes::Code& code, const recovery::RecoveryPlan& plan,
                                       const recovery::SimulationOptions& options);

}  // namespace parallel

}  // namespace hermlift::kernels
