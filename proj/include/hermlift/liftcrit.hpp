#pragma once

// Good-monomial criteria for Hermitian-lifted codes.
//
// A monomial x^a y^b (a < q, b < q^2) is good when, for every line
// L(t) = (alpha t + beta, t), the restriction (alpha t + beta)^a t^b reduced
// modulo p_{alpha,beta}(t) = t^{q+1} + alpha^q t^q + alpha t + gamma has degree
// at most q-1. This header carries the exact reduction oracle together with
// the power-sum machinery that yields sufficient conditions for goodness:
// the recurrence on power sums of the roots, the Kronecker factorisation of
// the power-sum matrix, the digit condition on exponents of t, and the digit
// condition on (a, b).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "hermlift/curve.hpp"
#include "hermlift/gf.hpp"
#include "hermlift/matrix.hpp"
#include "hermlift/numtheory.hpp"
#include "hermlift/parallel.hpp"
#include "hermlift/polyring.hpp"

namespace hermlift::lift {

using curve::LineParam;
using gf::Field;
using gf::FieldElem;
using Rational = boost::rational<std::int64_t>;

/// Degree of g mod p_{alpha,beta}; at most q.
poly::Degree deg_alpha_beta(const Field& f, const poly::UniPoly& g, const LineParam& line);

/// Which lines the goodness oracle quantifies over. The default skips tangent
/// lines (they meet the curve once, so any function agrees with a constant
/// there); All applies the definition to every (alpha, beta) literally.
enum class LineScope { NonTangent, All };

struct MonomialVerdict {
  unsigned a = 0;
  unsigned b = 0;
  bool oracle_good = false;
  bool sufficient_good = false;
  std::optional<LineParam> witness;  // first failing line in (alpha, beta) code order

  friend bool operator==(const MonomialVerdict&, const MonomialVerdict&) = default;
};

/// Throws Error(ExponentOutOfRange) unless a <= q-1 and b <= q^2-1.
void check_exponents(const Field& f, unsigned a, unsigned b);

/// Goodness by full reduction of the restricted monomial on each line.
MonomialVerdict is_good_oracle(const Field& f, unsigned a, unsigned b, LineScope scope = LineScope::NonTangent);

/// Coefficients of t^q in t^k mod p_{alpha,gamma} for every alpha in F_{q^2},
/// gamma in F_q and 0 <= k < q^2 + q - 1. p_{alpha,beta} depends on beta only
/// through gamma, so these tables decide goodness of every monomial on every
/// line by a short linear combination.
class ReductionTables {
 public:
  static ReductionTables build(const Field& f);

  const Field& field() const noexcept { return field_; }
  std::size_t kmax() const noexcept { return kmax_; }
  FieldElem tq_coeff(FieldElem alpha, FieldElem gamma, std::size_t k) const {
    return data_[slot(alpha, gamma) * kmax_ + k];
  }
  std::span<const FieldElem> row(FieldElem alpha, FieldElem gamma) const {
    return {data_.data() + slot(alpha, gamma) * kmax_, kmax_};
  }

 private:
  explicit ReductionTables(Field f) : field_(std::move(f)) {}
  std::size_t slot(FieldElem alpha, FieldElem gamma) const {
    return static_cast<std::size_t>(alpha.code) * field_.q() + gamma_slot_[gamma.code];
  }

  Field field_;
  std::size_t kmax_ = 0;
  std::vector<std::uint32_t> gamma_slot_;  // gamma code -> 0..q-1
  std::vector<FieldElem> data_;
};

/// Goodness of x^a y^b on one line through the tables.
bool good_on_line(const ReductionTables& tables, unsigned a, unsigned b, const LineParam& line);

/// Same verdict as is_good_oracle, via the tables.
MonomialVerdict is_good_tabulated(const ReductionTables& tables, unsigned a, unsigned b,
                                  LineScope scope = LineScope::NonTangent);

/// Lines in (alpha, beta) code order, restricted to the scope.
std::vector<LineParam> scoped_lines(const Field& f, LineScope scope);

/// Verdicts for every monomial, ordered by (b, a), against the given lines.
std::vector<MonomialVerdict> classify_monomials(const ReductionTables& tables, std::span<const LineParam> lines,
                                                Execution exec = Execution::Parallel);

// -- power sums ---------------------------------------------------------------

/// P_k = sum of sigma_i^k over the q+1 roots of p_{alpha,beta}, k = 0..kmax.
struct PowerSumTable {
  FieldElem alpha;
  FieldElem gamma;
  std::vector<FieldElem> values;

  FieldElem operator[](std::size_t k) const { return values[k]; }
};

/// Sums of powers of the roots found by scanning F_{q^2}. Throws Error(TangentLine).
PowerSumTable power_sums_direct(const Field& f, const LineParam& line, std::size_t kmax);

/// Seeds P_k = (-1)^k alpha^{qk} (k < q), P_q = -alpha, then
/// P_k = -alpha^q P_{k-1} - alpha P_{k-q} - gamma P_{k-q-1}. Throws Error(TangentLine).
PowerSumTable power_sums_recurrence(const Field& f, const LineParam& line, std::size_t kmax);

struct DegreeCriterionSides {
  bool deg_lt_q = false;
  bool recurrence_holds = false;
};

/// Both sides of: deg_{alpha,beta}(t^k) < q  <=>  P_{k+1} = -alpha^q P_k.
DegreeCriterionSides degree_criterion_check(const Field& f, const LineParam& line, unsigned k);

/// q x q matrix with entry (r, c) = P_{cq + r}; needs values up to q^2 - 1.
FieldMatrix gamma_matrix(const Field& f, const PowerSumTable& sums);

/// Every adjacent 2x2 block satisfies M22 = -alpha^q M12 - alpha M21 - gamma M11.
bool satisfies_block_relation(const Field& f, const FieldMatrix& m, FieldElem alpha, FieldElem gamma);

// -- B matrices and the Kronecker factorisation -------------------------------

/// Entry (i, j), 1-indexed, of the p x p matrix B:
/// sum_{n < min(i,j)} (-1)^{i+j-n} C(i-1,n) C(i+j-n-2,i-1) alpha^{(i-1-n)q+j-1-n} gamma^n,
/// binomials reduced mod p.
FieldElem b_entry(const Field& f, unsigned i, unsigned j, FieldElem alpha, FieldElem gamma);

/// B_h: the p x p matrix of b_entry values raised to p^{l-h}, 1 <= h <= l.
FieldMatrix b_matrix(const Field& f, unsigned h, FieldElem alpha, FieldElem gamma);

/// Closed form of the last row: B_{p,j} = (-1)^{j-1} alpha^{(p-j)q} gamma^{j-1}.
FieldElem b_last_row(const Field& f, unsigned j, FieldElem alpha, FieldElem gamma);

/// Closed form of the last column, B_{i,p} = (-1)^{i-1} alpha^{p-i} gamma^{i-1}.
/// The sign alternates with i; the variant with a constant (-1)^{p-1} sign
/// disagrees with b_entry at every even i when alpha and gamma are nonzero.
FieldElem b_last_column(const Field& f, unsigned i, FieldElem alpha, FieldElem gamma);
FieldElem b_last_column_constant_sign(const Field& f, unsigned i, FieldElem alpha, FieldElem gamma);

/// Block matrix [a_ij * B].
FieldMatrix kronecker(const Field& f, const FieldMatrix& a, const FieldMatrix& b);

/// gamma_matrix(line) == B_1 (x) B_2 (x) ... (x) B_l. Throws Error(TangentLine).
bool verify_gamma_factorization(const Field& f, const LineParam& line);

// -- digit conditions ---------------------------------------------------------

/// k = wq + z with z < q: true iff w = 0, or some i in [1, l] has
/// w = 0 mod p^i and z != -1 mod p^i.
bool digit_condition_k(std::uint64_t k, const Field& f);

using hermlift::lucas_nonzero;

/// True iff for some i in [1, l]: b = wq + b' with w = 0 mod p^i, b' < p^{l-1},
/// a < p^{l-1}, and some s in [0, i-1] has base-p digits a_s = b'_s = 0.
/// Throws Error(ExponentOutOfRange).
bool sufficient_condition(unsigned a, unsigned b, const Field& f);

/// .469 / (p^4 (p-1) (p^3 - p^2 + 1)) for odd p. Throws Error(EvenPrime) for p = 2.
Rational rate_lower_bound(std::uint64_t p);

/// The characteristic-2 constant 0.007 = 7/1000.
Rational char2_rate_lower_bound();

}  // namespace hermlift::lift
