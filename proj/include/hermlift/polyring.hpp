#pragma once

#include <limits>
#include <span>
#include <vector>

#include "hermlift/gf.hpp"

namespace hermlift::poly {

using gf::Field;
using gf::FieldElem;

/// Polynomial degree; the zero polynomial has kMinusInfinity, which compares
/// below every real degree.
using Degree = int;
inline constexpr Degree kMinusInfinity = std::numeric_limits<int>::min();

/// Univariate polynomial over F_{q^2}, constant term first, no trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElem> coeffs);

  static UniPoly constant(FieldElem c);
  /// c * t^k
  static UniPoly term(FieldElem c, std::size_t k);

  const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
  Degree degree() const noexcept {
    return coeffs_.empty() ? kMinusInfinity : static_cast<Degree>(coeffs_.size() - 1);
  }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of t^k (zero past the end).
  FieldElem coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : FieldElem{}; }

  FieldElem evaluate(const Field& f, FieldElem t) const noexcept;

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  void normalize();
  std::vector<FieldElem> coeffs_;
};

UniPoly add(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly sub(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b);
UniPoly scale(const Field& f, const UniPoly& a, FieldElem c);

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// g = quotient * m + remainder with deg(remainder) < deg(m). Throws Error(DivisionByZeroPoly).
DivMod divmod(const Field& f, const UniPoly& g, const UniPoly& m);
UniPoly poly_mod(const Field& f, const UniPoly& g, const UniPoly& m);

struct Sample {
  FieldElem t;
  FieldElem value;
};

/// The unique polynomial of degree < samples.size() through every sample.
/// Throws Error(DuplicateNode) on repeated nodes, Error(InvalidArgument) on no samples.
UniPoly lagrange_interpolate(const Field& f, std::span<const Sample> samples);

/// Value at `at` of the interpolating polynomial, without building it.
FieldElem lagrange_evaluate(const Field& f, std::span<const Sample> samples, FieldElem at);

/// (alpha t + beta)^a t^b, expanded with binomials reduced mod p; terms whose
/// binomial vanishes mod p are left out.
UniPoly restrict_monomial(const Field& f, unsigned a, unsigned b, FieldElem alpha, FieldElem beta);

/// Product of (t - r) over the given roots.
UniPoly from_roots(const Field& f, std::span<const FieldElem> roots);

}  // namespace hermlift::poly
