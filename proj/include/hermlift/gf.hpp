#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace hermlift::gf {

/// Element of F_{q^2}, stored as the base-p integer sum(coeffs[i] * p^i) of its
/// coefficient vector modulo the field's defining polynomial. The code of an
/// element is also its position in Field::elements().
struct FieldElem {
  std::uint64_t code = 0;

  constexpr bool is_zero() const noexcept { return code == 0; }
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

/// The field F_{q^2}, q = p^l, realised as F_p[z] / (m(z)) with deg m = 2l.
///
/// m is the least monic irreducible polynomial of degree 2l when monic
/// candidates are ordered by (c_{2l-1}, ..., c_0) as a base-p integer. When
/// q^2 <= 2^20 a discrete-log/Zech table is built and used for every
/// operation; the schoolbook polynomial routines stay available as reference
/// paths and give identical results.
///
/// Copies share the immutable tables, so a Field is cheap to pass by value and
/// safe to use from many threads.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 40;
  static constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 20;

  /// Throws Error(NonPrime) or Error(TooLarge).
  static Field create(std::uint64_t p, unsigned l);

  std::uint64_t p() const noexcept { return p_; }
  unsigned l() const noexcept { return l_; }
  unsigned degree() const noexcept { return 2 * l_; }
  std::uint64_t q() const noexcept { return q_; }
  std::uint64_t q2() const noexcept { return q2_; }
  std::uint64_t order() const noexcept { return q2_; }

  /// Coefficients of the defining polynomial, constant term first, monic (length 2l+1).
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// Image of an integer in the prime subfield.
  FieldElem from_int(std::int64_t v) const noexcept;
  /// Throws Error(InvalidArgument) when code >= q^2.
  FieldElem from_code(std::uint64_t code) const;
  FieldElem from_coeffs(std::span<const std::uint64_t> coeffs) const;
  std::vector<std::uint64_t> coeffs(FieldElem x) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept;
  FieldElem sub(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg(FieldElem a) const noexcept;
  FieldElem mul(FieldElem a, FieldElem b) const noexcept;
  /// Throws Error(DivisionByZero) for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;

  /// x^q.
  FieldElem frobenius(FieldElem x) const noexcept;
  /// x + x^q, lands in F_q.
  FieldElem trace(FieldElem x) const noexcept;
  /// x^{q+1}, lands in F_q.
  FieldElem norm(FieldElem x) const noexcept;
  bool in_subfield(FieldElem x) const noexcept { return frobenius(x) == x; }

  /// All q^2 elements ordered by code; index 0 is zero, index 1 is one.
  std::vector<FieldElem> elements() const;
  /// The q elements of F_q in code order.
  std::vector<FieldElem> subfield_elements() const;

  bool has_log_tables() const noexcept { return tables_ != nullptr; }
  /// Primitive element behind the log tables; throws when tables are absent.
  FieldElem generator() const;

  // Reference arithmetic on coefficient polynomials, independent of the tables.
  FieldElem add_digitwise(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg_digitwise(FieldElem a) const noexcept;
  FieldElem mul_schoolbook(FieldElem a, FieldElem b) const noexcept;
  FieldElem pow_schoolbook(FieldElem a, std::uint64_t e) const noexcept;
  /// Extended Euclid on coefficient polynomials.
  FieldElem inv_euclid(FieldElem a) const;

 private:
  struct Tables {
    std::uint32_t cycle = 0;            // q^2 - 1
    std::uint32_t log_minus_one = 0;    // log(-1)
    std::vector<std::uint32_t> log;     // log[code], log[0] unused
    std::vector<std::uint32_t> exp;     // exp[k], k in [0, 2*cycle)
    std::vector<std::uint32_t> zech;    // log(1 + g^k), kZechZero when zero
  };
  static constexpr std::uint32_t kZechZero = 0xffffffffu;

  Field() = default;
  void build_tables();

  std::uint64_t p_ = 0;
  unsigned l_ = 0;
  std::uint64_t q_ = 0;
  std::uint64_t q2_ = 0;
  std::vector<std::uint64_t> modulus_;
  std::shared_ptr<const Tables> tables_;
};

/// F_p on its own, for codes over a prime field (the binary example code).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return p_; }
  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  FieldElem add(FieldElem a, FieldElem b) const noexcept { return {(a.code + b.code) % p_}; }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept { return {(a.code + p_ - b.code) % p_}; }
  FieldElem neg(FieldElem a) const noexcept { return {(p_ - a.code) % p_}; }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept { return {(a.code * b.code) % p_}; }
  FieldElem inv(FieldElem a) const;

 private:
  std::uint64_t p_;
};

/// Finite field whose elements are exactly the codes 0 .. order()-1.
template <class F>
concept FiniteField = requires(const F& f, FieldElem a) {
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { f.zero() } -> std::same_as<FieldElem>;
  { f.add(a, a) } -> std::same_as<FieldElem>;
  { f.sub(a, a) } -> std::same_as<FieldElem>;
  { f.mul(a, a) } -> std::same_as<FieldElem>;
  { f.inv(a) } -> std::same_as<FieldElem>;
};

}  // namespace hermlift::gf
