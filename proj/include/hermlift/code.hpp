#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hermlift/curve.hpp"
#include "hermlift/gf.hpp"
#include "hermlift/liftcrit.hpp"
#include "hermlift/matrix.hpp"
#include "hermlift/parallel.hpp"

namespace hermlift::codes {

using gf::Field;
using gf::FieldElem;
using lift::Rational;

/// Why a monomial is in a basis.
enum class Provenance { OnePoint, Oracle, Sufficient };

/// x^a y^b.
struct Monomial {
  unsigned a = 0;
  unsigned b = 0;
  Provenance provenance = Provenance::Oracle;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

enum class CodeKind { LiftedOracle, LiftedSufficient, OnePoint };

const char* kind_name(CodeKind kind) noexcept;
/// Parses lifted-oracle | lifted-sufficient | onepoint.
std::optional<CodeKind> parse_kind(const std::string& name);

struct CodeOptions {
  CodeKind kind = CodeKind::LiftedOracle;
  std::uint64_t r = 0;  // one-point degree bound
  lift::LineScope scope = lift::LineScope::NonTangent;
  Execution exec = Execution::Parallel;
};

struct CodeSpec {
  Field field;
  CodeKind kind;
  std::uint64_t r;
  lift::LineScope scope;
  std::vector<Monomial> basis;  // ordered by (b, a)
};

struct Code {
  CodeSpec spec;
  curve::HermitianCurve curve;
  FieldMatrix generator;  // |basis| x q^3, canonical point order
  std::size_t rank = 0;

  std::size_t n() const noexcept { return generator.cols; }
  std::size_t k() const noexcept { return generator.rows; }
};

/// {x^i y^j : j <= q-1, iq + j(q+1) <= r}, as Monomial{a = i, b = j}.
std::vector<Monomial> onepoint_basis(const Field& f, std::uint64_t r);

/// r + 1 - q(q-1)/2; valid for q^2 - q - 2 < r < q^3.
std::uint64_t onepoint_dimension(std::uint64_t q, std::uint64_t r);
bool onepoint_formula_applies(std::uint64_t q, std::uint64_t r);

/// Good monomials in (b, a) order, by oracle or by the sufficient digit condition.
std::vector<Monomial> lifted_basis(const Field& f, CodeKind kind, lift::LineScope scope = lift::LineScope::NonTangent,
                                   Execution exec = Execution::Parallel);

/// Throws Error(RankDeficient) if the evaluation vectors are dependent.
Code build_code(const Field& f, const CodeOptions& options);

/// Rank by fraction-free elimination, pivot = first nonzero in column order.
std::size_t rank(const Field& f, FieldMatrix m);

std::vector<FieldElem> encode(const Field& f, const FieldMatrix& generator, std::span<const FieldElem> message);

struct RateReport {
  std::size_t n = 0;
  std::size_t k = 0;
  Rational rate;
  std::uint64_t onepoint_dim = 0;  // dimension of the one-point code with r = q^2 - 1
  Rational onepoint_rate;
  Rational rate_bound;  // odd p: .469/(p^4(p-1)(p^3-p^2+1)); p = 2: 7/1000
  bool rate_ge_bound = false;
  bool rate_ge_onepoint_rate = false;
};

RateReport rate_report(const Code& code);

/// Throws Error(LengthMismatch).
std::size_t hamming_distance(std::span<const FieldElem> u, std::span<const FieldElem> v);

/// Largest order^k this library will enumerate.
inline constexpr std::uint64_t kMaxEnumeratedCodewords = 100'000'000;

/// Exact minimum distance (= minimum nonzero weight) by enumerating every
/// nonzero message. Throws Error(TooLargeToEnumerate) or Error(InvalidArgument)
/// for an empty generator.
std::size_t min_distance_bruteforce(const Field& f, const FieldMatrix& generator,
                                    Execution exec = Execution::Parallel);
std::size_t min_distance_bruteforce(const gf::PrimeField& f, const FieldMatrix& generator,
                                    Execution exec = Execution::Parallel);

}  // namespace hermlift::codes
