#include "hermlift/code.hpp"

#include <algorithm>

#include "hermlift/errors.hpp"
#include "hermlift/kernels.hpp"

namespace hermlift::codes {

const char* kind_name(CodeKind kind) noexcept {
  switch (kind) {
    case CodeKind::LiftedOracle: return "lifted-oracle";
    case CodeKind::LiftedSufficient: return "lifted-sufficient";
    case CodeKind::OnePoint: return "onepoint";
  }
  return "unknown";
}

std::optional<CodeKind> parse_kind(const std::string& name) {
  if (name == "lifted-oracle") return CodeKind::LiftedOracle;
  if (name == "lifted-sufficient") return CodeKind::LiftedSufficient;
  if (name == "onepoint") return CodeKind::OnePoint;
  return std::nullopt;
}

std::vector<Monomial> onepoint_basis(const Field& f, std::uint64_t r) {
  const std::uint64_t q = f.q();
  std::vector<Monomial> out;
  for (std::uint64_t j = 0; j < q; ++j) {
    for (std::uint64_t i = 0; i * q + j * (q + 1) <= r; ++i) {
      out.push_back({static_cast<unsigned>(i), static_cast<unsigned>(j), Provenance::OnePoint});
    }
  }
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) {
    return std::tie(x.b, x.a) < std::tie(y.b, y.a);
  });
  return out;
}

std::uint64_t onepoint_dimension(std::uint64_t q, std::uint64_t r) { return r + 1 - q * (q - 1) / 2; }

bool onepoint_formula_applies(std::uint64_t q, std::uint64_t r) { return q * q - q - 2 < r && r < q * q * q; }

std::vector<Monomial> lifted_basis(const Field& f, CodeKind kind, lift::LineScope scope, Execution exec) {
  std::vector<Monomial> out;
  if (kind == CodeKind::LiftedSufficient) {
    for (unsigned b = 0; b < f.q2(); ++b) {
      for (unsigned a = 0; a < f.q(); ++a) {
        if (lift::sufficient_condition(a, b, f)) out.push_back({a, b, Provenance::Sufficient});
      }
    }
    return out;
  }
  const auto tables = lift::ReductionTables::build(f);
  const auto lines = lift::scoped_lines(f, scope);
  for (const auto& v : lift::classify_monomials(tables, lines, exec)) {
    if (v.oracle_good) out.push_back({v.a, v.b, Provenance::Oracle});
  }
  return out;
}

std::size_t rank(const Field& f, FieldMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    const FieldElem pv = m(r, c);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const FieldElem e = m(i, c);
      if (e.is_zero()) continue;
      // row_i <- pv * row_i - e * row_r
      for (std::size_t j = c; j < m.cols; ++j) m(i, j) = f.sub(f.mul(pv, m(i, j)), f.mul(e, m(r, j)));
    }
    ++r;
  }
  return r;
}

Code build_code(const Field& f, const CodeOptions& options) {
  std::vector<Monomial> basis = options.kind == CodeKind::OnePoint
                                    ? onepoint_basis(f, options.r)
                                    : lifted_basis(f, options.kind, options.scope, options.exec);
  curve::HermitianCurve curve(f);
  FieldMatrix generator = options.exec == Execution::Serial ? kernels::serial::evaluate_monomials(curve, basis)
                                                            : kernels::parallel::evaluate_monomials(curve, basis);
  const std::size_t rk = rank(f, generator);
  if (rk != generator.rows) {
    throw Error(Errc::RankDeficient, "generator rank " + std::to_string(rk) + " < " +
                                         std::to_string(generator.rows) + " rows");
  }
  return Code{CodeSpec{f, options.kind, options.r, options.scope, std::move(basis)}, std::move(curve),
              std::move(generator), rk};
}

std::vector<FieldElem> encode(const Field& f, const FieldMatrix& generator, std::span<const FieldElem> message) {
  if (message.size() != generator.rows) throw Error(Errc::LengthMismatch, "message length != code dimension");
  std::vector<FieldElem> out(generator.cols);
  for (std::size_t r = 0; r < generator.rows; ++r) {
    if (message[r].is_zero()) continue;
    const auto row = generator.row(r);
    for (std::size_t c = 0; c < generator.cols; ++c) out[c] = f.add(out[c], f.mul(message[r], row[c]));
  }
  return out;
}

RateReport rate_report(const Code& code) {
  const Field& f = code.spec.field;
  const std::uint64_t q = f.q();
  RateReport rep;
  rep.n = code.n();
  rep.k = code.k();
  rep.rate = Rational(static_cast<std::int64_t>(rep.k), static_cast<std::int64_t>(rep.n));
  rep.onepoint_dim = onepoint_dimension(q, q * q - 1);
  rep.onepoint_rate = Rational(static_cast<std::int64_t>(rep.onepoint_dim), static_cast<std::int64_t>(q * q * q));
  rep.rate_bound = f.p() == 2 ? lift::char2_rate_lower_bound() : lift::rate_lower_bound(f.p());
  rep.rate_ge_bound = rep.rate >= rep.rate_bound;
  rep.rate_ge_onepoint_rate = rep.rate >= rep.onepoint_rate;
  return rep;
}

std::size_t hamming_distance(std::span<const FieldElem> u, std::span<const FieldElem> v) {
  if (u.size() != v.size()) throw Error(Errc::LengthMismatch, "vectors of different length");
  std::size_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
  return d;
}

namespace {

void check_enumerable(std::uint64_t order, const FieldMatrix& g) {
  if (g.rows == 0 || g.cols == 0) throw Error(Errc::InvalidArgument, "minimum distance of an empty code");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < g.rows; ++i) {
    count *= order;
    if (count > kMaxEnumeratedCodewords) {
      throw Error(Errc::TooLargeToEnumerate, "order^k exceeds " + std::to_string(kMaxEnumeratedCodewords));
    }
  }
}

}  // namespace

std::size_t min_distance_bruteforce(const Field& f, const FieldMatrix& generator, Execution exec) {
  check_enumerable(f.order(), generator);
  return exec == Execution::Serial ? kernels::serial::min_weight(f, generator)
                                   : kernels::parallel::min_weight(f, generator);
}

std::size_t min_distance_bruteforce(const gf::PrimeField& f, const FieldMatrix& generator, Execution exec) {
  check_enumerable(f.order(), generator);
  return exec == Execution::Serial ? kernels::serial::min_weight(f, generator)
                                   : kernels::parallel::min_weight(f, generator);
}

}  // namespace hermlift::codes
