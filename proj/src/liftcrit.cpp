#include "hermlift/liftcrit.hpp"

#include <string>

#include "hermlift/errors.hpp"
#include "hermlift/kernels.hpp"

namespace hermlift::lift {

poly::Degree deg_alpha_beta(const Field& f, const poly::UniPoly& g, const LineParam& line) {
  return poly::poly_mod(f, g, curve::line_poly(f, line)).degree();
}

void check_exponents(const Field& f, unsigned a, unsigned b) {
  if (a >= f.q() || b >= f.q2()) {
    throw Error(Errc::ExponentOutOfRange,
                "monomial (" + std::to_string(a) + ", " + std::to_string(b) + ") outside a < q, b < q^2");
  }
}

std::vector<LineParam> scoped_lines(const Field& f, LineScope scope) {
  std::vector<LineParam> lines = curve::all_lines(f);
  if (scope == LineScope::NonTangent) std::erase_if(lines, [](const LineParam& l) { return l.tangent; });
  return lines;
}

MonomialVerdict is_good_oracle(const Field& f, unsigned a, unsigned b, LineScope scope) {
  check_exponents(f, a, b);
  MonomialVerdict v{a, b, true, sufficient_condition(a, b, f), std::nullopt};
  const auto limit = static_cast<poly::Degree>(f.q()) - 1;
  for (std::uint64_t ac = 0; ac < f.q2() && v.oracle_good; ++ac) {
    for (std::uint64_t bc = 0; bc < f.q2(); ++bc) {
      const LineParam line = curve::make_line(f, FieldElem{ac}, FieldElem{bc});
      if (scope == LineScope::NonTangent && line.tangent) continue;
      const poly::UniPoly g = poly::restrict_monomial(f, a, b, line.alpha, line.beta);
      if (deg_alpha_beta(f, g, line) > limit) {
        v.oracle_good = false;
        v.witness = line;
        break;
      }
    }
  }
  return v;
}

ReductionTables ReductionTables::build(const Field& f) {
  ReductionTables t(f);
  const std::uint64_t q = f.q();
  t.kmax_ = static_cast<std::size_t>(q * q + q - 1);
  t.gamma_slot_.assign(f.q2(), 0);
  const auto sub = f.subfield_elements();
  for (std::size_t i = 0; i < sub.size(); ++i) t.gamma_slot_[sub[i].code] = static_cast<std::uint32_t>(i);
  t.data_.assign(f.q2() * q * t.kmax_, FieldElem{});

  std::vector<FieldElem> r(q + 1);
  for (std::uint64_t ac = 0; ac < f.q2(); ++ac) {
    const FieldElem alpha{ac};
    const FieldElem alpha_q = f.frobenius(alpha);
    for (const FieldElem gamma : sub) {
      FieldElem* out = t.data_.data() + t.slot(alpha, gamma) * t.kmax_;
      // r holds t^k mod p as coefficients of t^0..t^q
      std::fill(r.begin(), r.end(), FieldElem{});
      r[0] = f.one();
      for (std::size_t k = 0; k < t.kmax_; ++k) {
        out[k] = r[q];
        const FieldElem top = r[q];
        for (std::size_t i = q; i > 0; --i) r[i] = r[i - 1];
        r[0] = FieldElem{};
        if (!top.is_zero()) {
          // t^{q+1} = -alpha^q t^q - alpha t - gamma
          r[q] = f.sub(r[q], f.mul(top, alpha_q));
          r[1] = f.sub(r[1], f.mul(top, alpha));
          r[0] = f.sub(r[0], f.mul(top, gamma));
        }
      }
    }
  }
  return t;
}

bool good_on_line(const ReductionTables& tables, unsigned a, unsigned b, const LineParam& line) {
  const Field& f = tables.field();
  const auto row = tables.row(line.alpha, line.gamma);
  FieldElem acc{};
  for (unsigned j = 0; j <= a; ++j) {
    const std::uint64_t binom = binomial_mod_p(a, j, f.p());
    if (binom == 0) continue;
    const FieldElem c = row[b + j];
    if (c.is_zero()) continue;
    const FieldElem term = f.mul(f.from_int(static_cast<std::int64_t>(binom)),
                                 f.mul(f.pow(line.alpha, j), f.pow(line.beta, a - j)));
    acc = f.add(acc, f.mul(term, c));
  }
  return acc.is_zero();
}

MonomialVerdict is_good_tabulated(const ReductionTables& tables, unsigned a, unsigned b, LineScope scope) {
  const Field& f = tables.field();
  check_exponents(f, a, b);
  MonomialVerdict v{a, b, true, sufficient_condition(a, b, f), std::nullopt};
  for (std::uint64_t ac = 0; ac < f.q2() && v.oracle_good; ++ac) {
    for (std::uint64_t bc = 0; bc < f.q2(); ++bc) {
      const LineParam line = curve::make_line(f, FieldElem{ac}, FieldElem{bc});
      if (scope == LineScope::NonTangent && line.tangent) continue;
      if (!good_on_line(tables, a, b, line)) {
        v.oracle_good = false;
        v.witness = line;
        break;
      }
    }
  }
  return v;
}

std::vector<MonomialVerdict> classify_monomials(const ReductionTables& tables, std::span<const LineParam> lines,
                                                Execution exec) {
  return exec == Execution::Serial ? kernels::serial::classify_monomials(tables, lines)
                                   : kernels::parallel::classify_monomials(tables, lines);
}

// -- power sums ---------------------------------------------------------------

namespace {

void require_non_tangent(const LineParam& line) {
  if (line.tangent) throw Error(Errc::TangentLine, "power sums need a line meeting the curve in q+1 points");
}

}  // namespace

PowerSumTable power_sums_direct(const Field& f, const LineParam& line, std::size_t kmax) {
  require_non_tangent(line);
  const auto roots = curve::line_roots(f, line);
  PowerSumTable t{line.alpha, line.gamma, std::vector<FieldElem>(kmax + 1)};
  std::vector<FieldElem> powers(roots.size(), f.one());
  for (std::size_t k = 0; k <= kmax; ++k) {
    FieldElem s{};
    for (std::size_t i = 0; i < roots.size(); ++i) {
      s = f.add(s, powers[i]);
      powers[i] = f.mul(powers[i], roots[i]);
    }
    t.values[k] = s;
  }
  return t;
}

PowerSumTable power_sums_recurrence(const Field& f, const LineParam& line, std::size_t kmax) {
  require_non_tangent(line);
  const std::uint64_t q = f.q();
  const FieldElem alpha_q = f.frobenius(line.alpha);
  const FieldElem minus_alpha_q = f.neg(alpha_q);
  PowerSumTable t{line.alpha, line.gamma, std::vector<FieldElem>(kmax + 1)};
  FieldElem seed = f.one();
  for (std::size_t k = 0; k <= kmax && k < q; ++k) {
    t.values[k] = seed;
    seed = f.mul(seed, minus_alpha_q);
  }
  if (kmax >= q) t.values[q] = f.neg(line.alpha);
  for (std::size_t k = q + 1; k <= kmax; ++k) {
    FieldElem v = f.mul(minus_alpha_q, t.values[k - 1]);
    v = f.sub(v, f.mul(line.alpha, t.values[k - q]));
    v = f.sub(v, f.mul(line.gamma, t.values[k - q - 1]));
    t.values[k] = v;
  }
  return t;
}

DegreeCriterionSides degree_criterion_check(const Field& f, const LineParam& line, unsigned k) {
  require_non_tangent(line);
  const auto sums = power_sums_direct(f, line, static_cast<std::size_t>(k) + 1);
  DegreeCriterionSides sides;
  sides.deg_lt_q =
      deg_alpha_beta(f, poly::UniPoly::term(f.one(), k), line) < static_cast<poly::Degree>(f.q());
  sides.recurrence_holds = sums[k + 1] == f.mul(f.neg(f.frobenius(line.alpha)), sums[k]);
  return sides;
}

FieldMatrix gamma_matrix(const Field& f, const PowerSumTable& sums) {
  const std::size_t q = f.q();
  if (sums.values.size() < q * q) throw Error(Errc::InvalidArgument, "gamma matrix needs P_0 .. P_{q^2-1}");
  FieldMatrix m(q, q);
  for (std::size_t r = 0; r < q; ++r) {
    for (std::size_t c = 0; c < q; ++c) m(r, c) = sums[c * q + r];
  }
  return m;
}

bool satisfies_block_relation(const Field& f, const FieldMatrix& m, FieldElem alpha, FieldElem gamma) {
  const FieldElem alpha_q = f.frobenius(alpha);
  for (std::size_t r = 0; r + 1 < m.rows; ++r) {
    for (std::size_t c = 0; c + 1 < m.cols; ++c) {
      FieldElem rhs = f.neg(f.mul(alpha_q, m(r, c + 1)));
      rhs = f.sub(rhs, f.mul(alpha, m(r + 1, c)));
      rhs = f.sub(rhs, f.mul(gamma, m(r, c)));
      if (rhs != m(r + 1, c + 1)) return false;
    }
  }
  return true;
}

// -- B matrices ---------------------------------------------------------------

namespace {

FieldElem signed_one(const Field& f, std::uint64_t exponent) {
  return exponent % 2 == 0 ? f.one() : f.neg(f.one());
}

}  // namespace

FieldElem b_entry(const Field& f, unsigned i, unsigned j, FieldElem alpha, FieldElem gamma) {
  const std::uint64_t p = f.p();
  const std::uint64_t q = f.q();
  FieldElem acc{};
  for (unsigned n = 0; n < std::min(i, j); ++n) {
    const std::uint64_t c1 = binomial_mod_p(i - 1, n, p);
    const std::uint64_t c2 = binomial_mod_p(i + j - n - 2, i - 1, p);
    if (c1 == 0 || c2 == 0) continue;
    FieldElem term = f.from_int(static_cast<std::int64_t>(c1 * c2 % p));
    term = f.mul(term, signed_one(f, i + j - n));
    term = f.mul(term, f.pow(alpha, (i - 1 - n) * q + (j - 1 - n)));
    term = f.mul(term, f.pow(gamma, n));
    acc = f.add(acc, term);
  }
  return acc;
}

FieldMatrix b_matrix(const Field& f, unsigned h, FieldElem alpha, FieldElem gamma) {
  if (h < 1 || h > f.l()) throw Error(Errc::InvalidArgument, "B_h needs 1 <= h <= l");
  const auto p = static_cast<std::size_t>(f.p());
  const std::uint64_t e = ipow(f.p(), f.l() - h);
  FieldMatrix m(p, p);
  for (unsigned i = 1; i <= p; ++i) {
    for (unsigned j = 1; j <= p; ++j) m(i - 1, j - 1) = f.pow(b_entry(f, i, j, alpha, gamma), e);
  }
  return m;
}

FieldElem b_last_row(const Field& f, unsigned j, FieldElem alpha, FieldElem gamma) {
  const std::uint64_t p = f.p();
  return f.mul(signed_one(f, j - 1), f.mul(f.pow(alpha, (p - j) * f.q()), f.pow(gamma, j - 1)));
}

FieldElem b_last_column(const Field& f, unsigned i, FieldElem alpha, FieldElem gamma) {
  const std::uint64_t p = f.p();
  return f.mul(signed_one(f, i - 1), f.mul(f.pow(alpha, p - i), f.pow(gamma, i - 1)));
}

FieldElem b_last_column_constant_sign(const Field& f, unsigned i, FieldElem alpha, FieldElem gamma) {
  const std::uint64_t p = f.p();
  return f.mul(signed_one(f, p - 1), f.mul(f.pow(alpha, p - i), f.pow(gamma, i - 1)));
}

FieldMatrix kronecker(const Field& f, const FieldMatrix& a, const FieldMatrix& b) {
  FieldMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      const FieldElem s = a(i, j);
      for (std::size_t r = 0; r < b.rows; ++r) {
        for (std::size_t c = 0; c < b.cols; ++c) out(i * b.rows + r, j * b.cols + c) = f.mul(s, b(r, c));
      }
    }
  }
  return out;
}

bool verify_gamma_factorization(const Field& f, const LineParam& line) {
  require_non_tangent(line);
  const auto sums = power_sums_direct(f, line, f.q2() - 1);
  const FieldMatrix gamma = gamma_matrix(f, sums);
  FieldMatrix product = b_matrix(f, 1, line.alpha, line.gamma);
  for (unsigned h = 2; h <= f.l(); ++h) product = kronecker(f, product, b_matrix(f, h, line.alpha, line.gamma));
  return product == gamma;
}

// -- digit conditions ---------------------------------------------------------

bool digit_condition_k(std::uint64_t k, const Field& f) {
  const std::uint64_t q = f.q();
  const std::uint64_t w = k / q;
  const std::uint64_t z = k % q;
  if (w == 0) return true;
  std::uint64_t pi = 1;
  for (unsigned i = 1; i <= f.l(); ++i) {
    pi *= f.p();
    if (w % pi == 0 && z % pi != pi - 1) return true;
  }
  return false;
}

bool sufficient_condition(unsigned a, unsigned b, const Field& f) {
  check_exponents(f, a, b);
  const std::uint64_t p = f.p();
  const std::uint64_t w = b / f.q();
  const std::uint64_t b_low = b % f.q();
  const std::uint64_t bound = ipow(p, f.l() - 1);
  if (b_low >= bound || a >= bound) return false;
  std::uint64_t pi = 1;
  for (unsigned i = 1; i <= f.l(); ++i) {
    pi *= p;
    if (w % pi != 0) continue;
    for (unsigned s = 0; s < i; ++s) {
      if (p_adic_digit(a, p, s) == 0 && p_adic_digit(b_low, p, s) == 0) return true;
    }
  }
  return false;
}

Rational rate_lower_bound(std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (p == 2) throw Error(Errc::EvenPrime, "the odd-prime bound does not apply to p = 2; use 7/1000");
  const auto pp = static_cast<std::int64_t>(p);
  const std::int64_t denom = 1000 * pp * pp * pp * pp * (pp - 1) * (pp * pp * pp - pp * pp + 1);
  return Rational(469, denom);
}

Rational char2_rate_lower_bound() { return Rational(7, 1000); }

}  // namespace hermlift::lift
