#include "hermlift/polyring.hpp"

#include <algorithm>

#include "hermlift/errors.hpp"
#include "hermlift/numtheory.hpp"

namespace hermlift::poly {

UniPoly::UniPoly(std::vector<FieldElem> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(FieldElem c) { return UniPoly({c}); }

UniPoly UniPoly::term(FieldElem c, std::size_t k) {
  std::vector<FieldElem> v(k + 1);
  v[k] = c;
  return UniPoly(std::move(v));
}

FieldElem UniPoly::evaluate(const Field& f, FieldElem t) const noexcept {
  FieldElem acc = f.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = f.add(f.mul(acc, t), *it);
  return acc;
}

UniPoly add(const Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<FieldElem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(out));
}

UniPoly sub(const Field& f, const UniPoly& a, const UniPoly& b) {
  std::vector<FieldElem> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return UniPoly(std::move(out));
}

UniPoly mul(const Field& f, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<FieldElem> out(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i].is_zero()) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(ca[i], cb[j]));
  }
  return UniPoly(std::move(out));
}

UniPoly scale(const Field& f, const UniPoly& a, FieldElem c) {
  std::vector<FieldElem> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(a.coeffs()[i], c);
  return UniPoly(std::move(out));
}

DivMod divmod(const Field& f, const UniPoly& g, const UniPoly& m) {
  if (m.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  if (g.degree() < m.degree()) return {UniPoly{}, g};
  std::vector<FieldElem> rem = g.coeffs();
  const auto& mc = m.coeffs();
  const std::size_t dm = mc.size() - 1;
  const FieldElem lead_inv = f.inv(mc.back());
  std::vector<FieldElem> quot(rem.size() - dm);
  for (std::size_t d = rem.size(); d-- > dm;) {
    const FieldElem c = f.mul(rem[d], lead_inv);
    if (c.is_zero()) continue;
    const std::size_t shift = d - dm;
    quot[shift] = c;
    for (std::size_t i = 0; i <= dm; ++i) rem[shift + i] = f.sub(rem[shift + i], f.mul(c, mc[i]));
  }
  rem.resize(dm);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly poly_mod(const Field& f, const UniPoly& g, const UniPoly& m) { return divmod(f, g, m).remainder; }

namespace {

void check_nodes(std::span<const Sample> samples) {
  if (samples.empty()) throw Error(Errc::InvalidArgument, "interpolation needs at least one sample");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = i + 1; j < samples.size(); ++j) {
      if (samples[i].t == samples[j].t) throw Error(Errc::DuplicateNode, "repeated interpolation node");
    }
  }
}

}  // namespace

UniPoly lagrange_interpolate(const Field& f, std::span<const Sample> samples) {
  check_nodes(samples);
  std::vector<FieldElem> nodes;
  nodes.reserve(samples.size());
  for (const auto& s : samples) nodes.push_back(s.t);
  const UniPoly full = from_roots(f, nodes);

  UniPoly result;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    // basis numerator prod_{j != i} (t - t_j) = full / (t - t_i)
    const UniPoly linear({f.neg(samples[i].t), f.one()});
    const UniPoly numer = divmod(f, full, linear).quotient;
    const FieldElem denom = numer.evaluate(f, samples[i].t);
    result = add(f, result, scale(f, numer, f.div(samples[i].value, denom)));
  }
  return result;
}

FieldElem lagrange_evaluate(const Field& f, std::span<const Sample> samples, FieldElem at) {
  check_nodes(samples);
  FieldElem acc = f.zero();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    FieldElem num = f.one(), den = f.one();
    for (std::size_t j = 0; j < samples.size(); ++j) {
      if (j == i) continue;
      num = f.mul(num, f.sub(at, samples[j].t));
      den = f.mul(den, f.sub(samples[i].t, samples[j].t));
    }
    acc = f.add(acc, f.mul(samples[i].value, f.div(num, den)));
  }
  return acc;
}

UniPoly restrict_monomial(const Field& f, unsigned a, unsigned b, FieldElem alpha, FieldElem beta) {
  std::vector<FieldElem> out(static_cast<std::size_t>(a) + b + 1);
  for (unsigned j = 0; j <= a; ++j) {
    const std::uint64_t binom = binomial_mod_p(a, j, f.p());
    if (binom == 0) continue;
    const FieldElem c = f.mul(f.from_int(static_cast<std::int64_t>(binom)),
                              f.mul(f.pow(alpha, j), f.pow(beta, a - j)));
    out[b + j] = c;
  }
  return UniPoly(std::move(out));
}

UniPoly from_roots(const Field& f, std::span<const FieldElem> roots) {
  UniPoly acc = UniPoly::constant(f.one());
  for (const auto& r : roots) acc = mul(f, acc, UniPoly({f.neg(r), f.one()}));
  return acc;
}

}  // namespace hermlift::poly
