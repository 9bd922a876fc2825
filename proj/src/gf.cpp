#include "hermlift/gf.hpp"

#include <algorithm>
#include <string>

#include "hermlift/errors.hpp"
#include "hermlift/numtheory.hpp"

namespace hermlift::gf {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients over F_p, constant first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a nonzero g over F_p.
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = mod_inverse(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t c = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - c * g[i] % p) % p;
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const Poly& m, std::uint64_t p) {
  const std::size_t n = m.size() - 1;
  // any factorisation has a monic factor of degree <= n/2
  for (std::size_t d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g = p_adic_digits(idx, p, d);
      g.push_back(1);
      if (poly_rem(m, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(std::uint64_t p, unsigned degree) {
  const std::uint64_t candidates = ipow(p, degree);
  for (std::uint64_t idx = 0; idx < candidates; ++idx) {
    Poly m = p_adic_digits(idx, p, degree);
    m.push_back(1);
    if (is_irreducible(m, p)) return m;
  }
  throw Error(Errc::InvalidArgument, "no irreducible polynomial found");
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

Field Field::create(std::uint64_t p, unsigned l) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
  if (l == 0) throw Error(Errc::InvalidArgument, "l must be >= 1");
  // p^(2l) <= 2^40
  std::uint64_t order = 1;
  for (unsigned i = 0; i < 2 * l; ++i) {
    if (order > kMaxOrder / p) {
      throw Error(Errc::TooLarge,
                  "p^(2l) exceeds 2^40 for p = " + std::to_string(p) + ", l = " + std::to_string(l));
    }
    order *= p;
  }
  Field f;
  f.p_ = p;
  f.l_ = l;
  f.q_ = ipow(p, l);
  f.q2_ = order;
  f.modulus_ = least_irreducible(p, 2 * l);
  if (order <= kMaxTableOrder) f.build_tables();
  return f;
}

void Field::build_tables() {
  const auto cycle = static_cast<std::uint32_t>(q2_ - 1);
  const auto factors = prime_factors(cycle);
  // q^2 >= 4, so the generator is never 0 or 1
  FieldElem gen{0};
  for (std::uint64_t c = 2; c < q2_; ++c) {
    const FieldElem cand{c};
    const bool primitive = std::all_of(factors.begin(), factors.end(), [&](std::uint64_t r) {
      return pow_schoolbook(cand, cycle / r) != one();
    });
    if (primitive) {
      gen = cand;
      break;
    }
  }
  auto t = std::make_shared<Tables>();
  t->cycle = cycle;
  t->log.assign(q2_, 0);
  t->exp.assign(2 * static_cast<std::size_t>(cycle), 0);
  FieldElem x = one();
  for (std::uint32_t k = 0; k < cycle; ++k) {
    t->exp[k] = static_cast<std::uint32_t>(x.code);
    t->exp[k + cycle] = static_cast<std::uint32_t>(x.code);
    t->log[x.code] = k;
    x = mul_schoolbook(x, gen);
  }
  t->zech.assign(cycle, kZechZero);
  for (std::uint32_t k = 0; k < cycle; ++k) {
    const FieldElem s = add_digitwise(one(), FieldElem{t->exp[k]});
    if (!s.is_zero()) t->zech[k] = t->log[s.code];
  }
  t->log_minus_one = t->log[neg_digitwise(one()).code];
  tables_ = std::move(t);
}

FieldElem Field::generator() const {
  if (!tables_) throw Error(Errc::InvalidArgument, "field has no log tables");
  return FieldElem{tables_->exp[1]};
}

FieldElem Field::from_int(std::int64_t v) const noexcept {
  const auto pp = static_cast<std::int64_t>(p_);
  return FieldElem{static_cast<std::uint64_t>(((v % pp) + pp) % pp)};
}

FieldElem Field::from_code(std::uint64_t code) const {
  if (code >= q2_) throw Error(Errc::InvalidArgument, "field code out of range: " + std::to_string(code));
  return FieldElem{code};
}

FieldElem Field::from_coeffs(std::span<const std::uint64_t> coeffs) const {
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) code = code * p_ + coeffs[i] % p_;
  return from_code(code);
}

std::vector<std::uint64_t> Field::coeffs(FieldElem x) const { return p_adic_digits(x.code, p_, degree()); }

FieldElem Field::add_digitwise(FieldElem a, FieldElem b) const noexcept {
  if (p_ == 2) return FieldElem{a.code ^ b.code};
  std::uint64_t out = 0, scale = 1;
  std::uint64_t x = a.code, y = b.code;
  while (x > 0 || y > 0) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return FieldElem{out};
}

FieldElem Field::neg_digitwise(FieldElem a) const noexcept {
  std::uint64_t out = 0, scale = 1, x = a.code;
  while (x > 0) {
    out += ((p_ - x % p_) % p_) * scale;
    x /= p_;
    scale *= p_;
  }
  return FieldElem{out};
}

FieldElem Field::mul_schoolbook(FieldElem a, FieldElem b) const noexcept {
  const unsigned n = degree();
  const auto da = p_adic_digits(a.code, p_, n);
  const auto db = p_adic_digits(b.code, p_, n);
  std::vector<std::uint64_t> prod(2 * n - 1, 0);
  for (unsigned i = 0; i < n; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  // modulus is monic: z^n = -sum m_i z^i
  for (unsigned d = 2 * n - 2; d >= n; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (unsigned i = 0; i < n; ++i) {
      prod[d - n + i] = (prod[d - n + i] + p_ - c * modulus_[i] % p_) % p_;
    }
  }
  std::uint64_t code = 0;
  for (unsigned i = n; i-- > 0;) code = code * p_ + prod[i];
  return FieldElem{code};
}

FieldElem Field::pow_schoolbook(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem result = one();
  while (e > 0) {
    if (e & 1) result = mul_schoolbook(result, a);
    a = mul_schoolbook(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem Field::inv_euclid(FieldElem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero field element");
  const std::uint64_t p = p_;
  auto sub_scaled = [p](Poly f, const Poly& g, std::uint64_t c, std::size_t shift) {
    if (f.size() < g.size() + shift) f.resize(g.size() + shift, 0);
    for (std::size_t i = 0; i < g.size(); ++i) f[i + shift] = (f[i + shift] + p - c * g[i] % p) % p;
    trim(f);
    return f;
  };
  // invariant: s_k * a == r_k (mod m)
  Poly r0 = modulus_, r1 = coeffs(a);
  trim(r1);
  Poly s0, s1{1};
  while (!r1.empty()) {
    Poly quot;
    Poly rem = r0;
    const std::uint64_t lead_inv = mod_inverse(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const std::uint64_t c = rem.back() * lead_inv % p;
      const std::size_t shift = rem.size() - r1.size();
      if (quot.size() <= shift) quot.resize(shift + 1, 0);
      quot[shift] = c;
      rem = sub_scaled(rem, r1, c, shift);
    }
    Poly s_next = s0;
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] != 0) s_next = sub_scaled(s_next, s1, quot[i], i);
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  // r0 is a nonzero constant
  const std::uint64_t c = mod_inverse(r0.front(), p);
  for (auto& v : s0) v = v * c % p;
  s0.resize(degree(), 0);
  return from_coeffs(s0);
}

FieldElem Field::add(FieldElem a, FieldElem b) const noexcept {
  if (!tables_) return add_digitwise(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Tables& t = *tables_;
  const std::uint32_t la = t.log[a.code];
  const std::uint32_t lb = t.log[b.code];
  const std::uint32_t d = lb >= la ? lb - la : lb + t.cycle - la;
  const std::uint32_t z = t.zech[d];
  if (z == kZechZero) return zero();
  return FieldElem{t.exp[la + z]};
}

FieldElem Field::neg(FieldElem a) const noexcept {
  if (!tables_) return neg_digitwise(a);
  if (a.is_zero()) return a;
  const Tables& t = *tables_;
  return FieldElem{t.exp[t.log[a.code] + t.log_minus_one]};
}

FieldElem Field::sub(FieldElem a, FieldElem b) const noexcept { return add(a, neg(b)); }

FieldElem Field::mul(FieldElem a, FieldElem b) const noexcept {
  if (!tables_) return mul_schoolbook(a, b);
  if (a.is_zero() || b.is_zero()) return zero();
  const Tables& t = *tables_;
  return FieldElem{t.exp[t.log[a.code] + t.log[b.code]]};
}

FieldElem Field::inv(FieldElem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero field element");
  if (!tables_) return inv_euclid(a);
  const Tables& t = *tables_;
  const std::uint32_t la = t.log[a.code];
  return FieldElem{t.exp[la == 0 ? 0 : t.cycle - la]};
}

FieldElem Field::div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }

FieldElem Field::pow(FieldElem a, std::uint64_t e) const noexcept {
  if (!tables_) return pow_schoolbook(a, e);
  if (e == 0) return one();
  if (a.is_zero()) return zero();
  const Tables& t = *tables_;
  const std::uint64_t k = (static_cast<std::uint64_t>(t.log[a.code]) * (e % t.cycle)) % t.cycle;
  return FieldElem{t.exp[k]};
}

FieldElem Field::frobenius(FieldElem x) const noexcept { return pow(x, q_); }
FieldElem Field::trace(FieldElem x) const noexcept { return add(x, frobenius(x)); }
FieldElem Field::norm(FieldElem x) const noexcept { return mul(x, frobenius(x)); }

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out(q2_);
  for (std::uint64_t c = 0; c < q2_; ++c) out[c] = FieldElem{c};
  return out;
}

std::vector<FieldElem> Field::subfield_elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q2_; ++c) {
    if (in_subfield(FieldElem{c})) out.push_back(FieldElem{c});
  }
  return out;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(Errc::NonPrime, "p = " + std::to_string(p) + " is not prime");
}

FieldElem PrimeField::inv(FieldElem a) const {
  if (a.is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  return FieldElem{mod_inverse(a.code, p_)};
}

}  // namespace hermlift::gf
