#include <doctest.h>

#include "hermlift/curve.hpp"
#include "hermlift/errors.hpp"
#include "hermlift/polyring.hpp"
#include "hermlift/rng.hpp"

using namespace hermlift;
using gf::Field;
using gf::FieldElem;
using poly::UniPoly;

namespace {

UniPoly random_poly(const Field& f, Rng& rng, std::size_t len) {
  std::vector<FieldElem> c(len);
  for (auto& x : c) x = FieldElem{rng.below(f.q2())};
  return UniPoly(std::move(c));
}

}  // namespace

TEST_SUITE("polyring") {
  TEST_CASE("normal form and degree") {
    const Field f = Field::create(3, 1);
    CHECK(UniPoly().degree() == poly::kMinusInfinity);
    CHECK(poly::kMinusInfinity < -1000);
    CHECK(UniPoly({f.one(), f.zero(), f.zero()}).degree() == 0);
    CHECK(UniPoly({f.zero(), f.zero()}).is_zero());
    CHECK(UniPoly::term(f.from_int(2), 4).degree() == 4);
    CHECK(UniPoly::term(f.zero(), 4).is_zero());
  }

  TEST_CASE("ring operations agree with pointwise evaluation") {
    const Field f = Field::create(3, 2);
    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const UniPoly a = random_poly(f, rng, 1 + rng.below(8));
      const UniPoly b = random_poly(f, rng, 1 + rng.below(8));
      const FieldElem c{rng.below(f.q2())};
      for (const auto t : f.elements()) {
        const FieldElem at = a.evaluate(f, t), bt = b.evaluate(f, t);
        CHECK(poly::add(f, a, b).evaluate(f, t) == f.add(at, bt));
        CHECK(poly::sub(f, a, b).evaluate(f, t) == f.sub(at, bt));
        CHECK(poly::mul(f, a, b).evaluate(f, t) == f.mul(at, bt));
        CHECK(poly::scale(f, a, c).evaluate(f, t) == f.mul(c, at));
      }
    }
  }

  TEST_CASE("division with remainder") {
    const Field f = Field::create(5, 1);
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const UniPoly g = random_poly(f, rng, rng.below(12));
      UniPoly m = random_poly(f, rng, 1 + rng.below(6));
      if (m.is_zero()) continue;
      const auto [quo, rem] = poly::divmod(f, g, m);
      CHECK(rem.degree() < m.degree());
      CHECK(poly::add(f, poly::mul(f, quo, m), rem) == g);
    }
    const UniPoly m({f.one(), f.from_int(2), f.one()});
    CHECK(poly::poly_mod(f, m, m).is_zero());
    const UniPoly small({f.from_int(3)});
    CHECK(poly::poly_mod(f, small, m) == small);
    try {
      (void)poly::poly_mod(f, m, UniPoly());
      FAIL("expected DivisionByZeroPoly");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DivisionByZeroPoly);
    }
  }

  TEST_CASE("t^{q+1} reduces to -alpha^q t^q - alpha t - gamma") {
    const Field f = Field::create(3, 1);
    const std::uint64_t q = f.q();
    for (const auto& line : curve::all_lines(f)) {
      const UniPoly r = poly::poly_mod(f, UniPoly::term(f.one(), q + 1), curve::line_poly(f, line));
      std::vector<FieldElem> want(q + 1);
      want[q] = f.neg(f.frobenius(line.alpha));
      want[1] = f.neg(line.alpha);
      want[0] = f.neg(line.gamma);
      CHECK(r == UniPoly(want));
    }
  }

  TEST_CASE("interpolation") {
    const Field f = Field::create(3, 1);
    const std::vector<poly::Sample> constant = {{f.zero(), f.from_int(2)}, {f.one(), f.from_int(2)}};
    CHECK(poly::lagrange_interpolate(f, constant) == UniPoly::constant(f.from_int(2)));
    const std::vector<poly::Sample> line = {{f.zero(), f.zero()}, {f.one(), f.one()}};
    CHECK(poly::lagrange_interpolate(f, line) == UniPoly::term(f.one(), 1));

    const std::vector<poly::Sample> dup = {{f.one(), f.zero()}, {f.one(), f.one()}};
    try {
      (void)poly::lagrange_interpolate(f, dup);
      FAIL("expected DuplicateNode");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DuplicateNode);
    }
    CHECK_THROWS_AS((void)poly::lagrange_interpolate(f, std::span<const poly::Sample>{}), Error);
  }

  TEST_CASE("interpolation round trip on random polynomials") {
    for (auto [p, l] : {std::pair{3ULL, 1u}, {3, 2}, {5, 1}}) {
      const Field f = Field::create(p, l);
      Rng rng(p * 100 + l);
      for (int trial = 0; trial < 20; ++trial) {
        const UniPoly g = random_poly(f, rng, f.q());
        std::vector<poly::Sample> samples;
        const auto els = f.elements();
        for (std::size_t i = 0; i < f.q(); ++i) samples.push_back({els[i + 1], g.evaluate(f, els[i + 1])});
        const UniPoly h = poly::lagrange_interpolate(f, samples);
        CHECK(h == g);
        for (const auto& s : samples) CHECK(h.evaluate(f, s.t) == s.value);
        const FieldElem at{rng.below(f.q2())};
        CHECK(poly::lagrange_evaluate(f, samples, at) == g.evaluate(f, at));
      }
    }
  }

  TEST_CASE("restricted monomials") {
    const Field f = Field::create(3, 1);
    const FieldElem z{3};
    CHECK(poly::restrict_monomial(f, 0, 0, z, z) == UniPoly::constant(f.one()));
    CHECK(poly::restrict_monomial(f, 1, 0, z, f.one()) == UniPoly({f.one(), z}));
    // (t + z)^2 t = t^3 + 2z t^2 + z^2 t
    const UniPoly want({f.zero(), f.mul(z, z), f.mul(f.from_int(2), z), f.one()});
    CHECK(poly::restrict_monomial(f, 2, 1, f.one(), z) == want);
  }

  TEST_CASE("restriction equals pointwise evaluation") {
    const Field f = Field::create(3, 1);
    Rng rng(21);
    for (int trial = 0; trial < 60; ++trial) {
      const auto a = static_cast<unsigned>(rng.below(f.q()));
      const auto b = static_cast<unsigned>(rng.below(f.q2()));
      const FieldElem alpha{rng.below(f.q2())}, beta{rng.below(f.q2())};
      const UniPoly g = poly::restrict_monomial(f, a, b, alpha, beta);
      for (const auto t : f.elements()) {
        CHECK(g.evaluate(f, t) == f.mul(f.pow(f.add(f.mul(alpha, t), beta), a), f.pow(t, b)));
      }
    }
  }

  TEST_CASE("from_roots") {
    const Field f = Field::create(3, 1);
    const auto els = f.elements();
    const std::vector<FieldElem> roots(els.begin() + 2, els.begin() + 6);
    const UniPoly g = poly::from_roots(f, roots);
    CHECK(g.degree() == 4);
    CHECK(g.coeff(4) == f.one());
    for (const auto t : els) {
      const bool root = std::find(roots.begin(), roots.end(), t) != roots.end();
      CHECK(g.evaluate(f, t).is_zero() == root);
    }
  }
}
