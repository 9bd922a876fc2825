#include <doctest.h>

#include <set>

#include "hermlift/errors.hpp"
#include "hermlift/gf.hpp"
#include "hermlift/rng.hpp"
#include "oracle_fixtures.hpp"

using namespace hermlift;
using gf::Field;
using gf::FieldElem;

namespace {

// z, the class of the indeterminate, has code p.
FieldElem z_of(const Field& f) { return FieldElem{f.p()}; }

// Every pair when the field is small, otherwise a seeded sample.
template <class Fn>
void for_pairs(const Field& f, Fn&& fn) {
  if (f.q2() <= 100) {
    for (const auto a : f.elements()) {
      for (const auto b : f.elements()) fn(a, b);
    }
    return;
  }
  Rng rng(17);
  for (int i = 0; i < 5000; ++i) fn(FieldElem{rng.below(f.q2())}, FieldElem{rng.below(f.q2())});
}

}  // namespace

TEST_SUITE("gf") {
  TEST_CASE("F_9 is F_3[z]/(z^2+1)") {
    const Field f = Field::create(3, 1);
    CHECK(f.q() == 3);
    CHECK(f.q2() == 9);
    CHECK(f.modulus() == std::vector<std::uint64_t>{1, 0, 1});
    const FieldElem z = z_of(f);
    CHECK(f.mul(z, z) == f.neg(f.one()));
    CHECK(f.frobenius(z) == f.mul(f.from_int(2), z));
    CHECK(f.trace(z) == f.zero());
    CHECK(f.norm(z) == f.one());
    CHECK(f.trace(f.one()) == f.from_int(2));
  }

  TEST_CASE("moduli match the independent search") {
    for (const auto& m : fixtures::kModuli) {
      CAPTURE(m.p);
      CAPTURE(m.l);
      CHECK(Field::create(m.p, m.l).modulus() == m.coeffs);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(Field::create(4, 1), Error);
    try {
      Field::create(4, 1);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NonPrime);
    }
    try {
      Field::create(2, 21);
      FAIL("expected TooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TooLarge);
    }
    const Field f = Field::create(3, 1);
    try {
      (void)f.inv(f.zero());
      FAIL("expected DivisionByZero");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::DivisionByZero);
    }
    CHECK_THROWS_AS((void)f.inv_euclid(f.zero()), Error);
    CHECK_THROWS_AS((void)f.from_code(9), Error);
  }

  TEST_CASE("enumeration order") {
    const Field f = Field::create(3, 1);
    const auto els = f.elements();
    REQUIRE(els.size() == 9);
    CHECK(els[0] == f.zero());
    CHECK(els[1] == f.one());
    for (std::size_t i = 0; i < els.size(); ++i) CHECK(els[i].code == i);
    const Field f81 = Field::create(3, 2);
    const auto big = f81.elements();
    CHECK(std::set<FieldElem>(big.begin(), big.end()).size() == 81);
  }

  TEST_CASE("coefficient round trip") {
    const Field f = Field::create(5, 1);
    for (const auto x : f.elements()) CHECK(f.from_coeffs(f.coeffs(x)) == x);
    CHECK(f.from_int(-1) == f.from_int(4));
    CHECK(f.from_int(7) == f.from_int(2));
  }

  TEST_CASE("table arithmetic equals the schoolbook reference") {
    for (auto [p, l] : {std::pair{2ULL, 1u}, {2, 3}, {3, 1}, {3, 2}, {5, 1}, {7, 1}, {5, 2}}) {
      const Field f = Field::create(p, l);
      CAPTURE(p);
      CAPTURE(l);
      REQUIRE(f.has_log_tables());
      for_pairs(f, [&](FieldElem a, FieldElem b) {
        CHECK(f.mul(a, b) == f.mul_schoolbook(a, b));
        CHECK(f.add(a, b) == f.add_digitwise(a, b));
      });
      for (std::uint64_t c = 0; c < std::min<std::uint64_t>(f.q2(), 200); ++c) {
        const FieldElem a{c};
        CHECK(f.neg(a) == f.neg_digitwise(a));
        CHECK(f.pow(a, f.q()) == f.pow_schoolbook(a, f.q()));
        CHECK(f.pow(a, 0) == f.one());
        if (!a.is_zero()) CHECK(f.inv(a) == f.inv_euclid(a));
      }
    }
  }

  TEST_CASE("generator has full order") {
    const Field f = Field::create(3, 2);
    const FieldElem g = f.generator();
    std::set<FieldElem> seen;
    FieldElem x = f.one();
    for (std::uint64_t i = 0; i < f.q2() - 1; ++i) {
      seen.insert(x);
      x = f.mul(x, g);
    }
    CHECK(x == f.one());
    CHECK(seen.size() == f.q2() - 1);
  }

  TEST_CASE("field axioms") {
    for (auto [p, l] : {std::pair{3ULL, 1u}, {2, 2}, {3, 2}, {101, 1}}) {
      const Field f = Field::create(p, l);
      for (const auto x : f.elements()) {
        if (!x.is_zero()) CHECK(f.mul(x, f.inv(x)) == f.one());
        CHECK(f.add(x, f.neg(x)) == f.zero());
        CHECK(f.frobenius(f.frobenius(x)) == x);
        CHECK(f.in_subfield(f.trace(x)));
        CHECK(f.in_subfield(f.norm(x)));
        CHECK(f.norm(x) == f.pow(x, f.q() + 1));
      }
      for_pairs(f, [&](FieldElem a, FieldElem b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        CHECK(f.sub(f.add(a, b), b) == a);
        if (!b.is_zero()) CHECK(f.mul(f.div(a, b), b) == a);
      });
    }
  }

  TEST_CASE("subfield has q elements") {
    for (auto [p, l] : {std::pair{3ULL, 1u}, {3, 2}, {2, 3}, {5, 1}}) {
      const Field f = Field::create(p, l);
      std::size_t n = 0;
      for (const auto x : f.elements()) n += f.in_subfield(x);
      CHECK(n == f.q());
      const auto sub = f.subfield_elements();
      CHECK(sub.size() == f.q());
      CHECK(std::is_sorted(sub.begin(), sub.end()));
      for (const auto x : sub) CHECK(f.in_subfield(x));
    }
  }

  TEST_CASE("large fields fall back to schoolbook arithmetic") {
    const Field f = Field::create(2, 11);  // q^2 = 2^22, above the table limit
    CHECK_FALSE(f.has_log_tables());
    Rng rng(3);
    for (int i = 0; i < 200; ++i) {
      const FieldElem a{rng.below(f.q2())};
      if (a.is_zero()) continue;
      CHECK(f.mul(a, f.inv(a)) == f.one());
      CHECK(f.in_subfield(f.norm(a)));
    }
  }

  TEST_CASE("prime field") {
    const gf::PrimeField f(2);
    CHECK(f.add(FieldElem{1}, FieldElem{1}) == FieldElem{0});
    CHECK(f.inv(FieldElem{1}) == FieldElem{1});
    CHECK_THROWS_AS((void)f.inv(FieldElem{0}), Error);
    CHECK_THROWS_AS(gf::PrimeField(9), Error);
  }
}
