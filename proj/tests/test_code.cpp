#include <doctest.h>

#include <algorithm>

#include "hermlift/code.hpp"
#include "hermlift/errors.hpp"
#include "oracle_fixtures.hpp"

using namespace hermlift;
using codes::CodeKind;
using codes::CodeOptions;
using gf::Field;
using gf::FieldElem;
using lift::Rational;

namespace {

bool contains_all(const std::vector<codes::Monomial>& big, const std::vector<codes::Monomial>& small) {
  return std::all_of(small.begin(), small.end(), [&](const codes::Monomial& m) {
    return std::any_of(big.begin(), big.end(), [&](const codes::Monomial& x) { return x.a == m.a && x.b == m.b; });
  });
}

FieldMatrix example_binary_generator() {
  FieldMatrix g(3, 6);
  const int rows[3][6] = {{1, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 0, 1}};
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t c = 0; c < 6; ++c) g(r, c) = FieldElem{static_cast<std::uint64_t>(rows[r][c])};
  }
  return g;
}

}  // namespace

TEST_SUITE("code") {
  TEST_CASE("kind names") {
    for (auto k : {CodeKind::LiftedOracle, CodeKind::LiftedSufficient, CodeKind::OnePoint}) {
      CHECK(codes::parse_kind(codes::kind_name(k)) == k);
    }
    CHECK_FALSE(codes::parse_kind("lifted").has_value());
  }

  TEST_CASE("one-point codes") {
    const Field f3 = Field::create(3, 1);
    const auto c3 = codes::build_code(f3, CodeOptions{CodeKind::OnePoint, 8});
    CHECK(c3.k() == 6);
    CHECK(c3.n() == 27);
    CHECK(c3.rank == 6);
    for (const auto& m : c3.spec.basis) CHECK(m.a * 3 + m.b * 4 <= 8);

    const Field f9 = Field::create(3, 2);
    const auto c9 = codes::build_code(f9, CodeOptions{CodeKind::OnePoint, 80});
    CHECK(c9.k() == 45);
    CHECK(c9.rank == 45);
    CHECK(codes::onepoint_dimension(9, 80) == 45);
    CHECK(codes::onepoint_formula_applies(9, 80));
    CHECK_FALSE(codes::onepoint_formula_applies(9, 70));
  }

  TEST_CASE("one-point dimension formula matches the rank") {
    for (auto [p, l] : {std::pair{3ULL, 1u}, {2, 2}, {5, 1}, {3, 2}}) {
      const Field f = Field::create(p, l);
      const std::uint64_t r = f.q2() - 1;
      const auto c = codes::build_code(f, CodeOptions{CodeKind::OnePoint, r});
      CHECK(c.rank == codes::onepoint_dimension(f.q(), r));
    }
  }

  TEST_CASE("lifted codes") {
    const Field f3 = Field::create(3, 1);
    const auto oracle3 = codes::build_code(f3, CodeOptions{CodeKind::LiftedOracle});
    CHECK(oracle3.k() == fixtures::kGood[1].nontangent.size());
    CHECK(oracle3.k() == 6);

    const Field f9 = Field::create(3, 2);
    const auto oracle = codes::build_code(f9, CodeOptions{CodeKind::LiftedOracle});
    const auto sufficient = codes::build_code(f9, CodeOptions{CodeKind::LiftedSufficient});
    const auto onepoint = codes::build_code(f9, CodeOptions{CodeKind::OnePoint, 80});
    CHECK(oracle.rank == oracle.k());
    CHECK(sufficient.rank == sufficient.k());
    CHECK(sufficient.k() == 11);
    CHECK(contains_all(oracle.spec.basis, sufficient.spec.basis));
    CHECK(contains_all(oracle.spec.basis, onepoint.spec.basis));
    CHECK(std::is_sorted(oracle.spec.basis.begin(), oracle.spec.basis.end(), [](const auto& x, const auto& y) {
      return std::tie(x.b, x.a) < std::tie(y.b, y.a);
    }));

    const auto rep = codes::rate_report(oracle);
    CHECK(rep.n == 729);
    CHECK(rep.k >= 45);
    CHECK(rep.onepoint_dim == 45);
    CHECK(rep.onepoint_rate == Rational(5, 81));
    CHECK(rep.rate_bound == Rational(469, 3078000));
    CHECK(rep.rate_ge_bound);
    CHECK(rep.rate_ge_onepoint_rate);
    CHECK(rep.rate >= rep.onepoint_rate);
  }

  TEST_CASE("characteristic 2 rate report uses the constant") {
    const Field f = Field::create(2, 2);
    const auto rep = codes::rate_report(codes::build_code(f, CodeOptions{CodeKind::LiftedOracle}));
    CHECK(rep.rate_bound == Rational(7, 1000));
    CHECK(rep.rate_ge_bound);
  }

  TEST_CASE("rank") {
    const Field f = Field::create(3, 1);
    FieldMatrix m(3, 3);
    m(0, 0) = f.one();
    m(0, 1) = f.from_int(2);
    m(1, 0) = f.from_int(2);
    m(1, 1) = f.one();  // row 1 = 2 * row 0
    m(2, 2) = FieldElem{3};
    CHECK(codes::rank(f, m) == 2);
    CHECK(codes::rank(f, FieldMatrix(2, 4)) == 0);
  }

  TEST_CASE("encode is linear") {
    const Field f = Field::create(3, 1);
    const auto c = codes::build_code(f, CodeOptions{CodeKind::OnePoint, 8});
    std::vector<FieldElem> e0(c.k()), m(c.k());
    e0[0] = f.one();
    // the first basis monomial is 1, so its codeword is all ones
    for (const auto x : codes::encode(f, c.generator, e0)) CHECK(x == f.one());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = FieldElem{(i * 5 + 1) % 9};
    const auto w = codes::encode(f, c.generator, m);
    std::vector<FieldElem> twice(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) twice[i] = f.add(m[i], m[i]);
    const auto w2 = codes::encode(f, c.generator, twice);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w2[i] == f.add(w[i], w[i]));
    CHECK_THROWS_AS((void)codes::encode(f, c.generator, std::vector<FieldElem>(2)), Error);
  }

  TEST_CASE("hamming distance") {
    const auto v = [](std::initializer_list<std::uint64_t> xs) {
      std::vector<FieldElem> out;
      for (auto x : xs) out.push_back(FieldElem{x});
      return out;
    };
    CHECK(codes::hamming_distance(v({1, 1, 0, 1, 0, 1}), v({1, 1, 0, 1, 0, 0})) == 1);
    CHECK(codes::hamming_distance(v({1, 2, 3}), v({1, 2, 3})) == 0);
    CHECK(codes::hamming_distance(v({0, 2, 3}), v({1, 2, 0})) == codes::hamming_distance(v({1, 2, 0}), v({0, 2, 3})));
    try {
      (void)codes::hamming_distance(v({1}), v({1, 2}));
      FAIL("expected LengthMismatch");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::LengthMismatch);
    }
  }

  TEST_CASE("minimum distance") {
    const gf::PrimeField f2(2);
    const auto g = example_binary_generator();
    CHECK(codes::min_distance_bruteforce(f2, g, Execution::Serial) == 3);
    CHECK(codes::min_distance_bruteforce(f2, g, Execution::Parallel) == 3);

    const Field f = Field::create(3, 1);
    const auto c = codes::build_code(f, CodeOptions{CodeKind::OnePoint, 5});
    const std::size_t d = codes::min_distance_bruteforce(f, c.generator);
    CHECK(d >= 27 - 5);
    CHECK(d == codes::min_distance_bruteforce(f, c.generator, Execution::Serial));

    CHECK_THROWS_AS((void)codes::min_distance_bruteforce(f, FieldMatrix()), Error);
    const auto big = codes::build_code(Field::create(3, 2), CodeOptions{CodeKind::OnePoint, 80});
    try {
      (void)codes::min_distance_bruteforce(big.spec.field, big.generator);
      FAIL("expected TooLargeToEnumerate");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::TooLargeToEnumerate);
    }
  }

  TEST_CASE("one-point q = 3, r = 8 distance matches the independent enumeration" * doctest::timeout(120)) {
    const Field f = Field::create(3, 1);
    const auto c = codes::build_code(f, CodeOptions{CodeKind::OnePoint, 8});
    REQUIRE(c.k() == fixtures::kOnePointQ3R8Dimension);
    CHECK(codes::min_distance_bruteforce(f, c.generator) == fixtures::kOnePointQ3R8Distance);
  }
}
