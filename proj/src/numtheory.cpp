#include "hermlift/numtheory.hpp"

#include "hermlift/errors.hpp"

namespace hermlift {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrime: return "NonPrime";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
    case Errc::DuplicateNode: return "DuplicateNode";
    case Errc::TangentLine: return "TangentLine";
    case Errc::ExponentOutOfRange: return "ExponentOutOfRange";
    case Errc::EvenPrime: return "EvenPrime";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::TooLargeToEnumerate: return "TooLargeToEnumerate";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::NotARecoverySet: return "NotARecoverySet";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::vector<std::uint64_t> p_adic_digits(std::uint64_t x, std::uint64_t p, std::size_t min_len) {
  std::vector<std::uint64_t> digits;
  while (x > 0) {
    digits.push_back(x % p);
    x /= p;
  }
  if (digits.size() < min_len) digits.resize(min_len, 0);
  return digits;
}

std::uint64_t p_adic_digit(std::uint64_t x, std::uint64_t p, unsigned r) {
  for (unsigned i = 0; i < r; ++i) x /= p;
  return x % p;
}

bool lucas_nonzero(std::uint64_t c, std::uint64_t d, std::uint64_t p) {
  while (c > 0 || d > 0) {
    if (c % p > d % p) return false;
    c /= p;
    d /= p;
  }
  return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod p");
  // extended Euclid on signed values
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(p);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  const auto pp = static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(((old_s % pp) + pp) % pp);
}

namespace {

// C(n, k) mod p for n < p.
std::uint64_t small_binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num = num * ((n - i) % p) % p;
    den = den * ((i + 1) % p) % p;
  }
  return num * mod_inverse(den, p) % p;
}

}  // namespace

std::uint64_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) return 0;
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t nd = n % p, kd = k % p;
    if (kd > nd) return 0;
    result = result * small_binomial_mod_p(nd, kd, p) % p;
    n /= p;
    k /= p;
  }
  return result;
}

}  // namespace hermlift
