#pragma once

#include <cstdint>
#include <vector>

namespace hermlift {

bool is_prime(std::uint64_t n);

/// Integer power; the caller guarantees no overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exp);

/// Base-p digits of x, least significant first, zero-padded to at least min_len.
std::vector<std::uint64_t> p_adic_digits(std::uint64_t x, std::uint64_t p, std::size_t min_len = 0);

/// Digit r of x in base p (the coefficient of p^r).
std::uint64_t p_adic_digit(std::uint64_t x, std::uint64_t p, unsigned r);

/// True iff every base-p digit of c is <= the matching digit of d (c lies in the p-shadow of d).
bool lucas_nonzero(std::uint64_t c, std::uint64_t d, std::uint64_t p);

/// C(n, k) mod p, digit-wise via Lucas; 0 when k > n.
std::uint64_t binomial_mod_p(std::uint64_t n, std::uint64_t k, std::uint64_t p);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);

}  // namespace hermlift
