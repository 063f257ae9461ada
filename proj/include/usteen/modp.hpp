#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "usteen/errors.hpp"

namespace usteen {

/* Global arithmetic context: the odd prime together with the default
   rewrite budget and the largest admitted |k| for generator indices. */
struct PrimeContext {
    std::int64_t p;
    std::int64_t fuel = 1'000'000;
    std::int64_t index_bound = std::int64_t{1} << 48;
};

/* Builds a context after checking that p is an odd prime (trial division)
   and that the limits are positive. Throws NotOddPrime / IndexOverflow. */
PrimeContext validate_prime(std::int64_t p, std::int64_t fuel = 1'000'000,
                            std::int64_t index_bound = std::int64_t{1} << 48);

/* Base-p digits of a nonnegative integer, least significant first, with
   trailing zeros trimmed (so 0 has the empty expansion). */
using DigitSeq = std::vector<std::int64_t>;

DigitSeq padic_digits(std::int64_t m, const PrimeContext& ctx);

/* Normalizes any integer into {0, ..., p-1}. */
std::int64_t mod_p(std::int64_t v, const PrimeContext& ctx);

/* Binomial coefficient class mod p, computed digitwise.  Extended
   convention used throughout the library: the result is 0 whenever a < 0,
   b < 0 or b > a. */
std::int64_t binom_ext(std::int64_t a, std::int64_t b, const PrimeContext& ctx);

/* Exact binomial coefficient in arbitrary precision; test oracle for
   binom_ext.  Rejects a < 0 (NegativeTop); returns 0 for b outside [0, a]. */
mpz_class binom_exact(std::int64_t a, std::int64_t b);

/* A(k, j): the class mod p of C((p-1)(k-j) - 1, j). */
std::int64_t a_coeff(std::int64_t k, std::int64_t j, const PrimeContext& ctx);

/* alpha(s) = (p^s - 1) / (p - 1); alpha(0) = 0.  Throws IndexOverflow when
   p^s leaves the 64-bit range. */
std::int64_t alpha(std::int64_t s, const PrimeContext& ctx);

}  // namespace usteen
