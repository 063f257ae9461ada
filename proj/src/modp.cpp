#include "usteen/modp.hpp"

#include "usteen/checked.hpp"

namespace usteen {

namespace {

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0)
        return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
    std::int64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1)
            r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

/* C(a, b) mod p for 0 <= b <= a < p.  The factors stay below p, so the
   denominator is invertible. */
std::int64_t digit_binom(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t num = 1, den = 1;
    for (std::int64_t i = 0; i < b; ++i) {
        num = num * ((a - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    return num * pow_mod(den, p - 2, p) % p;
}

}  // namespace

PrimeContext validate_prime(std::int64_t p, std::int64_t fuel, std::int64_t index_bound) {
    if (!is_odd_prime(p))
        throw NotOddPrime(p);
    if (fuel < 1)
        throw IndexOverflow("fuel must be >= 1");
    if (index_bound < 1)
        throw IndexOverflow("index_bound must be >= 1");
    return PrimeContext{p, fuel, index_bound};
}

DigitSeq padic_digits(std::int64_t m, const PrimeContext& ctx) {
    if (m < 0)
        throw NegativeInput(m);
    DigitSeq digits;
    while (m > 0) {
        digits.push_back(m % ctx.p);
        m /= ctx.p;
    }
    return digits;
}

std::int64_t mod_p(std::int64_t v, const PrimeContext& ctx) {
    std::int64_t r = v % ctx.p;
    return r < 0 ? r + ctx.p : r;
}

std::int64_t binom_ext(std::int64_t a, std::int64_t b, const PrimeContext& ctx) {
    if (a < 0 || b < 0 || b > a)
        return 0;
    std::int64_t r = 1;
    while ((a > 0 || b > 0) && r != 0) {
        std::int64_t da = a % ctx.p, db = b % ctx.p;
        if (db > da)
            return 0;
        r = r * digit_binom(da, db, ctx.p) % ctx.p;
        a /= ctx.p;
        b /= ctx.p;
    }
    return r;
}

mpz_class binom_exact(std::int64_t a, std::int64_t b) {
    if (a < 0)
        throw NegativeTop(a);
    if (b < 0 || b > a)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

std::int64_t a_coeff(std::int64_t k, std::int64_t j, const PrimeContext& ctx) {
    std::int64_t top = checked_sub(checked_mul(ctx.p - 1, checked_sub(k, j)), 1);
    return binom_ext(top, j, ctx);
}

std::int64_t alpha(std::int64_t s, const PrimeContext& ctx) {
    if (s < 0)
        throw NegativeInput(s);
    return checked_sub(checked_pow(ctx.p, s), 1) / (ctx.p - 1);
}

}  // namespace usteen
