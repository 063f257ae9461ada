#pragma once

#include <cstdint>

#include "usteen/errors.hpp"

namespace usteen {

/* All index arithmetic runs on 64-bit signed integers; anything that would
   wrap raises IndexOverflow instead of silently truncating. */

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw IndexOverflow();
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw IndexOverflow();
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw IndexOverflow();
    return r;
}

/* base^exp for exp >= 0. */
inline std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
    std::int64_t r = 1;
    for (std::int64_t i = 0; i < exp; ++i)
        r = checked_mul(r, base);
    return r;
}

/* Floor and ceiling division for positive divisors, exact for negative
   numerators (C++ '/' truncates toward zero). */
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b, r = a % b;
    return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return -floor_div(-a, b);
}

}  // namespace usteen
