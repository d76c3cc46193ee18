#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// Exact integer arithmetic on a 128-bit carrier. Every operation that could
// wrap is checked; overflow is a hard error (std::overflow_error), never a
// silent truncation. No floating point is used anywhere in the numeric core.

namespace scrollres {

using Wide = __int128;

inline Wide wadd(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("scrollres: 128-bit addition overflow");
    return r;
}

inline Wide wsub(Wide a, Wide b) {
    Wide r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("scrollres: 128-bit subtraction overflow");
    return r;
}

inline Wide wmul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("scrollres: 128-bit multiplication overflow");
    return r;
}

// Quotient of an exact division; a remainder is a logic error, not a rounding.
inline Wide exact_div(Wide num, Wide den) {
    if (den == 0)
        throw std::logic_error("scrollres: exact_div by zero");
    if (num % den != 0)
        throw std::logic_error("scrollres: exact_div is not exact");
    return num / den;
}

inline std::int64_t narrow(Wide v) {
    if (v < std::numeric_limits<std::int64_t>::min() ||
        v > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("scrollres: value does not fit in 64 bits");
    return static_cast<std::int64_t>(v);
}

inline std::string wide_str(Wide v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string digits;
    // careful with the most negative value: negate digit by digit
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    while (u > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

// Binomial coefficient with the convention C(n, r) = 0 for r < 0 or r > n.
// Negative n is outside every supported range and rejected outright.
inline Wide binomial_wide(std::int64_t n, std::int64_t r) {
    if (n < 0)
        throw std::invalid_argument("scrollres: binomial with negative n");
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    Wide result = 1;
    // after step j the product equals C(n - r + j, j), so the division is exact
    for (std::int64_t j = 1; j <= r; ++j)
        result = exact_div(wmul(result, n - r + j), j);
    return result;
}

inline std::int64_t binomial(std::int64_t n, std::int64_t r) {
    return narrow(binomial_wide(n, r));
}

}  // namespace scrollres
