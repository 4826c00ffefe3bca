#pragma once

// Checked 64-bit integer helpers shared by every module. Nothing here wraps
// silently: any overflow raises Errc::Overflow.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eisring/error.hpp"

namespace eisring {

using Int = std::int64_t;

namespace checked {

inline Int add(Int x, Int y)
{
    Int r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(Errc::Overflow, "integer addition overflow");
    return r;
}

inline Int sub(Int x, Int y)
{
    Int r;
    if (__builtin_sub_overflow(x, y, &r))
        throw Error(Errc::Overflow, "integer subtraction overflow");
    return r;
}

inline Int mul(Int x, Int y)
{
    Int r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(Errc::Overflow, "integer multiplication overflow");
    return r;
}

inline Int neg(Int x) { return sub(0, x); }

inline Int abs(Int x) { return x < 0 ? neg(x) : x; }

} // namespace checked

/// floor(num / den) for den > 0.
inline Int floor_div(Int num, Int den)
{
    Int q = num / den;
    if ((num % den != 0) && (num < 0))
        --q;
    return q;
}

/// Nonnegative residue of x modulo m > 0.
inline Int mod_floor(Int x, Int m)
{
    Int r = x % m;
    return r < 0 ? r + m : r;
}

/// Nearest integer to num/den (den > 0); halves round down, i.e. the result
/// is floor(x) whenever x - floor(x) <= 1/2.
inline Int round_half_down(Int num, Int den)
{
    Int fl = floor_div(num, den);
    Int rem = checked::sub(num, checked::mul(fl, den));
    return checked::mul(2, rem) <= den ? fl : fl + 1;
}

inline Int igcd(Int x, Int y) { return std::gcd(checked::abs(x), checked::abs(y)); }

/// Inverse of x modulo m (m > 1) by extended Euclid; throws InvalidArgument
/// when gcd(x, m) != 1. For m == 1 returns 0.
inline Int mod_inverse(Int x, Int m)
{
    if (m == 1)
        return 0;
    Int a = mod_floor(x, m), b = m;
    Int u = 1, v = 0;
    while (b != 0) {
        Int q = a / b;
        a = checked::sub(a, checked::mul(q, b));
        std::swap(a, b);
        u = checked::sub(u, checked::mul(q, v));
        std::swap(u, v);
    }
    if (a != 1)
        throw Error(Errc::InvalidArgument, "value not invertible modulo m");
    return mod_floor(u, m);
}

inline bool is_rational_prime(Int n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (Int d = 3; d <= n / d; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

/// Trial-division factorization of n >= 1 into (prime, exponent) pairs.
inline std::vector<std::pair<Int, int>> factor_integer(Int n)
{
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p <= n / p; ++p) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

/// Exact integer square root, or -1 when n is not a perfect square.
inline Int exact_isqrt(Int n)
{
    if (n < 0)
        return -1;
    auto r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r * r == n ? r : -1;
}

/// Parses an "a,b" integer pair; surrounding spaces are tolerated.
inline std::pair<Int, Int> parse_int_pair(std::string_view text)
{
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw Error(Errc::InvalidArgument, "expected \"a,b\" but got \"" + std::string(text) + "\"");
    auto parse = [&](std::string_view part) {
        while (!part.empty() && part.front() == ' ')
            part.remove_prefix(1);
        while (!part.empty() && part.back() == ' ')
            part.remove_suffix(1);
        Int v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw Error(Errc::InvalidArgument, "bad integer in \"" + std::string(text) + "\"");
        return v;
    };
    return {parse(text.substr(0, comma)), parse(text.substr(comma + 1))};
}

} // namespace eisring
