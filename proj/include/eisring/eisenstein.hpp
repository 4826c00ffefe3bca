#pragma once

// Exact arithmetic in the Eisenstein integers Z[rho], rho = (-1 + sqrt(-3))/2.

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "eisring/integer.hpp"

namespace eisring {

/// a + b*rho with a, b exact integers.
struct Eisenstein {
    Int a = 0;
    Int b = 0;

    constexpr Eisenstein() = default;
    constexpr Eisenstein(Int re) : a(re) {}
    constexpr Eisenstein(Int a_, Int b_) : a(a_), b(b_) {}

    constexpr bool is_zero() const noexcept { return a == 0 && b == 0; }

    friend constexpr auto operator<=>(const Eisenstein&, const Eisenstein&) = default;
};

Eisenstein operator+(const Eisenstein& x, const Eisenstein& y);
Eisenstein operator-(const Eisenstein& x, const Eisenstein& y);
Eisenstein operator-(const Eisenstein& x);
Eisenstein operator*(const Eisenstein& x, const Eisenstein& y);

enum class ArithOp { Add, Sub, Mul, Neg };

/// Dispatching form of the ring operations; Neg ignores y.
Eisenstein arith(ArithOp op, const Eisenstein& x, const Eisenstein& y = {});

Eisenstein conjugate(const Eisenstein& x);
Int norm(const Eisenstein& x);
bool is_unit(const Eisenstein& x);

/// The six units in the fixed order 1, -1, rho, -rho, rho^2, -rho^2.
const std::array<Eisenstein, 6>& units();

/// x times each unit, in the order of units().
std::array<Eisenstein, 6> associates(const Eisenstein& x);

/// The unique associate with a > 0 and 0 <= b < a (argument in [0, pi/3));
/// zero maps to zero.
Eisenstein canonical_associate(const Eisenstein& x);

bool are_associates(const Eisenstein& x, const Eisenstein& y);

struct DivMod {
    Eisenstein quotient;
    Eisenstein remainder;
};

/// Nearest-lattice-point division: alpha = quotient * eta + remainder with the
/// remainder in the Voronoi cell of the ideal lattice <eta>. The two candidate
/// quotients come from the two rectangular sublattices of Z[rho]; ties on norm
/// go to the candidate with the smaller real part.
DivMod euclid_divmod(const Eisenstein& alpha, const Eisenstein& eta);

/// True when eta divides alpha exactly; eta must be nonzero.
bool divides(const Eisenstein& eta, const Eisenstein& alpha);

/// alpha / eta, which must be exact.
Eisenstein exact_div(const Eisenstein& alpha, const Eisenstein& eta);

/// Canonical associate of a greatest common divisor.
Eisenstein gcd(const Eisenstein& x, const Eisenstein& y);

bool is_primitive(const Eisenstein& eta);

struct PrimeType1 {
    friend bool operator==(const PrimeType1&, const PrimeType1&) = default;
};
struct PrimeType2 {
    Int q;
    friend bool operator==(const PrimeType2&, const PrimeType2&) = default;
};
struct PrimeType3 {
    Int p;
    friend bool operator==(const PrimeType3&, const PrimeType3&) = default;
};
struct NotPrime {
    friend bool operator==(const NotPrime&, const NotPrime&) = default;
};

/// Type1: associate of 1 - rho. Type2: prime norm q = 1 mod 3. Type3: associate
/// of a rational prime p = 2 mod 3.
using PrimeKind = std::variant<PrimeType1, PrimeType2, PrimeType3, NotPrime>;

PrimeKind classify_prime(const Eisenstein& gamma);
bool is_prime(const Eisenstein& gamma);

struct PrimePower {
    Eisenstein prime; // canonical associate
    int exponent;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
    Eisenstein unit;
    std::vector<PrimePower> factors; // sorted by (norm, a, b)

    Eisenstein product() const;
};

Factorization factorize(const Eisenstein& eta);

/// True iff eta is, up to a unit, (1 - rho)^r times Type2 prime powers with
/// r in {0, 1} and pairwise distinct prime norms.
bool primitivity_structure_check(const Eisenstein& eta);

/// Membership of x = c + d*rho in the ideal <k*(a + b*rho)> via the integer
/// divisibility test k*N(g) | ((a-b)c + bd) and k*N(g) | (ad - bc).
bool ideal_member(const Eisenstein& x, Int k, const Eisenstein& g);

/// "a+bρ" style rendering, e.g. "4+5ρ", "-1-ρ", "0".
std::string to_string(const Eisenstein& x);

/// Parses "a,b".
Eisenstein parse_eisenstein_pair(const std::string& text);

std::ostream& operator<<(std::ostream& os, const Eisenstein& x);

} // namespace eisring
