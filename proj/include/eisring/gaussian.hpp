#pragma once

// Gaussian integers Z[i], used as the comparison side for constellation
// energies.

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "eisring/integer.hpp"

namespace eisring {

/// a + b*i.
struct Gaussian {
    Int a = 0;
    Int b = 0;

    constexpr Gaussian() = default;
    constexpr Gaussian(Int re) : a(re) {}
    constexpr Gaussian(Int a_, Int b_) : a(a_), b(b_) {}

    constexpr bool is_zero() const noexcept { return a == 0 && b == 0; }

    friend constexpr auto operator<=>(const Gaussian&, const Gaussian&) = default;
};

Gaussian operator+(const Gaussian& x, const Gaussian& y);
Gaussian operator-(const Gaussian& x, const Gaussian& y);
Gaussian operator-(const Gaussian& x);
Gaussian operator*(const Gaussian& x, const Gaussian& y);

enum class GaussOp { Add, Sub, Mul, Neg };

Gaussian g_arith(GaussOp op, const Gaussian& x, const Gaussian& y = {});
Int g_norm(const Gaussian& x);
Gaussian g_conj(const Gaussian& x);

/// alpha - round(alpha * conj(eta) / N(eta)) * eta, rounding each coordinate
/// to the nearest integer with halves rounded down.
Gaussian g_mod_reduce(const Gaussian& alpha, const Gaussian& eta);

/// Grid representatives x + y*i with 0 <= x < t*N(c + d*i), 0 <= y < t for
/// eta = t(c + d*i); y is the outer loop.
std::vector<Gaussian> g_residue_system(const Gaussian& eta);

/// Minimum |a| + |b| over the class of theta modulo eta, found among the 3x3
/// translates of the Voronoi representative.
Int mannheim_weight(const Gaussian& theta, const Gaussian& eta);

/// Reference search over translates (u + v*i)*eta, |u|, |v| <= radius.
Int mannheim_weight_window(const Gaussian& theta, const Gaussian& eta, Int radius);

std::string to_string(const Gaussian& x);
Gaussian parse_gaussian_pair(const std::string& text);
std::ostream& operator<<(std::ostream& os, const Gaussian& x);

} // namespace eisring
