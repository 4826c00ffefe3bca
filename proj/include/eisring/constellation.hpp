#pragma once

// Eisenstein and Gaussian constellations and their average energies.

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "eisring/gaussian.hpp"
#include "eisring/quotient.hpp"

namespace eisring {

/// Exact nonnegative fraction num/den, den > 0.
struct Rational {
    Int num = 0;
    Int den = 1;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    /// Rounded half-up to hundredths.
    Int hundredths() const;
};

enum class ConstellationKind { Eisenstein, Gaussian };

struct Constellation {
    ConstellationKind kind = ConstellationKind::Eisenstein;
    std::pair<Int, Int> modulus;        // coefficients of eta
    std::optional<Modulus> eis_modulus; // Eisenstein only
    std::vector<Eisenstein> eis_points;
    std::vector<Gaussian> gauss_points;

    std::size_t size() const { return kind == ConstellationKind::Eisenstein ? eis_points.size() : gauss_points.size(); }
    /// Points in the complex plane; rho sits at (-1/2, sqrt(3)/2).
    std::vector<std::array<double, 2>> cartesian() const;
};

Constellation build_eisenstein(const Eisenstein& eta);
Constellation build_gaussian(const Gaussian& eta);

struct EnergyReport {
    double mean_abs = 0;  // E: mean of sqrt(N(x))
    Rational mean_sq;     // E^2: mean of N(x)
    /// E_Hex (Eisenstein) or E_M (Gaussian): mean weight of the points
    /// themselves, hex weight or |a|+|b|.
    Rational mean_weight;
    /// Same mean with each point's weight minimized over its class. For
    /// Gaussian moduli such as 8+3i this is strictly below mean_weight.
    Rational mean_class_weight;
    std::optional<Int> min_d2;
    std::optional<Int> min_weight_distance; // d_Hex, or Mannheim distance for Gaussian
};

EnergyReport energy_report(const Constellation& c);

struct ComparisonPair {
    Gaussian gaussian;
    Eisenstein eisenstein;
};

struct ComparisonRow {
    Gaussian gaussian;
    Eisenstein eisenstein;
    Int size;
    /// E(G), E(E), E2(G), E2(E), EM(G), EHex(E).
    std::array<double, 6> values;
    std::array<Int, 6> hundredths;
};

/// One row per pair; throws CardinalityMismatch when the norms differ.
std::vector<ComparisonRow> compare_table(std::span<const ComparisonPair> pairs);

/// The 23 published pairs.
std::vector<ComparisonPair> builtin_pairs();

/// "12.34" from hundredths.
std::string format_hundredths(Int h);

} // namespace eisring
