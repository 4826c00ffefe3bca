#pragma once

#include <span>

#include "eisring/eisenstein.hpp"
#include "eisring/quotient.hpp"

namespace eisring {

/// Minimum number of unit steps along the six directions k*pi/3:
/// min{|a|+|b|, |a-b|+|a|, |a-b|+|b|}.
Int hex_weight(const Eisenstein& x);

Int hex_distance(const Eisenstein& x, const Eisenstein& y);

/// Componentwise sum; throws LengthMismatch on unequal lengths.
Int hex_distance(std::span<const Eisenstein> x, std::span<const Eisenstein> y);

/// N(x - y).
Int sq_euclid_distance(const Eisenstein& x, const Eisenstein& y);

Int sq_euclid_distance(std::span<const Eisenstein> x, std::span<const Eisenstein> y);

/// Lightest hexagonal weight among delta + (u + v*rho)*eta, |u|, |v| <= radius.
Int min_class_hex_weight_window(const Eisenstein& delta, const Modulus& mod, Int radius);

/// The same over the 3x3 neighbourhood of translates.
Int min_class_hex_weight(const Eisenstein& delta, const Modulus& mod);

} // namespace eisring
