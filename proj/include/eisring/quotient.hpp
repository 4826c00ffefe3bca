#pragma once

// Residue systems of Z[rho]/<eta>: the grid representatives R and their
// Voronoi reductions E, with the reduction mu and its inverse lift pi.

#include <vector>

#include "eisring/eisenstein.hpp"

namespace eisring {

enum class CoprimeSide {
    N, // gcd(n, t) = 1: lift uses n^{-1}
    M, // gcd(m, t) = 1 only: lift uses m^{-1}
};

/// eta together with the associate t*(m + n*rho) actually used for the grid
/// and the lift. gcd(m, n) = 1 and one of m, n is prime to t.
struct Modulus {
    Eisenstein eta;
    Eisenstein working_eta;
    Int t = 1;
    Int m = 1;
    Int n = 0;
    CoprimeSide coprime_side = CoprimeSide::N;

    Eisenstein primitive_part() const { return {m, n}; }
    /// N(m + n*rho).
    Int primitive_norm() const;
    /// t * N(m + n*rho): the x-extent of the grid.
    Int width() const;
    /// N(eta) = t^2 * N(m + n*rho).
    Int size() const;
};

/// Picks the associate to work with: eta itself when it qualifies, then its
/// canonical associate, then the remaining units in the order
/// -1, rho, -rho, rho^2, -rho^2.
Modulus decompose(const Eisenstein& eta);

Eisenstein mu_reduce(const Eisenstein& alpha, const Modulus& mod);

/// The grid representative x' + y'*rho (0 <= x' < width, 0 <= y' < t) of
/// delta's class.
Eisenstein pi_lift(const Eisenstein& delta, const Modulus& mod);

/// Same lift, forcing one branch; the branch's inverse must exist.
Eisenstein pi_lift_with(const Eisenstein& delta, const Modulus& mod, CoprimeSide side);

/// alpha == theta (mod eta), decided by congruences on the coordinates.
bool class_equal(const Eisenstein& alpha, const Eisenstein& theta, const Modulus& mod);

enum class RingOp { Add, Mul };

/// mu_reduce(alpha op theta).
Eisenstein ring_op_mod(RingOp op, const Eisenstein& alpha, const Eisenstein& theta, const Modulus& mod);

enum class IsomorphismKind {
    FullGrid, // eta ~ t: Z_t[rho]
    Rational, // t == 1: Z_{N(eta)}
    Mixed,
};

IsomorphismKind isomorphism_kind(const Modulus& mod);

struct ResidueSystem {
    Modulus modulus;
    std::vector<Eisenstein> r_points; // grid, y outer, x inner
    std::vector<Eisenstein> e_points; // e_points[i] = mu_reduce(r_points[i])

    std::size_t size() const { return r_points.size(); }
};

ResidueSystem residue_system(const Modulus& mod);

} // namespace eisring
