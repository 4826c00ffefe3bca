#pragma once

// Reference data: published residue tables and the Gaussian/Eisenstein
// energy comparison, embedded for regression checks.

#include <array>
#include <vector>

#include "eisring/eisenstein.hpp"
#include "eisring/gaussian.hpp"

namespace eisring::golden {

struct ResidueRow {
    Eisenstein grid;
    Eisenstein voronoi;
};

/// E_6: 36 rows.
const std::vector<ResidueRow>& table_e6();
/// E_{6+12rho}: 108 rows.
const std::vector<ResidueRow>& table_e6_12rho();
/// E_{-6+5rho}: 91 rows.
const std::vector<ResidueRow>& table_e91();

struct EnergyRow {
    Gaussian gaussian;
    Eisenstein eisenstein;
    Int size;
    /// Hundredths: E(G), E(E), E2(G), E2(E), EM(G), EHex(E).
    std::array<Int, 6> hundredths;
};

const std::vector<EnergyRow>& table_energy();

} // namespace eisring::golden
