#pragma once

// Text, CSV, JSON and SVG renderings. All output is deterministic.

#include <string>
#include <vector>

#include "eisring/codes_fields.hpp"
#include "eisring/constellation.hpp"
#include "eisring/partition.hpp"

namespace eisring::io {

inline constexpr const char* schema = "eisring/v1";
inline constexpr double lattice_spacing = 40.0;

// Residue tables: columns x, y, re_rep_a, re_rep_b in grid order.
std::string residue_table_text(const ResidueSystem& rs);
std::string residue_table_csv(const ResidueSystem& rs);
std::string residue_table_json(const ResidueSystem& rs);

std::string energy_table_text(const std::vector<ComparisonRow>& rows);
std::string energy_table_csv(const std::vector<ComparisonRow>& rows);
std::string energy_table_json(const std::vector<ComparisonRow>& rows);

std::string partition_text(const PartitionNode& root);
std::string partition_json(const PartitionNode& root, const Modulus& mod);
/// Leaves of the first level get one color each.
std::string partition_svg(const PartitionNode& root);

// Constellation scatter: columns re, im.
std::string constellation_text(const Constellation& c, const EnergyReport& report);
std::string constellation_csv(const Constellation& c);
std::string constellation_json(const Constellation& c, const EnergyReport& report);
std::string constellation_svg(const Constellation& c);

/// One codeword per row, components as "a+bρ".
std::string codewords_csv(const std::vector<Word>& words);

} // namespace eisring::io
