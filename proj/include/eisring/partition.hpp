#pragma once

// Set partitioning of E_eta into cosets of additive subgroups. Every node's
// minimum distances are computed exhaustively, never taken on trust.

#include <optional>
#include <span>
#include <vector>

#include "eisring/quotient.hpp"

namespace eisring {

/// Pairwise minima; nullopt stands for infinity (fewer than two points).
struct SubsetDistances {
    std::optional<Int> d2;
    std::optional<Int> dhex;

    friend bool operator==(const SubsetDistances&, const SubsetDistances&) = default;
};

SubsetDistances subset_min_distances(std::span<const Eisenstein> points);

struct PartitionNode {
    std::vector<int> label;          // coset indices from the root
    Eisenstein offset;               // grid coset representative
    Int step = 1;                    // subgroup generated by step (and step*rho when nonprimitive)
    Int bound_d2 = 1;                // lower bound on min_d2 promised by the construction
    std::vector<Eisenstein> points;  // Voronoi representatives, grid order
    std::optional<Int> min_d2;
    std::optional<Int> min_dhex;
    std::vector<PartitionNode> children;

    std::size_t leaf_count() const;
};

/// t == 1, N(eta) = c*d: the root E_eta split into the c cosets of
/// {0, c, ..., (d-1)c}.
PartitionNode subgroup_primitive(const Modulus& mod, Int c, Int d);

/// t == c*d: the root split into the c^2 cosets of the points with both grid
/// coordinates divisible by c; coset (i, j) is i + j*rho + H, j outer.
PartitionNode subgroup_nonprimitive(const Modulus& mod, Int c, Int d);

/// Chain of refinements with the given factors: the product must divide
/// N(eta) when t == 1 and must divide t otherwise.
PartitionNode recursive_partition(const Modulus& mod, std::span<const Int> factors);

} // namespace eisring
