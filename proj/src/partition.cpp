#include "eisring/partition.hpp"

#include "eisring/metrics.hpp"

namespace eisring {

using namespace checked;

SubsetDistances subset_min_distances(std::span<const Eisenstein> points)
{
    SubsetDistances out;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const Int d2 = sq_euclid_distance(points[i], points[j]);
            const Int dh = hex_distance(points[i], points[j]);
            if (!out.d2 || d2 < *out.d2)
                out.d2 = d2;
            if (!out.dhex || dh < *out.dhex)
                out.dhex = dh;
        }
    return out;
}

std::size_t PartitionNode::leaf_count() const
{
    if (children.empty())
        return 1;
    std::size_t total = 0;
    for (const auto& c : children)
        total += c.leaf_count();
    return total;
}

namespace {

// Walks the residue grid and keeps points congruent to the node's offset
// modulo its step (only x is constrained when t == 1).
class Partitioner {
public:
    explicit Partitioner(const Modulus& mod)
        : rs_(residue_system(mod)), primitive_(mod.t == 1)
    {
    }

    PartitionNode root() const
    {
        PartitionNode node;
        fill(node);
        return node;
    }

    void split(PartitionNode& node, Int factor) const
    {
        const Int step = mul(node.step, factor);
        const Int bound = primitive_ ? step : mul(step, step);
        int index = 0;
        const Int rows = primitive_ ? 1 : factor;
        for (Int j = 0; j < rows; ++j)
            for (Int i = 0; i < factor; ++i) {
                PartitionNode child;
                child.label = node.label;
                child.label.push_back(index++);
                child.offset = node.offset + Eisenstein{mul(i, node.step), mul(j, node.step)};
                child.step = step;
                child.bound_d2 = bound;
                fill(child);
                node.children.push_back(std::move(child));
            }
    }

private:
    void fill(PartitionNode& node) const
    {
        for (std::size_t k = 0; k < rs_.size(); ++k) {
            const Eisenstein& g = rs_.r_points[k];
            if (mod_floor(sub(g.a, node.offset.a), node.step) != 0)
                continue;
            if (!primitive_ && mod_floor(sub(g.b, node.offset.b), node.step) != 0)
                continue;
            node.points.push_back(rs_.e_points[k]);
        }
        const SubsetDistances d = subset_min_distances(node.points);
        node.min_d2 = d.d2;
        node.min_dhex = d.dhex;
    }

    ResidueSystem rs_;
    bool primitive_;
};

void refine(const Partitioner& p, PartitionNode& node, std::span<const Int> factors)
{
    if (factors.empty())
        return;
    p.split(node, factors.front());
    for (auto& child : node.children)
        refine(p, child, factors.subspan(1));
}

} // namespace

PartitionNode subgroup_primitive(const Modulus& mod, Int c, Int d)
{
    if (mod.t != 1)
        throw Error(Errc::NotPrimitiveModulus, "modulus " + to_string(mod.working_eta) + " is not primitive");
    if (c < 1 || d < 1 || mul(c, d) != mod.size())
        throw Error(Errc::NotAFactorization, "c*d must equal N(eta)");
    const Partitioner p(mod);
    PartitionNode root = p.root();
    p.split(root, c);
    return root;
}

PartitionNode subgroup_nonprimitive(const Modulus& mod, Int c, Int d)
{
    if (c < 2 || d < 1 || mul(c, d) != mod.t)
        throw Error(Errc::BadFactorOfT, "need c*d == t with c > 1");
    const Partitioner p(mod);
    PartitionNode root = p.root();
    p.split(root, c);
    return root;
}

PartitionNode recursive_partition(const Modulus& mod, std::span<const Int> factors)
{
    Int product = 1;
    for (Int f : factors) {
        if (f < 1)
            throw Error(Errc::InvalidArgument, "partition factors must be positive");
        product = mul(product, f);
    }
    if (mod.t == 1) {
        if (mod.size() % product != 0)
            throw Error(Errc::NotAFactorization, "product of factors must divide N(eta)");
    } else if (mod.t % product != 0) {
        throw Error(Errc::BadFactorOfT, "product of factors must divide t");
    }
    const Partitioner p(mod);
    PartitionNode root = p.root();
    refine(p, root, factors);
    return root;
}

} // namespace eisring
