#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eisring/partition.hpp"
#include "eisring/verify.hpp"

using namespace eisring;
using E = Eisenstein;

namespace {

std::set<E> as_set(const std::vector<E>& v) { return {v.begin(), v.end()}; }

void require_siblings_equal(const PartitionNode& n)
{
    for (const auto& c : n.children) {
        REQUIRE(c.points.size() == n.children.front().points.size());
        REQUIRE(c.min_d2 == n.children.front().min_d2);
        REQUIRE(c.min_dhex == n.children.front().min_dhex);
        require_siblings_equal(c);
    }
}

template <class F>
Errc code_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::InvalidArgument;
}

} // namespace

TEST_CASE("subset distances")
{
    const SubsetDistances single = subset_min_distances(std::vector<E>{{3, 1}});
    CHECK_FALSE(single.d2.has_value());
    CHECK_FALSE(single.dhex.has_value());
    const ResidueSystem e6 = residue_system(decompose({6, 0}));
    const SubsetDistances full = subset_min_distances(e6.e_points);
    CHECK(full.d2 == 1);
    CHECK(full.dhex == 1);
}

TEST_CASE("primitive modulus -6+5rho")
{
    const Modulus mod = decompose({-6, 5});
    const PartitionNode p = subgroup_primitive(mod, 7, 13);
    REQUIRE(p.children.size() == 7);
    std::set<E> h;
    for (Int k = 0; k < 91; k += 7)
        h.insert(mu_reduce({k, 0}, mod));
    CHECK(as_set(p.children[0].points) == h);
    for (const auto& c : p.children) {
        CHECK(c.points.size() == 13);
        CHECK(c.min_d2 == 7);
    }
    CHECK(mu_reduce({14, 0}, mod) == E{-3, -1});
    CHECK(norm({-3, -1}) == 7);
    // The subgroup's distance is its lightest nonzero element.
    CHECK(p.children[0].min_d2 == norm(mu_reduce({14, 0}, mod)));

    const PartitionNode q = subgroup_primitive(mod, 13, 7);
    CHECK(q.children.size() == 13);
    CHECK(q.children[0].points.size() == 7);
    require_siblings_equal(q);

    const PartitionNode whole = subgroup_primitive(mod, 1, 91);
    REQUIRE(whole.children.size() == 1);
    CHECK(whole.children[0].points.size() == 91);
    CHECK(whole.children[0].min_d2 == 1);
}

TEST_CASE("nonprimitive moduli")
{
    const PartitionNode six = subgroup_nonprimitive(decompose({6, 0}), 2, 3);
    REQUIRE(six.children.size() == 4);
    std::set<E> s1;
    for (Int x = 0; x < 6; x += 2)
        for (Int y = 0; y < 6; y += 2)
            s1.insert(mu_reduce({x, y}, decompose({6, 0})));
    CHECK(as_set(six.children[0].points) == s1);
    for (const auto& c : six.children)
        CHECK(c.min_d2 == 4);

    const Modulus m612 = decompose({6, 12});
    const PartitionNode p = subgroup_nonprimitive(m612, 3, 2);
    REQUIRE(p.children.size() == 9);
    for (const auto& c : p.children) {
        CHECK(c.points.size() == 12);
        CHECK(c.min_d2 == 9);
    }
    // Coset (i, j) is i + j*rho + H with j outer.
    CHECK(p.children[1].offset == E{1, 0});
    CHECK(p.children[3].offset == E{0, 1});

    const PartitionNode full = subgroup_nonprimitive(decompose({6, 0}), 6, 1);
    CHECK(full.children.size() == 36);
    CHECK(full.children[0].points.size() == 1);
}

TEST_CASE("recursive chains")
{
    const Modulus m273 = decompose({-1, 16});
    REQUIRE(m273.size() == 273);
    const PartitionNode chain = recursive_partition(m273, std::vector<Int>{7, 13});
    REQUIRE(chain.children.size() == 7);
    for (const auto& c : chain.children) {
        CHECK(c.min_d2 == 7);
        REQUIRE(c.children.size() == 13);
        for (const auto& leaf : c.children)
            CHECK(leaf.min_d2 == 91);
    }
    CHECK(as_set(chain.children[0].children[0].points) ==
          std::set<E>{mu_reduce({0, 0}, m273), mu_reduce({91, 0}, m273), mu_reduce({182, 0}, m273)});
    require_siblings_equal(chain);

    const PartitionNode root = recursive_partition(m273, std::vector<Int>{});
    CHECK(root.children.empty());
    CHECK(root.points.size() == 273);

    const PartitionNode e6 = recursive_partition(decompose({6, 0}), std::vector<Int>{3});
    CHECK(e6.children.size() == 9);
    for (const auto& c : e6.children)
        CHECK(c.min_d2 == 9);

    const PartitionNode e6x2 = recursive_partition(decompose({6, 0}), std::vector<Int>{2, 3});
    CHECK(e6x2.leaf_count() == 36);
    require_siblings_equal(e6x2);
}

TEST_CASE("errors")
{
    const Modulus m91 = decompose({-6, 5}), m6 = decompose({6, 0});
    CHECK(code_of([&] { subgroup_primitive(m6, 2, 18); }) == Errc::NotPrimitiveModulus);
    CHECK(code_of([&] { subgroup_primitive(m91, 5, 18); }) == Errc::NotAFactorization);
    CHECK(code_of([&] { subgroup_nonprimitive(m6, 4, 1); }) == Errc::BadFactorOfT);
    CHECK(code_of([&] { subgroup_nonprimitive(m6, 1, 6); }) == Errc::BadFactorOfT);
    CHECK(code_of([&] { recursive_partition(m91, std::vector<Int>{2}); }) == Errc::NotAFactorization);
    CHECK(code_of([&] { recursive_partition(m6, std::vector<Int>{4}); }) == Errc::BadFactorOfT);
    CHECK(code_of([&] { recursive_partition(m6, std::vector<Int>{0}); }) == Errc::InvalidArgument);
}

TEST_CASE("sweep: siblings, cover, unit avoidance")
{
    const verify::SuiteReport r = verify::partition_suite();
    INFO(r.failure);
    CHECK(r.passed);
}
