#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "eisring/golden.hpp"
#include "eisring/quotient.hpp"
#include "eisring/verify.hpp"

using namespace eisring;
using E = Eisenstein;

namespace {

E draw_e(std::mt19937_64& rng, Int lo, Int hi) { return {verify::draw(rng, lo, hi), verify::draw(rng, lo, hi)}; }

void check_modulus_invariants(const Modulus& m)
{
    REQUIRE(m.working_eta == E{m.t * m.m, m.t * m.n});
    REQUIRE(igcd(m.working_eta.a, m.working_eta.b) == m.t);
    REQUIRE(igcd(m.m, m.n) == 1);
    REQUIRE((igcd(m.m, m.t) == 1 || igcd(m.n, m.t) == 1));
    REQUIRE(are_associates(m.working_eta, m.eta));
    REQUIRE(m.size() == norm(m.eta));
}

} // namespace

TEST_CASE("decompose")
{
    const Modulus mixed = decompose({4, 6});
    CHECK(mixed.t == 2);
    CHECK(mixed.m == 2);
    CHECK(mixed.n == 3);
    CHECK(mixed.coprime_side == CoprimeSide::N);

    const Modulus shared = decompose({12, 18});
    CHECK(shared.working_eta == E{18, 6});
    CHECK(shared.t == 6);
    CHECK(shared.m == 3);
    CHECK(shared.n == 1);

    const Modulus seven = decompose({7, 0});
    CHECK(seven.t == 7);
    CHECK(seven.m == 1);
    CHECK(seven.n == 0);

    CHECK_THROWS_AS(decompose({0, 0}), Error);

    // 30(8+3rho): every associate has both m and n sharing a factor with 30.
    try {
        decompose(E{30, 0} * E{8, 3});
        FAIL("expected NoSuitableAssociate");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NoSuitableAssociate);
    }

    for (Int a = -40; a <= 40; ++a)
        for (Int b = -40; b <= 40; ++b)
            if (a != 0 || b != 0)
                check_modulus_invariants(decompose({a, b}));
}

TEST_CASE("worked examples")
{
    const Modulus m3 = decompose({-6, 5});
    CHECK(mu_reduce({10, 0}, m3) == E{4, 5});
    CHECK(pi_lift({4, 5}, m3) == E{10, 0});
    const Modulus m4 = decompose({4, 6});
    CHECK(mu_reduce({10, 1}, m4) == E{2, 3});
    CHECK(pi_lift({2, 3}, m4) == E{10, 1});
    // -2-3rho differs from 2+3rho by eta itself, so it lifts to the same point.
    CHECK(pi_lift({-2, -3}, m4) == E{10, 1});
    CHECK(mu_reduce({0, 0}, m3) == E{0, 0});
    CHECK(pi_lift({0, 0}, m4) == E{0, 0});
}

TEST_CASE("residue systems against the published tables")
{
    const auto compare = [](const E& eta, const std::vector<golden::ResidueRow>& rows) {
        const ResidueSystem rs = residue_system(decompose(eta));
        REQUIRE(rs.size() == rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            INFO("row " << i);
            REQUIRE(rs.r_points[i] == rows[i].grid);
            REQUIRE(rs.e_points[i] == rows[i].voronoi);
        }
    };
    compare({6, 0}, golden::table_e6());
    compare({6, 12}, golden::table_e6_12rho());
    compare({-6, 5}, golden::table_e91());

    const ResidueSystem e6 = residue_system(decompose({6, 0}));
    CHECK(e6.e_points[4] == E{-2, 0});
    const ResidueSystem e612 = residue_system(decompose({6, 12}));
    CHECK(e612.r_points[7] == E{7, 0});
    CHECK(e612.e_points[7] == E{1, 6});
    const ResidueSystem e91 = residue_system(decompose({-6, 5}));
    CHECK(e91.e_points[6] == E{0, 5});
}

TEST_CASE("round trip on every grid point")
{
    for (const E eta : {E{6, 0}, E{6, 12}, E{-6, 5}, E{4, 6}, E{18, 6}, E{12, 18}, E{1, 0}, E{2, 0}}) {
        const ResidueSystem rs = residue_system(decompose(eta));
        REQUIRE(static_cast<Int>(rs.size()) == norm(eta));
        REQUIRE(std::set<E>(rs.e_points.begin(), rs.e_points.end()).size() == rs.size());
        for (std::size_t i = 0; i < rs.size(); ++i) {
            REQUIRE(pi_lift(rs.e_points[i], rs.modulus) == rs.r_points[i]);
            REQUIRE(mu_reduce(rs.e_points[i], rs.modulus) == rs.e_points[i]);
            REQUIRE(divides(eta, rs.r_points[i] - rs.e_points[i]));
        }
    }
}

TEST_CASE("both lift branches agree when both inverses exist")
{
    for (Int a = -20; a <= 20; ++a)
        for (Int b = -20; b <= 20; ++b) {
            if (a == 0 && b == 0)
                continue;
            const Modulus mod = decompose({a, b});
            if (igcd(mod.m, mod.t) != 1 || igcd(mod.n, mod.t) != 1)
                continue;
            for (const auto& e : residue_system(mod).e_points)
                REQUIRE(pi_lift_with(e, mod, CoprimeSide::N) == pi_lift_with(e, mod, CoprimeSide::M));
        }
}

TEST_CASE("primitive moduli give the line 0..N-1")
{
    for (Int a = -25; a <= 25; ++a)
        for (Int b = -25; b <= 25; ++b) {
            if ((a == 0 && b == 0) || !is_primitive({a, b}))
                continue;
            const Modulus mod = decompose({a, b});
            REQUIRE(mod.t == 1);
            REQUIRE(isomorphism_kind(mod) == IsomorphismKind::Rational);
            const ResidueSystem rs = residue_system(mod);
            for (std::size_t k = 0; k < rs.size(); ++k)
                REQUIRE(rs.r_points[k] == E{static_cast<Int>(k), 0});
        }
}

TEST_CASE("class equality")
{
    const Modulus m4 = decompose({4, 6});
    CHECK(class_equal({10, 1}, {2, 3}, m4));
    CHECK(class_equal({5, -7}, {5, -7}, m4));
    CHECK_FALSE(class_equal({1, 0}, {2, 0}, m4));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 3000; ++i) {
        E eta = draw_e(rng, -25, 25);
        if (eta.is_zero())
            continue;
        const Modulus mod = decompose(eta);
        const E x = draw_e(rng, -300, 300);
        const E y = i % 2 ? draw_e(rng, -300, 300) : x + draw_e(rng, -5, 5) * eta;
        REQUIRE(class_equal(x, y, mod) == ideal_member(x - y, mod.t, mod.primitive_part()));
    }
}

TEST_CASE("ring operations")
{
    const Modulus six = decompose({6, 0});
    CHECK(ring_op_mod(RingOp::Add, {-1, 0}, {1, 0}, six) == E{0, 0});
    const Modulus two = decompose({2, 0});
    // (1+rho)^2 = rho, and rho = -rho mod 2; the tie rule keeps -rho.
    const E sq = ring_op_mod(RingOp::Mul, {1, 1}, {1, 1}, two);
    CHECK(class_equal(sq, {0, 1}, two));
    CHECK(sq == E{0, -1});
    const Modulus m91 = decompose({-6, 5});
    CHECK(ring_op_mod(RingOp::Add, {1, 0}, {5, 0}, m91) == E{0, 5});

    // Closure: results are representatives of the system.
    const ResidueSystem rs = residue_system(decompose({6, 12}));
    const std::set<E> reps(rs.e_points.begin(), rs.e_points.end());
    for (const auto& x : rs.e_points)
        for (const auto& y : rs.e_points) {
            REQUIRE(reps.contains(ring_op_mod(RingOp::Add, x, y, rs.modulus)));
            REQUIRE(reps.contains(ring_op_mod(RingOp::Mul, x, y, rs.modulus)));
        }
}

TEST_CASE("isomorphism kind")
{
    CHECK(isomorphism_kind(decompose({6, 0})) == IsomorphismKind::FullGrid);
    CHECK(isomorphism_kind(decompose({-6, 5})) == IsomorphismKind::Rational);
    CHECK(isomorphism_kind(decompose({6, 12})) == IsomorphismKind::Mixed);
}
