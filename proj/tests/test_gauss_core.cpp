#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "eisring/gaussian.hpp"
#include "eisring/verify.hpp"

using namespace eisring;
using G = Gaussian;

namespace {

G draw_g(std::mt19937_64& rng, Int lo, Int hi) { return {verify::draw(rng, lo, hi), verify::draw(rng, lo, hi)}; }

bool in_ideal(const G& x, const G& eta)
{
    // x / eta is integral iff x * conj(eta) has both parts divisible by N(eta).
    const G p = x * g_conj(eta);
    const Int n = g_norm(eta);
    return p.a % n == 0 && p.b % n == 0;
}

} // namespace

TEST_CASE("arithmetic")
{
    CHECK(g_norm({2, 3}) == 13);
    CHECK(g_norm({0, 0}) == 0);
    CHECK(g_arith(GaussOp::Mul, {1, 1}, {1, -1}) == G{2, 0});
    CHECK(g_arith(GaussOp::Sub, {3, 4}, {3, 4}) == G{0, 0});
    CHECK(g_arith(GaussOp::Neg, {3, -4}) == G{-3, 4});
    CHECK(g_conj({3, 4}) == G{3, -4});
    try {
        (void)(G{Int{1} << 62, 0} * G{4, 0});
        FAIL("expected overflow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Overflow);
    }

    std::mt19937_64 rng(21);
    for (int i = 0; i < 2000; ++i) {
        const G x = draw_g(rng, -1000, 1000), y = draw_g(rng, -1000, 1000);
        REQUIRE(g_norm(x * y) == g_norm(x) * g_norm(y));
    }
}

TEST_CASE("reduction")
{
    CHECK(g_mod_reduce({2, 0}, {2, 0}) == G{0, 0});
    // 3/2 is a tie; halves round down, so the quotient is 1.
    CHECK(g_mod_reduce({3, 0}, {2, 0}) == G{1, 0});
    CHECK(g_mod_reduce({1, 1}, {2, 0}) == G{1, 1});
    try {
        g_mod_reduce({1, 0}, {0, 0});
        FAIL("expected ZeroModulus");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ZeroModulus);
    }

    std::mt19937_64 rng(22);
    for (int i = 0; i < 5000; ++i) {
        const G alpha = draw_g(rng, -5000, 5000);
        G eta = draw_g(rng, -50, 50);
        if (eta.is_zero())
            eta = {1, 0};
        const G r = g_mod_reduce(alpha, eta);
        REQUIRE(in_ideal(alpha - r, eta));
        REQUIRE(g_norm(r) <= g_norm(alpha));
        REQUIRE(2 * g_norm(r) <= g_norm(eta));
    }
}

TEST_CASE("residue system")
{
    const auto two = g_residue_system({2, 0});
    CHECK(std::set<G>(two.begin(), two.end()) == std::set<G>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    const auto p13 = g_residue_system({2, 3});
    REQUIRE(p13.size() == 13);
    for (Int k = 0; k < 13; ++k)
        CHECK(p13[static_cast<std::size_t>(k)] == G{k, 0});
    CHECK(g_residue_system({1, 0}) == std::vector<G>{{0, 0}});

    for (Int a = -12; a <= 12; ++a)
        for (Int b = -12; b <= 12; ++b) {
            const G eta{a, b};
            if (eta.is_zero())
                continue;
            const auto rs = g_residue_system(eta);
            REQUIRE(static_cast<Int>(rs.size()) == g_norm(eta));
            std::set<G> reps;
            for (const auto& g : rs)
                reps.insert(g_mod_reduce(g, eta));
            REQUIRE(reps.size() == rs.size());
        }
}

TEST_CASE("Mannheim weight")
{
    CHECK(mannheim_weight({0, 0}, {5, 2}) == 0);
    CHECK(mannheim_weight({1, 1}, {2, 0}) == 2);
    Int total = 0;
    for (const auto& g : g_residue_system({2, 0}))
        total += mannheim_weight(g, {2, 0});
    CHECK(total == 4);  // mean 1.00 over G_2

    // Small-radius oracle; the full N <= 400 sweep lives in the acceptance run.
    for (Int a = -8; a <= 8; ++a)
        for (Int b = -8; b <= 8; ++b) {
            const G eta{a, b};
            if (eta.is_zero())
                continue;
            for (const auto& g : g_residue_system(eta))
                REQUIRE(mannheim_weight(g, eta) == mannheim_weight_window(g, eta, 3));
        }
}

TEST_CASE("text")
{
    CHECK(to_string(G{2, 3}) == "2+3i");
    CHECK(to_string(G{-5, -1}) == "-5-i");
    CHECK(to_string(G{0, 0}) == "0");
    CHECK(parse_gaussian_pair("-3,4") == G{-3, 4});
}
