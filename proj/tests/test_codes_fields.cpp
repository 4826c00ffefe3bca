#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "eisring/codes_fields.hpp"
#include "eisring/verify.hpp"

using namespace eisring;
using E = Eisenstein;

namespace {

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

const E one{1, 0}, zero{0, 0}, rho{0, 1};

} // namespace

TEST_CASE("spans")
{
    const Modulus m3 = decompose({3, 0});
    const LinearCode full = span(m3, 1, {{one}});
    CHECK(full.codewords.size() == 9);

    const Modulus m2 = decompose({2, 0});
    const LinearCode rep = span(m2, 2, {{one, one}});
    REQUIRE(rep.codewords.size() == 4);
    for (const auto& w : rep.codewords)
        CHECK(w[0] == w[1]);

    const LinearCode trivial = span(m3, 3, {});
    REQUIRE(trivial.codewords.size() == 1);
    CHECK(trivial.codewords[0] == Word(3, zero));

    CHECK(code_of([&] { span(m3, 2, {{one}}); }) == Errc::LengthMismatch);
    CHECK(code_of([&] { span(m3, 3, {{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}, 100); }) ==
          Errc::SpanTooLarge);
}

TEST_CASE("field alphabets: |C| = N(gamma)^k for independent generators")
{
    const Modulus m7 = decompose({2, 3});  // prime of norm 7
    const LinearCode c = span(m7, 3, {{one, zero, rho}, {zero, one, one}});
    CHECK(c.codewords.size() == 49);
    CHECK(is_group_code(c.codewords, m7));
    const LinearCode d = span(m7, 3, {{one, zero, rho}, {rho, zero, rho * rho}});  // dependent
    CHECK(d.codewords.size() == 7);
}

TEST_CASE("group codes")
{
    const Modulus m3 = decompose({3, 0});
    CHECK(is_group_code(span(m3, 2, {{one, rho}}).codewords, m3));
    CHECK_FALSE(is_group_code({{zero, zero}, {one, zero}}, m3));
    CHECK(is_group_code({{zero, zero}}, m3));
    CHECK_FALSE(is_group_code({}, m3));

    // Every span over a ring alphabet is a group too.
    const Modulus m6 = decompose({6, 0});
    CHECK(is_group_code(span(m6, 2, {{E{2, 0}, E{3, 1}}}).codewords, m6));
}

TEST_CASE("minimum distance")
{
    const Modulus m2 = decompose({2, 0});
    const auto rep = span(m2, 2, {{one, one}}).codewords;
    CHECK(code_min_distance(rep, m2, CodeMetric::Hex) == 2);
    const Modulus m3 = decompose({3, 0});
    CHECK(code_min_distance(span(m3, 1, {{one}}).codewords, m3, CodeMetric::Hex) == 1);
    CHECK(code_min_distance(span(m3, 1, {{one}}).codewords, m3, CodeMetric::SqEuclid) == 1);
    CHECK(code_of([&] { code_min_distance({{one}}, m3, CodeMetric::Hex); }) == Errc::TooFewWords);

    // Group codes: minimum distance is the lightest nonzero word.
    const Modulus m7 = decompose({2, 3});
    for (const auto metric : {CodeMetric::Hex, CodeMetric::SqEuclid}) {
        const auto words = span(m7, 3, {{one, rho, one}, {zero, one, E{2, 0}}}).codewords;
        CHECK(code_min_distance(words, m7, metric) == code_min_weight(words, m7, metric));
    }
}

TEST_CASE("the 16-element field")
{
    const ExtensionField f({2, 0}, {rho, one, one});
    CHECK(f.order() == 16);
    CHECK(f.degree() == 2);
    const auto x = f.generator_x();
    CHECK(f.mul(x, x) == f.add(x, f.embed(rho)));
    const GroupOrderReport g = mult_group_order_check(f);
    CHECK(g.group_order == 15);
    CHECK(g.orders_divide);
    REQUIRE(g.generator.has_value());
    CHECK(f.element_order(*g.generator) == 15);

    std::set<ExtensionField::Elem> powers;
    auto p = f.one();
    for (int k = 0; k < 15; ++k) {
        powers.insert(p);
        p = f.mul(p, *g.generator);
    }
    CHECK(powers.size() == 15);
    CHECK_THROWS_AS(f.inverse(f.zero()), Error);
}

TEST_CASE("prime fields and a cubic extension")
{
    const GroupOrderReport g3 = mult_group_order_check(ExtensionField({1, -1}, {zero, one}));
    CHECK(g3.group_order == 2);
    CHECK(g3.generator.has_value());
    CHECK(mult_group_order_check(ExtensionField({2, 0}, {zero, one})).group_order == 3);
    const GroupOrderReport g27 = mult_group_order_check(ExtensionField({1, -1}, {-one, -one, zero, one}));
    CHECK(g27.group_order == 26);
    CHECK(g27.orders_divide);
    CHECK(g27.generator.has_value());
}

TEST_CASE("field construction errors")
{
    CHECK(code_of([] { ExtensionField({2, 0}, {zero, zero, one}); }) == Errc::ReduciblePolynomial);
    CHECK(code_of([] { ExtensionField({2, 0}, {one, zero, one}); }) == Errc::ReduciblePolynomial);  // (X+1)^2
    CHECK(code_of([] { ExtensionField({6, 0}, {rho, one, one}); }) == Errc::NotPrimeModulus);
    CHECK(code_of([] { ExtensionField({1, 0}, {zero, one}); }) == Errc::NotPrimeModulus);
    CHECK(code_of([] { ExtensionField({2, 0}, {one, rho}); }) == Errc::InvalidArgument);
}

TEST_CASE("field axioms: suite")
{
    const verify::SuiteReport r = verify::fields_suite(2000, 3);
    INFO(r.failure);
    CHECK(r.passed);
}
