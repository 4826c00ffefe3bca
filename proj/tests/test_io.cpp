#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "eisring/io.hpp"

using namespace eisring;

namespace {

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

std::size_t count_of(const std::string& s, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("residue table CSV and JSON")
{
    const ResidueSystem e6 = residue_system(decompose({6, 0}));
    const std::string csv = io::residue_table_csv(e6);
    CHECK(csv.rfind("x,y,re_rep_a,re_rep_b\n", 0) == 0);
    CHECK(count_lines(csv) == 37);
    CHECK(csv.find("\n4,0,-2,0\n") != std::string::npos);

    const auto j = nlohmann::json::parse(io::residue_table_json(e6));
    CHECK(j["schema"] == "eisring/v1");
    CHECK(j["rows"].size() == 36);
    CHECK(j["rows"][4]["rep"] == nlohmann::json::array({-2, 0}));
}

TEST_CASE("partition JSON and SVG")
{
    const Modulus mod = decompose({-6, 5});
    const PartitionNode p = subgroup_primitive(mod, 7, 13);
    const auto j = nlohmann::json::parse(io::partition_json(p, mod));
    CHECK(j["schema"] == "eisring/v1");
    CHECK(j["root"]["children"].size() == 7);
    CHECK(j["root"]["children"][3]["min_d2"] == 7);
    CHECK(j["root"]["children"][3]["points"].size() == 13);

    const std::string svg = io::partition_svg(p);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_of(svg, "<circle") == 91);
    CHECK(count_of(svg, "</svg>") == 1);
    // Seven distinct fills.
    std::set<std::string> fills;
    for (auto pos = svg.find("fill=\""); pos != std::string::npos; pos = svg.find("fill=\"", pos + 1))
        fills.insert(svg.substr(pos, svg.find('"', pos + 6) - pos));
    CHECK(fills.size() == 7);
}

TEST_CASE("SVG geometry: 40-unit spacing, rho up and to the left")
{
    Constellation c;
    c.eis_points = {{0, 0}, {1, 0}, {0, 1}};
    const std::string svg = io::constellation_svg(c);
    // Bounds are x in [-0.5, 1], y in [0, sqrt(3)/2], margin 40.
    CHECK(svg.find("cx=\"60.000\" cy=\"74.641\"") != std::string::npos);   // origin
    CHECK(svg.find("cx=\"100.000\" cy=\"74.641\"") != std::string::npos);  // 1
    CHECK(svg.find("cx=\"40.000\" cy=\"40.000\"") != std::string::npos);   // rho
}

TEST_CASE("energy table renderings")
{
    const std::vector<ComparisonPair> pairs{{{2, 0}, {2, 0}}};
    const auto rows = compare_table(pairs);
    CHECK(io::energy_table_csv(rows) ==
          "gaussian_a,gaussian_b,eisenstein_a,eisenstein_b,size,E_G,E_E,E2_G,E2_E,EM_G,EHex_E\n"
          "2,0,2,0,4,0.85,0.75,1.00,0.75,1.00,0.75\n");
    const auto j = nlohmann::json::parse(io::energy_table_json(rows));
    CHECK(j["rows"][0]["E2_G"] == "1.00");
    CHECK(io::energy_table_text(rows).find("0.85    0.75    1.00    0.75    1.00    0.75") != std::string::npos);
}

TEST_CASE("constellation CSV and codeword CSV")
{
    const std::string csv = io::constellation_csv(build_gaussian({2, 0}));
    CHECK(csv == "re,im\n0.000000,0.000000\n1.000000,0.000000\n0.000000,1.000000\n1.000000,1.000000\n");
    CHECK(io::codewords_csv({{{1, 0}, {0, 1}}, {{-1, -1}, {0, 0}}}) == "1,ρ\n-1-ρ,0\n");
}

TEST_CASE("output is deterministic")
{
    const Modulus mod = decompose({6, 12});
    const PartitionNode p = subgroup_nonprimitive(mod, 3, 2);
    CHECK(io::partition_json(p, mod) == io::partition_json(subgroup_nonprimitive(mod, 3, 2), mod));
    CHECK(io::partition_svg(p) == io::partition_svg(subgroup_nonprimitive(mod, 3, 2)));
}
