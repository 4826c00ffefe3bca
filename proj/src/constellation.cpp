#include "eisring/constellation.hpp"

#include <cmath>
#include <cstdio>

#include "eisring/golden.hpp"
#include "eisring/metrics.hpp"

namespace eisring {

using namespace checked;

Int Rational::hundredths() const
{
    // floor(100 num / den + 1/2)
    return floor_div(add(mul(200, num), den), mul(2, den));
}

std::vector<std::array<double, 2>> Constellation::cartesian() const
{
    std::vector<std::array<double, 2>> out;
    if (kind == ConstellationKind::Eisenstein) {
        const double h = std::sqrt(3.0) / 2.0;
        for (const auto& p : eis_points)
            out.push_back({static_cast<double>(p.a) - 0.5 * static_cast<double>(p.b), h * static_cast<double>(p.b)});
    } else {
        for (const auto& p : gauss_points)
            out.push_back({static_cast<double>(p.a), static_cast<double>(p.b)});
    }
    return out;
}

Constellation build_eisenstein(const Eisenstein& eta)
{
    Constellation c;
    c.kind = ConstellationKind::Eisenstein;
    c.modulus = {eta.a, eta.b};
    c.eis_modulus = decompose(eta);
    c.eis_points = residue_system(*c.eis_modulus).e_points;
    return c;
}

Constellation build_gaussian(const Gaussian& eta)
{
    Constellation c;
    c.kind = ConstellationKind::Gaussian;
    c.modulus = {eta.a, eta.b};
    for (const auto& g : g_residue_system(eta))
        c.gauss_points.push_back(g_mod_reduce(g, eta));
    return c;
}

namespace {

void keep_min(std::optional<Int>& slot, Int v)
{
    if (!slot || v < *slot)
        slot = v;
}

} // namespace

EnergyReport energy_report(const Constellation& c)
{
    EnergyReport r;
    const auto n = static_cast<Int>(c.size());
    if (n == 0)
        return r;
    long double abs_sum = 0;
    Int sq_sum = 0, weight_sum = 0, class_weight_sum = 0;

    if (c.kind == ConstellationKind::Eisenstein) {
        const auto& pts = c.eis_points;
        for (const auto& p : pts) {
            const Int nrm = norm(p);
            abs_sum += std::sqrt(static_cast<long double>(nrm));
            sq_sum = add(sq_sum, nrm);
            weight_sum = add(weight_sum, hex_weight(p));
            class_weight_sum = add(class_weight_sum, min_class_hex_weight(p, *c.eis_modulus));
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                keep_min(r.min_d2, sq_euclid_distance(pts[i], pts[j]));
                keep_min(r.min_weight_distance, hex_distance(pts[i], pts[j]));
            }
    } else {
        const Gaussian eta{c.modulus.first, c.modulus.second};
        const auto& pts = c.gauss_points;
        for (const auto& p : pts) {
            const Int nrm = g_norm(p);
            abs_sum += std::sqrt(static_cast<long double>(nrm));
            sq_sum = add(sq_sum, nrm);
            weight_sum = add(weight_sum, add(abs(p.a), abs(p.b)));
            class_weight_sum = add(class_weight_sum, mannheim_weight(p, eta));
        }
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                keep_min(r.min_d2, g_norm(pts[i] - pts[j]));
                keep_min(r.min_weight_distance, mannheim_weight(pts[i] - pts[j], eta));
            }
    }
    r.mean_abs = static_cast<double>(abs_sum / static_cast<long double>(n));
    r.mean_sq = {sq_sum, n};
    r.mean_weight = {weight_sum, n};
    r.mean_class_weight = {class_weight_sum, n};
    return r;
}

std::vector<ComparisonRow> compare_table(std::span<const ComparisonPair> pairs)
{
    std::vector<ComparisonRow> rows;
    for (const auto& pair : pairs) {
        if (g_norm(pair.gaussian) != norm(pair.eisenstein))
            throw Error(Errc::CardinalityMismatch,
                        to_string(pair.gaussian) + " and " + to_string(pair.eisenstein) + " have different norms");
        const EnergyReport g = energy_report(build_gaussian(pair.gaussian));
        const EnergyReport e = energy_report(build_eisenstein(pair.eisenstein));

        ComparisonRow row{pair.gaussian, pair.eisenstein, norm(pair.eisenstein), {}, {}};
        row.values = {g.mean_abs, e.mean_abs, g.mean_sq.to_double(), e.mean_sq.to_double(),
                      g.mean_weight.to_double(), e.mean_weight.to_double()};
        row.hundredths = {
            static_cast<Int>(std::floor(static_cast<long double>(g.mean_abs) * 100.0L + 0.5L)),
            static_cast<Int>(std::floor(static_cast<long double>(e.mean_abs) * 100.0L + 0.5L)),
            g.mean_sq.hundredths(), e.mean_sq.hundredths(),
            g.mean_weight.hundredths(), e.mean_weight.hundredths(),
        };
        rows.push_back(row);
    }
    return rows;
}

std::vector<ComparisonPair> builtin_pairs()
{
    std::vector<ComparisonPair> out;
    for (const auto& row : golden::table_energy())
        out.push_back({row.gaussian, row.eisenstein});
    return out;
}

std::string format_hundredths(Int h)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%lld.%02lld", h < 0 ? "-" : "", static_cast<long long>(std::llabs(h) / 100),
                  static_cast<long long>(std::llabs(h) % 100));
    return buf;
}

} // namespace eisring
