#include "eisring/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "eisring/codes_fields.hpp"
#include "eisring/constellation.hpp"
#include "eisring/golden.hpp"
#include "eisring/metrics.hpp"
#include "eisring/partition.hpp"

namespace eisring::verify {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"relnormhex", "roundtrip",     "primitivity",    "partition",
                                                "mannheim-oracle", "table5", "residue-tables", "fields"};
    return names;
}

Int draw(std::mt19937_64& rng, Int lo, Int hi)
{
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(rng() % span);
}

namespace {

Eisenstein draw_eisenstein(std::mt19937_64& rng, Int lo, Int hi) { return {draw(rng, lo, hi), draw(rng, lo, hi)}; }

std::string str(const Eisenstein& x) { return to_string(x); }

// All a + b*rho with 1 <= N <= max_norm. |a|, |b| <= sqrt(4N/3).
template <class F>
void for_each_norm_bounded(Int max_norm, F&& f)
{
    const Int r = static_cast<Int>(std::sqrt(4.0 * static_cast<double>(max_norm) / 3.0)) + 1;
    for (Int a = -r; a <= r; ++a)
        for (Int b = -r; b <= r; ++b) {
            const Eisenstein x{a, b};
            const Int n = norm(x);
            if (n >= 1 && n <= max_norm)
                f(x);
        }
}

} // namespace

SuiteReport relnormhex_suite(std::size_t samples, std::uint64_t seed)
{
    Checker ck("relnormhex");

    // (i) exhaustively up to norm 10^4
    for_each_norm_bounded(10'000, [&](const Eisenstein& x) {
        const Int w = hex_weight(x), n = norm(x);
        ck.expect(w * w >= n && w <= n, [&] { return "(i) fails at " + str(x); });
    });

    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        const Eisenstein x = draw_eisenstein(rng, -100, 100);
        Eisenstein y = draw_eisenstein(rng, -100, 100);
        if (y.is_zero())
            y = {1, 0};
        const Int k = draw(rng, -100, 100);
        const Int wx = hex_weight(x), wy = hex_weight(y), wxy = hex_weight(x * y);

        ck.expect(wx <= wxy, [&] { return "(ii) wt(a) > wt(a*b) for a=" + str(x) + " b=" + str(y); });
        ck.expect(wx == hex_weight(conjugate(x)), [&] { return "(iii) conjugate weight differs at " + str(x); });
        ck.expect(hex_weight(Eisenstein{k, 0} * x) == checked::abs(k) * wx,
                  [&] { return "(iv) fails at k=" + std::to_string(k) + " a=" + str(x); });
        if (!x.is_zero()) {
            int hits = 0;
            for (const auto& u : associates(x))
                hits += (u.a == wx && u.b >= 0 && u.b < wx) ? 1 : 0;
            ck.expect(hits == 1, [&] { return "(v) " + std::to_string(hits) + " associates of form n+k*rho for " + str(x); });
        }
        // (vi) on the pairs of equal norm produced by units and conjugation
        for (const auto& u : associates(x))
            ck.expect(hex_weight(u) == wx && hex_weight(conjugate(u)) == wx,
                      [&] { return "(vi) associate " + str(u) + " of " + str(x) + " changes weight"; });
        ck.expect(wxy <= wx * wy, [&] { return "(vii) fails at a=" + str(x) + " b=" + str(y); });
    }

    // Witnesses that weight and norm order do not determine each other.
    ck.expect(hex_weight({4, 4}) == 4 && hex_weight({3, 4}) == 4 && norm({4, 4}) == 16 && norm({3, 4}) == 13,
              [] { return std::string("witness pair 4+4rho / 3+4rho"); });
    ck.expect(hex_weight({8, 4}) == 8 && hex_weight({7, 7}) == 7 && norm({8, 4}) == 48 && norm({7, 7}) == 49,
              [] { return std::string("witness pair 8+4rho / 7+7rho"); });
    return ck.take();
}

SuiteReport roundtrip_suite(std::size_t samples, std::uint64_t seed)
{
    Checker ck("roundtrip");
    const std::vector<Eisenstein> fixed{{6, 0}, {6, 12}, {-6, 5}, {4, 6}, {18, 6}};
    for (const auto& eta : fixed) {
        const ResidueSystem rs = residue_system(decompose(eta));
        ck.expect(static_cast<Int>(rs.size()) == norm(eta), [&] { return "grid size wrong for " + str(eta); });
        for (std::size_t i = 0; i < rs.size(); ++i)
            ck.expect(pi_lift(rs.e_points[i], rs.modulus) == rs.r_points[i],
                      [&] { return "pi(mu(" + str(rs.r_points[i]) + ")) != itself mod " + str(eta); });
    }

    std::mt19937_64 rng(seed);
    std::size_t rejects = 0, accepted = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        Eisenstein eta;
        do
            eta = draw_eisenstein(rng, -37, 37);
        while (norm(eta) < 1 || norm(eta) > 1000);
        Modulus mod;
        try {
            mod = decompose(eta);
        } catch (const Error& e) {
            if (e.code() != Errc::NoSuitableAssociate)
                throw;
            ++rejects;
            continue;
        }
        ++accepted;
        const ResidueSystem rs = residue_system(mod);
        const std::set<Eisenstein> distinct(rs.e_points.begin(), rs.e_points.end());
        ck.expect(static_cast<Int>(rs.size()) == norm(eta) && distinct.size() == rs.size(),
                  [&] { return "|E| != N or repeated representative for " + str(eta); });
        for (std::size_t i = 0; i < rs.size(); ++i) {
            const Eisenstein& r = rs.r_points[i];
            const Eisenstein& e = rs.e_points[i];
            ck.expect(pi_lift(e, mod) == r && class_equal(r, e, mod) && divides(eta, r - e),
                      [&] { return "round trip fails at " + str(r) + " mod " + str(eta); });
        }
    }
    ck.note("random moduli: " + std::to_string(accepted) + " accepted, " + std::to_string(rejects) +
            " NoSuitableAssociate rejects");
    ck.expect(samples == 0 || rejects * 20 < samples, [&] { return "reject rate reached 5%"; });
    return ck.take();
}

SuiteReport primitivity_suite()
{
    Checker ck("primitivity");
    std::size_t primitive = 0;
    for_each_norm_bounded(500, [&](const Eisenstein& x) {
        const bool by_gcd = is_primitive(x);
        ck.expect(by_gcd == primitivity_structure_check(x),
                  [&] { return "gcd and factorization forms disagree at " + str(x); });
        if (!by_gcd)
            return;
        ++primitive;
        const Int n = norm(x);
        bool bad_prime = n % 9 == 0;
        for (const auto& [p, e] : factor_integer(n))
            bad_prime = bad_prime || p % 3 == 2;
        ck.expect(!bad_prime, [&] { return "primitive " + str(x) + " has forbidden norm " + std::to_string(n); });
    });
    ck.note(std::to_string(primitive) + " primitive moduli with norm <= 500");
    return ck.take();
}

namespace {

bool contains_unit(const std::vector<Eisenstein>& pts)
{
    return std::any_of(pts.begin(), pts.end(), [](const Eisenstein& p) { return is_unit(p); });
}

// Structural checks on every internal node of a tree.
void check_tree(Checker& ck, const PartitionNode& node, const std::string& where)
{
    if (node.children.empty())
        return;
    const auto& first = node.children.front();
    std::multiset<Eisenstein> covered;
    for (const auto& c : node.children) {
        ck.expect(c.points.size() == first.points.size(), [&] { return where + ": unequal coset sizes"; });
        ck.expect(c.min_d2 == first.min_d2 && c.min_dhex == first.min_dhex,
                  [&] { return where + ": sibling cosets differ in (d2, dhex)"; });
        ck.expect(!node.min_d2 || !c.min_d2 || *c.min_d2 >= *node.min_d2,
                  [&] { return where + ": child distance below parent"; });
        covered.insert(c.points.begin(), c.points.end());
        check_tree(ck, c, where);
    }
    const std::multiset<Eisenstein> parent(node.points.begin(), node.points.end());
    ck.expect(covered == parent, [&] { return where + ": children do not partition the parent"; });
    // The subgroup itself (offset 0): no units once the distance exceeds 1,
    // and its distance is its lightest nonzero norm.
    if (!first.offset.is_zero())
        return;
    if (first.points.size() > 1 && first.bound_d2 > 1)
        ck.expect(!contains_unit(first.points), [&] { return where + ": subgroup contains a unit"; });
    Int lightest = 0;
    for (const auto& p : first.points)
        if (!p.is_zero() && (lightest == 0 || norm(p) < lightest))
            lightest = norm(p);
    ck.expect(first.points.size() < 2 || (first.min_d2 && *first.min_d2 == lightest),
              [&] { return where + ": subgroup distance differs from its lightest element"; });
}

bool all_children_d2(const PartitionNode& n, Int d2)
{
    return !n.children.empty() && std::all_of(n.children.begin(), n.children.end(),
                                              [&](const PartitionNode& c) { return c.min_d2 == d2; });
}

} // namespace

SuiteReport partition_suite()
{
    Checker ck("partition");

    {
        const Modulus mod = decompose({-6, 5});
        const PartitionNode p = subgroup_primitive(mod, 7, 13);
        check_tree(ck, p, "-6+5rho by 7");
        ck.expect(p.children.size() == 7 && p.children[0].points.size() == 13 && all_children_d2(p, 7),
                  [] { return std::string("-6+5rho by 7: expected 7 cosets of 13 with d2 = 7"); });
        std::set<Eisenstein> h;
        for (Int k = 0; k < 91; k += 7)
            h.insert(mu_reduce({k, 0}, mod));
        const std::set<Eisenstein> got(p.children[0].points.begin(), p.children[0].points.end());
        ck.expect(got == h, [] { return std::string("-6+5rho: subgroup is not {0, 7, ..., 84}"); });
        ck.expect(mu_reduce({14, 0}, mod) == Eisenstein{-3, -1} && norm({-3, -1}) == 7,
                  [] { return std::string("mu(14) != -3-rho"); });

        const PartitionNode q = subgroup_primitive(mod, 13, 7);
        check_tree(ck, q, "-6+5rho by 13");
        ck.expect(q.children.size() == 13 && q.children[0].points.size() == 7,
                  [] { return std::string("-6+5rho by 13: expected 13 cosets of 7"); });
    }
    {
        const PartitionNode p = subgroup_nonprimitive(decompose({6, 0}), 2, 3);
        check_tree(ck, p, "6 by 2");
        ck.expect(p.children.size() == 4 && all_children_d2(p, 4),
                  [] { return std::string("6 by 2: expected 4 cosets with d2 = 4"); });
        const PartitionNode r = recursive_partition(decompose({6, 0}), std::vector<Int>{3});
        check_tree(ck, r, "6 by 3");
        ck.expect(r.children.size() == 9 && all_children_d2(r, 9),
                  [] { return std::string("6 by 3: expected 9 cosets with d2 = 9"); });
    }
    {
        const PartitionNode p = subgroup_nonprimitive(decompose({6, 12}), 3, 2);
        check_tree(ck, p, "6+12rho by 3");
        ck.expect(p.children.size() == 9 && all_children_d2(p, 9),
                  [] { return std::string("6+12rho by 3: expected 9 cosets with d2 = 9"); });
    }
    {
        const Modulus mod = decompose({-1, 16});
        const PartitionNode p = recursive_partition(mod, std::vector<Int>{7, 13});
        check_tree(ck, p, "-1+16rho by 7, 13");
        ck.expect(p.children.size() == 7 && all_children_d2(p, 7),
                  [] { return std::string("273 chain: level 1 should be 7 subsets with d2 = 7"); });
        const auto& leaf = p.children[0].children[0];
        const std::set<Eisenstein> want{mu_reduce({0, 0}, mod), mu_reduce({91, 0}, mod), mu_reduce({182, 0}, mod)};
        const std::set<Eisenstein> got(leaf.points.begin(), leaf.points.end());
        ck.expect(got == want && leaf.min_d2 == 91,
                  [] { return std::string("273 chain: subset (0,0) is not {0, 91, 182} with d2 = 91"); });
        ck.expect(p.leaf_count() == 91, [] { return std::string("273 chain: expected 91 leaves"); });
    }

    // Sweep: every canonical primitive modulus up to norm 200 with every
    // proper divisor, and nonprimitive moduli t*(m+n*rho) with every c | t.
    std::size_t built = 0, bound_met = 0;
    for_each_norm_bounded(200, [&](const Eisenstein& eta) {
        if (eta != canonical_associate(eta) || norm(eta) < 2)
            return;
        Modulus mod;
        try {
            mod = decompose(eta);
        } catch (const Error&) {
            return;
        }
        const std::string where = str(eta);
        if (mod.t == 1) {
            for (Int c = 2; c < mod.size(); ++c)
                if (mod.size() % c == 0) {
                    const PartitionNode p = subgroup_primitive(mod, c, mod.size() / c);
                    check_tree(ck, p, where + " by " + std::to_string(c));
                    ++built;
                    bound_met += p.children[0].min_d2 && *p.children[0].min_d2 >= c ? 1 : 0;
                }
        } else {
            for (Int c = 2; c <= mod.t; ++c)
                if (mod.t % c == 0) {
                    const PartitionNode p = subgroup_nonprimitive(mod, c, mod.t / c);
                    check_tree(ck, p, where + " by " + std::to_string(c));
                    ++built;
                    bound_met += p.children[0].min_d2 && *p.children[0].min_d2 >= c * c ? 1 : 0;
                }
        }
    });
    ck.note("sweep built " + std::to_string(built) + " partitions; " + std::to_string(bound_met) +
            " reach the c (or c^2) distance bound");
    return ck.take();
}

SuiteReport mannheim_oracle_suite(Int max_norm)
{
    Checker ck("mannheim-oracle");
    const Int r = static_cast<Int>(std::sqrt(static_cast<double>(max_norm))) + 1;
    std::size_t moduli = 0;
    for (Int a = -r; a <= r; ++a)
        for (Int b = -r; b <= r; ++b) {
            const Gaussian eta{a, b};
            const Int n = g_norm(eta);
            if (n < 1 || n > max_norm)
                continue;
            ++moduli;
            for (const auto& g : g_residue_system(eta)) {
                const Gaussian theta = g_mod_reduce(g, eta);
                ck.expect(mannheim_weight(theta, eta) == mannheim_weight_window(theta, eta, 3), [&] {
                    return "Mannheim weight of " + to_string(theta) + " mod " + to_string(eta) + " disagrees with window";
                });
            }
        }
    ck.note(std::to_string(moduli) + " Gaussian moduli checked");
    return ck.take();
}

SuiteReport table5_suite()
{
    Checker ck("table5");
    static const std::array<const char*, 6> cols{"E_G", "E_E", "E2_G", "E2_E", "EM_G", "EHex_E"};
    const auto& want = golden::table_energy();
    const auto pairs = builtin_pairs();
    const auto rows = compare_table(pairs);
    ck.expect(rows.size() == want.size(), [] { return std::string("row count differs"); });
    std::size_t cells = 0, matched = 0;
    for (std::size_t i = 0; i < rows.size() && i < want.size(); ++i) {
        const auto& r = rows[i];
        ck.expect(r.size == want[i].size, [&] { return "size differs in row " + std::to_string(i); });
        for (std::size_t k = 0; k < 6; ++k) {
            ++cells;
            const bool ok = r.hundredths[k] == want[i].hundredths[k];
            matched += ok ? 1 : 0;
            const auto msg = [&] {
                return "row " + to_string(r.gaussian) + "/" + to_string(r.eisenstein) + " column " + cols[k] + ": got " +
                       format_hundredths(r.hundredths[k]) + ", table has " + format_hundredths(want[i].hundredths[k]);
            };
            if (!ck.expect(ok, msg))
                ck.note(msg());
        }
        // E <= E_Hex <= E^2 on the Eisenstein side; Eisenstein never worse.
        ck.expect(r.values[1] <= r.values[5] + 1e-12 && r.values[5] <= r.values[3] + 1e-12,
                  [&] { return "E <= EHex <= E2 fails for " + to_string(r.eisenstein); });
        ck.expect(r.values[1] <= r.values[0] && r.values[3] <= r.values[2] && r.values[5] <= r.values[4],
                  [&] { return "Eisenstein energy exceeds Gaussian for size " + std::to_string(r.size); });
    }
    ck.note(std::to_string(matched) + " of " + std::to_string(cells) + " cells match");
    return ck.take();
}

SuiteReport residue_tables_suite()
{
    Checker ck("residue-tables");
    const auto check = [&](const Eisenstein& eta, const std::vector<golden::ResidueRow>& rows) {
        const ResidueSystem rs = residue_system(decompose(eta));
        ck.expect(rs.size() == rows.size(), [&] { return "row count differs for " + str(eta); });
        for (std::size_t i = 0; i < rows.size() && i < rs.size(); ++i)
            ck.expect(rs.r_points[i] == rows[i].grid && rs.e_points[i] == rows[i].voronoi, [&] {
                return "mod " + str(eta) + " row " + std::to_string(i) + ": got " + str(rs.r_points[i]) + " -> " +
                       str(rs.e_points[i]) + ", table has " + str(rows[i].grid) + " -> " + str(rows[i].voronoi);
            });
    };
    check({6, 0}, golden::table_e6());
    check({6, 12}, golden::table_e6_12rho());
    check({-6, 5}, golden::table_e91());
    return ck.take();
}

SuiteReport fields_suite(std::size_t samples, std::uint64_t seed)
{
    Checker ck("fields");
    const Eisenstein one{1, 0}, zero{0, 0}, rho{0, 1};

    const ExtensionField f16({2, 0}, {rho, one, one});
    const auto elems = f16.elements();
    const std::set<ExtensionField::Elem> distinct(elems.begin(), elems.end());
    ck.expect(f16.order() == 16 && distinct.size() == 16, [] { return std::string("R_2[X]/<X^2+X+rho> is not 16 elements"); });
    const auto x = f16.generator_x();
    ck.expect(f16.mul(x, x) == f16.add(x, f16.embed(rho)), [] { return std::string("alpha^2 != alpha + rho"); });
    const GroupOrderReport g16 = mult_group_order_check(f16);
    ck.expect(g16.group_order == 15 && g16.orders_divide && g16.generator.has_value(),
              [] { return std::string("multiplicative group of the 16-element field is not cyclic of order 15"); });

    // Every nonzero element is invertible; axioms on random triples.
    for (const auto& a : elems)
        if (!f16.is_zero(a))
            ck.expect(f16.mul(a, f16.inverse(a)) == f16.one(), [&] { return "no inverse for " + to_string(a); });
    std::mt19937_64 rng(seed);
    const auto pick = [&] { return elems[static_cast<std::size_t>(draw(rng, 0, 15))]; };
    for (std::size_t s = 0; s < samples; ++s) {
        const auto a = pick(), b = pick(), c = pick();
        ck.expect(f16.mul(a, f16.add(b, c)) == f16.add(f16.mul(a, b), f16.mul(a, c)),
                  [&] { return "distributivity fails at " + to_string(a) + ", " + to_string(b) + ", " + to_string(c); });
        ck.expect(f16.mul(f16.mul(a, b), c) == f16.mul(a, f16.mul(b, c)),
                  [&] { return "associativity fails at " + to_string(a); });
        ck.expect(f16.mul(a, b) == f16.mul(b, a), [&] { return "commutativity fails at " + to_string(a); });
    }

    const ExtensionField f3({1, -1}, {zero, one});
    const GroupOrderReport g3 = mult_group_order_check(f3);
    ck.expect(f3.order() == 3 && g3.group_order == 2 && g3.generator.has_value(),
              [] { return std::string("R_{1-rho} is not a 3-element field"); });
    const ExtensionField f4({2, 0}, {zero, one});
    ck.expect(mult_group_order_check(f4).group_order == 3, [] { return std::string("R_2 group order is not 3"); });

    // X^3 - X - 1 has no root mod 1-rho, so this is a field of 27 elements.
    const ExtensionField f27({1, -1}, {-one, -one, zero, one});
    const GroupOrderReport g27 = mult_group_order_check(f27);
    ck.expect(g27.group_order == 26 && g27.orders_divide && g27.generator.has_value(),
              [] { return std::string("27-element field group is not cyclic of order 26"); });

    bool rejected = false;
    try {
        ExtensionField bad({2, 0}, {zero, zero, one});
    } catch (const Error& e) {
        rejected = e.code() == Errc::ReduciblePolynomial;
    }
    ck.expect(rejected, [] { return std::string("X^2 over R_2 was not rejected"); });
    return ck.take();
}

SuiteReport run_suite(std::string_view name, std::size_t samples, std::uint64_t seed)
{
    if (name == "relnormhex")
        return relnormhex_suite(samples, seed);
    if (name == "roundtrip")
        return roundtrip_suite(samples, seed);
    if (name == "primitivity")
        return primitivity_suite();
    if (name == "partition")
        return partition_suite();
    if (name == "mannheim-oracle")
        return mannheim_oracle_suite();
    if (name == "table5")
        return table5_suite();
    if (name == "residue-tables")
        return residue_tables_suite();
    if (name == "fields")
        return fields_suite(samples, seed);
    throw Error(Errc::InvalidArgument, "unknown suite '" + std::string(name) + "'");
}

} // namespace eisring::verify
