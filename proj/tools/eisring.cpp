// eisring: residue tables, reductions, partitions, energy tables and
// verification suites over the Eisenstein integers.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 domain error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "eisring/codes_fields.hpp"
#include "eisring/constellation.hpp"
#include "eisring/golden.hpp"
#include "eisring/io.hpp"
#include "eisring/partition.hpp"
#include "eisring/verify.hpp"

using namespace eisring;

namespace {

constexpr int exit_ok = 0, exit_verify = 1, exit_usage = 2, exit_domain = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "text";
    std::string path;

    void add_to(CLI::App* cmd, std::vector<std::string> formats)
    {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(formats)));
        cmd->add_option("--out", path, "Write to a file instead of stdout");
    }

    void write(const std::string& text) const
    {
        if (path.empty() || path == "-") {
            std::cout << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f)
            throw UsageError("cannot open " + path);
        f << text;
    }
};

Eisenstein eisenstein_arg(const std::string& s)
{
    try {
        return parse_eisenstein_pair(s);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

std::vector<ComparisonPair> read_pairs(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw UsageError("cannot open " + path);
    std::vector<ComparisonPair> out;
    std::string line;
    while (std::getline(f, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        std::istringstream ls(line);
        std::string g, e;
        if (!(ls >> g))
            continue;
        if (!(ls >> e))
            throw UsageError("pairs line needs two moduli: '" + line + "'");
        try {
            out.push_back({parse_gaussian_pair(g), parse_eisenstein_pair(e)});
        } catch (const Error& err) {
            throw UsageError(err.what());
        }
    }
    return out;
}

// Every row whose pair appears in the published table must match it.
bool check_against_table(const std::vector<ComparisonRow>& rows)
{
    bool ok = true;
    for (const auto& r : rows)
        for (const auto& g : golden::table_energy()) {
            if (g.gaussian != r.gaussian || g.eisenstein != r.eisenstein)
                continue;
            for (std::size_t k = 0; k < 6; ++k)
                if (g.hundredths[k] != r.hundredths[k]) {
                    std::cerr << "mismatch " << to_string(r.gaussian) << " / " << to_string(r.eisenstein) << " column "
                              << k << ": " << format_hundredths(r.hundredths[k]) << " vs "
                              << format_hundredths(g.hundredths[k]) << '\n';
                    ok = false;
                }
        }
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Eisenstein integer residue rings, constellations and set partitioning"};
    app.require_subcommand(1);

    // divmod
    std::string alpha_s, modulus_s;
    auto* divmod_cmd = app.add_subcommand("divmod", "Voronoi division and grid lift");
    divmod_cmd->add_option("--alpha", alpha_s, "Dividend a,b")->required();
    divmod_cmd->add_option("--modulus", modulus_s, "Modulus a,b")->required();

    // residue-table
    Output residue_out;
    auto* residue_cmd = app.add_subcommand("residue-table", "Grid to Voronoi correspondence");
    residue_cmd->add_option("--modulus", modulus_s, "Modulus a,b")->required();
    residue_out.add_to(residue_cmd, {"text", "csv", "json"});

    // energy-table
    Output energy_out;
    bool builtin = false, check = false;
    std::string pairs_path;
    auto* energy_cmd = app.add_subcommand("energy-table", "Gaussian versus Eisenstein average energies");
    auto* builtin_opt = energy_cmd->add_flag("--builtin", builtin, "Use the 23 published pairs");
    energy_cmd->add_option("--pairs", pairs_path, "File of 'ga,gb ea,eb' lines")->excludes(builtin_opt);
    energy_cmd->add_flag("--check", check, "Compare with the published values");
    energy_out.add_to(energy_cmd, {"text", "csv", "json"});

    // partition
    Output partition_out;
    std::vector<Int> factors;
    auto* partition_cmd = app.add_subcommand("partition", "Subgroup coset partition chain");
    partition_cmd->add_option("--modulus", modulus_s, "Modulus a,b")->required();
    partition_cmd->add_option("--factors", factors, "Refinement factors c1,c2,...")->delimiter(',');
    partition_out.add_to(partition_cmd, {"text", "json", "svg"});

    // constellation
    Output constellation_out;
    std::string kind = "eisenstein";
    auto* constellation_cmd = app.add_subcommand("constellation", "Constellation points and energies");
    constellation_cmd->add_option("--modulus", modulus_s, "Modulus a,b")->required();
    constellation_cmd->add_option("--kind", kind, "eisenstein or gaussian")
        ->check(CLI::IsMember({"eisenstein", "gaussian"}));
    constellation_out.add_to(constellation_cmd, {"text", "csv", "json", "svg"});

    // span
    Output span_out;
    std::vector<std::string> generators;
    std::size_t length = 1;
    auto* span_cmd = app.add_subcommand("span", "Materialize a linear code over E_eta");
    span_cmd->add_option("--modulus", modulus_s, "Alphabet modulus a,b")->required();
    span_cmd->add_option("--length", length, "Code length")->required()->check(CLI::PositiveNumber);
    span_cmd->add_option("--generator", generators, "Generator 'a,b;c,d;...' (repeatable)");
    span_out.add_to(span_cmd, {"text", "csv"});

    // verify
    std::string suite;
    std::size_t samples = 10'000;
    std::uint64_t seed = 1;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite");
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.push_back("all");
    verify_cmd->add_option("--suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suite_choices));
    verify_cmd->add_option("--samples", samples, "Random samples per suite");
    verify_cmd->add_option("--seed", seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (divmod_cmd->parsed()) {
            const Eisenstein alpha = eisenstein_arg(alpha_s), eta = eisenstein_arg(modulus_s);
            const DivMod qr = euclid_divmod(alpha, eta);
            const Eisenstein lift = pi_lift(qr.remainder, decompose(eta));
            std::cout << "q=" << qr.quotient.a << ',' << qr.quotient.b << " r=" << qr.remainder.a << ','
                      << qr.remainder.b << " lift=" << lift.a << ',' << lift.b << '\n';
        } else if (residue_cmd->parsed()) {
            const ResidueSystem rs = residue_system(decompose(eisenstein_arg(modulus_s)));
            residue_out.write(residue_out.format == "csv"    ? io::residue_table_csv(rs)
                              : residue_out.format == "json" ? io::residue_table_json(rs)
                                                             : io::residue_table_text(rs));
        } else if (energy_cmd->parsed()) {
            if (!builtin && pairs_path.empty())
                throw UsageError("energy-table needs --builtin or --pairs");
            const auto pairs = builtin ? builtin_pairs() : read_pairs(pairs_path);
            const auto rows = compare_table(pairs);
            energy_out.write(energy_out.format == "csv"    ? io::energy_table_csv(rows)
                             : energy_out.format == "json" ? io::energy_table_json(rows)
                                                           : io::energy_table_text(rows));
            if (check && !check_against_table(rows))
                return exit_verify;
        } else if (partition_cmd->parsed()) {
            const Modulus mod = decompose(eisenstein_arg(modulus_s));
            const PartitionNode root = recursive_partition(mod, factors);
            partition_out.write(partition_out.format == "json"  ? io::partition_json(root, mod)
                                : partition_out.format == "svg" ? io::partition_svg(root)
                                                                : io::partition_text(root));
        } else if (constellation_cmd->parsed()) {
            const auto [a, b] = parse_int_pair(modulus_s);
            const Constellation c =
                kind == "gaussian" ? build_gaussian(Gaussian{a, b}) : build_eisenstein(Eisenstein{a, b});
            const std::string& f = constellation_out.format;
            if (f == "csv")
                constellation_out.write(io::constellation_csv(c));
            else if (f == "svg")
                constellation_out.write(io::constellation_svg(c));
            else if (f == "json")
                constellation_out.write(io::constellation_json(c, energy_report(c)));
            else
                constellation_out.write(io::constellation_text(c, energy_report(c)));
        } else if (span_cmd->parsed()) {
            const Modulus mod = decompose(eisenstein_arg(modulus_s));
            std::vector<Word> gens;
            for (const auto& g : generators) {
                Word w;
                std::istringstream parts(g);
                std::string comp;
                while (std::getline(parts, comp, ';'))
                    w.push_back(eisenstein_arg(comp));
                gens.push_back(std::move(w));
            }
            const LinearCode code = span(mod, length, gens);
            if (span_out.format == "csv") {
                span_out.write(io::codewords_csv(code.codewords));
            } else {
                std::ostringstream os;
                os << code.codewords.size() << " codewords, group code "
                   << (is_group_code(code.codewords, mod) ? "yes" : "no");
                if (code.codewords.size() >= 2)
                    os << ", d_hex " << code_min_distance(code.codewords, mod, CodeMetric::Hex) << ", d2 "
                       << code_min_distance(code.codewords, mod, CodeMetric::SqEuclid);
                os << '\n';
                span_out.write(os.str());
            }
        } else if (verify_cmd->parsed()) {
            const std::vector<std::string> names =
                suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
            bool all_ok = true;
            for (const auto& name : names) {
                const verify::SuiteReport r = verify::run_suite(name, samples, seed);
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << " (" << r.checks << " checks)\n";
                for (const auto& n : r.notes)
                    std::cout << "  " << n << '\n';
                if (!r.passed)
                    std::cout << "  first counterexample: " << r.failure << '\n';
                all_ok = all_ok && r.passed;
            }
            return all_ok ? exit_ok : exit_verify;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == Errc::InvalidArgument ? exit_usage : exit_domain;
    }
    return exit_ok;
}
