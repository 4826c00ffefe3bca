#pragma once

// Seeded property suites. Each suite stops recording after the first
// counterexample but keeps counting checks.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "eisring/eisenstein.hpp"

namespace eisring::verify {

struct SuiteReport {
    std::string suite;
    bool passed = true;
    std::size_t checks = 0;
    std::string failure; // first counterexample
    std::vector<std::string> notes;
};

/// relnormhex, roundtrip, primitivity, partition, mannheim-oracle, table5,
/// residue-tables, fields.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite.
SuiteReport run_suite(std::string_view name, std::size_t samples, std::uint64_t seed);

/// Uniform draw from [lo, hi] that does not depend on the standard
/// library's distribution implementation.
Int draw(std::mt19937_64& rng, Int lo, Int hi);

/// Records the first failure; later failures only bump the count.
class Checker {
public:
    explicit Checker(std::string suite) { report_.suite = std::move(suite); }

    bool expect(bool ok, const std::function<std::string()>& describe)
    {
        ++report_.checks;
        if (!ok && report_.passed) {
            report_.passed = false;
            report_.failure = describe();
        }
        return ok;
    }
    void note(std::string text) { report_.notes.push_back(std::move(text)); }
    bool passed() const { return report_.passed; }
    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

// Individual suites, exposed for the acceptance runner.
SuiteReport relnormhex_suite(std::size_t samples, std::uint64_t seed);
SuiteReport roundtrip_suite(std::size_t samples, std::uint64_t seed);
SuiteReport primitivity_suite();
SuiteReport partition_suite();
SuiteReport mannheim_oracle_suite(Int max_norm = 400);
SuiteReport table5_suite();
SuiteReport residue_tables_suite();
SuiteReport fields_suite(std::size_t samples, std::uint64_t seed);

} // namespace eisring::verify
