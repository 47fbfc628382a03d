#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pidpair/matrix_io.hpp"

namespace pidpair {

struct SelftestOptions {
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    RingKind ring = RingKind::Integer;
    std::size_t max_dim = 5;
    long max_entry = 10;
    /// Degree bound for polyq entries.
    int max_degree = 2;
    std::size_t scramble_steps = 20;
};

enum class Suite {
    SnfOracle,
    ClosureLaws,
    PureSumDecomposition,
    CanonicalStructure,
    CanonicalInvariance,
    QuotientCharacterization,
    DecisionSoundness,
};

const std::vector<Suite>& all_suites();
std::string_view suite_name(Suite s);

struct TrialFailure {
    std::size_t trial = 0;
    std::vector<std::string> properties;
    /// `[name]` headed matrix blocks, each loadable as a matrix file.
    std::string instance;
};

struct SuiteResult {
    Suite suite{};
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::vector<TrialFailure> failures;

    bool ok() const { return passed == trials; }
};

/// Trial k of a suite draws from its own generator seeded by (seed, suite,
/// k), so a single failing trial can be rerun without the ones before it.
SuiteResult run_suite(Suite s, const SelftestOptions& opt);
SuiteResult run_suite_trial(Suite s, const SelftestOptions& opt, std::size_t trial);

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt);

/// Deterministic text report: header, one count line per suite, then every
/// failing instance.
std::string format_report(const SelftestOptions& opt, const std::vector<SuiteResult>& results);

} // namespace pidpair
