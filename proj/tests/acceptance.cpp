// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Random instances come from the selftest suites with
// fixed seeds, so every line is reproducible with the CLI.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pidpair/oracles.hpp"
#include "pidpair/pairs.hpp"
#include "pidpair/selftest.hpp"

using namespace pidpair;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct SuiteRun {
    Suite suite;
    SelftestOptions opt;
};

SelftestOptions int_opts(std::size_t trials, std::uint64_t seed) {
    SelftestOptions o;
    o.trials = trials;
    o.seed = seed;
    o.ring = RingKind::Integer;
    o.max_dim = 5;
    o.max_entry = 10;
    o.scramble_steps = 20;
    return o;
}

SelftestOptions poly_opts(std::size_t trials, std::uint64_t seed) {
    SelftestOptions o;
    o.trials = trials;
    o.seed = seed;
    o.ring = RingKind::PolyQ;
    o.max_dim = 3;
    o.max_entry = 10;
    o.max_degree = 2;
    o.scramble_steps = 20;
    return o;
}

/// All runs must pass every trial; the detail lists per-run counts and the
/// first violated property of any failing trial.
Outcome run_all(const std::vector<SuiteRun>& runs) {
    Outcome out{true, {}};
    std::string first_failure;
    for (const auto& r : runs) {
        auto res = run_suite(r.suite, r.opt);
        if (!out.detail.empty())
            out.detail += ", ";
        out.detail += std::string(suite_name(r.suite)) + "[" + std::string(ring_name(r.opt.ring)) +
                      "] " + std::to_string(res.passed) + "/" + std::to_string(res.trials);
        if (!res.ok()) {
            out.pass = false;
            if (first_failure.empty() && !res.failures.empty())
                first_failure = std::string(suite_name(r.suite)) + " trial " +
                                std::to_string(res.failures.front().trial) + ": " +
                                res.failures.front().properties.front();
        }
    }
    if (!first_failure.empty())
        out.detail += "; first failure: " + first_failure;
    return out;
}

std::string list(const std::vector<Integer>& xs) {
    return format_list(xs);
}

Outcome worked_values() {
    using IM = Matrix<Integer>;
    Outcome out{true, {}};
    auto expect_pair = [&](const char* name, const IM& x1, const IM& x2, std::size_t t,
                           const std::vector<Integer>& alpha, const std::vector<Integer>& beta) {
        auto c = canonical_pair(x1, x2);
        const bool ok = c.t == t && c.alphas == alpha && c.betas == beta && c.Q * x1 * c.V1 == c.Y1 &&
                        c.Q * x2 * c.V2 == c.Y2;
        // independent route: torsion of X_i / (X1 n X2)
        auto inv = pair_invariants(x1, x2);
        std::vector<Integer> nonunit_beta, nonunit_alpha;
        for (std::size_t k = 0; k < alpha.size(); ++k) {
            if (!is_unit(beta[k]))
                nonunit_beta.push_back(beta[k]);
            if (!is_unit(alpha[alpha.size() - 1 - k]))
                nonunit_alpha.push_back(alpha[alpha.size() - 1 - k]);
        }
        const bool oracle_ok = inv.q1.torsion == nonunit_beta && inv.q2.torsion == nonunit_alpha;
        if (!out.detail.empty())
            out.detail += "; ";
        out.detail += std::string(name) + ": t=" + std::to_string(c.t) + " alpha=(" + list(c.alphas) +
                      ") beta=(" + list(c.betas) + ")";
        out.pass = out.pass && ok && oracle_ok;
    };
    expect_pair("diag(2,1), diag(3,4)", IM{{2, 0}, {0, 1}}, IM{{3, 0}, {0, 4}}, 2, {2, 1}, {1, 12});
    expect_pair("(2,0)^T, (3,0)^T", IM{{2}, {0}}, IM{{3}, {0}}, 1, {2}, {3});
    return out;
}

} // namespace

int main() {
    using Clock = std::chrono::steady_clock;
    const auto start = Clock::now();

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"SNF oracle equivalence (200 int matrices, dims <= 5x5, entries in [-10,10])",
         [] { return run_all({{Suite::SnfOracle, int_opts(200, 11)}}); }},
        {"canonical-form invariance (100 trials, 20-step scrambles)",
         [] { return run_all({{Suite::CanonicalInvariance, int_opts(100, 12)}}); }},
        {"reconstruction and structure (int and polyq, 50 trials each)",
         [] {
             return run_all({{Suite::CanonicalStructure, int_opts(50, 13)},
                             {Suite::CanonicalStructure, poly_opts(50, 13)}});
         }},
        {"worked values", worked_values},
        {"quotient characterization (100 trials)",
         [] { return run_all({{Suite::QuotientCharacterization, int_opts(100, 14)}}); }},
        {"closure laws (100 pairs each law, 100 idempotence checks)",
         [] { return run_all({{Suite::ClosureLaws, int_opts(100, 15)}}); }},
        {"pure-sum decomposition (100 pairs)",
         [] { return run_all({{Suite::PureSumDecomposition, int_opts(100, 16)}}); }},
        {"decision procedure (100 equivalent + 100 inequivalent, routes agree)",
         [] { return run_all({{Suite::DecisionSoundness, int_opts(100, 17)}}); }},
        {"polynomial-ring smoke suite (20 trials per suite over Q[x], degree <= 2)",
         [] {
             std::vector<SuiteRun> runs;
             for (Suite s : all_suites())
                 runs.push_back({s, poly_opts(20, 18)});
             return run_all(runs);
         }},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
        std::printf("%s  %s  (%.2fs)\n      %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    const double total = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = total < 60.0;
    std::printf("%s  total runtime under 60 s  (%.2fs)\n", in_time ? "PASS" : "FAIL", total);
    all = all && in_time;
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
