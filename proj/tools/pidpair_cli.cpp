#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "pidpair/matrix_io.hpp"
#include "pidpair/pairs.hpp"
#include "pidpair/selftest.hpp"

using namespace pidpair;

namespace {

// Exit codes are part of the command-line contract.
constexpr int kOk = 0;
constexpr int kNegative = 1; // inequivalent, or a selftest property failed
constexpr int kParse = 2;
constexpr int kHypothesis = 3;

struct RingMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
int with_ring(RingKind k, F&& f) {
    if (k == RingKind::Integer)
        return f.template operator()<Integer>();
    return f.template operator()<Polynomial>();
}

std::vector<RawMatrix> load_same_ring(const std::vector<std::string>& paths) {
    std::vector<RawMatrix> out;
    for (const auto& p : paths) {
        out.push_back(read_raw_matrix_file(p));
        if (out.back().ring != out.front().ring)
            throw RingMismatch(p + ": ring " + std::string(ring_name(out.back().ring)) + " does not match ring " +
                               std::string(ring_name(out.front().ring)) + " of " + paths.front());
    }
    return out;
}

template <EuclideanRing R>
void print_block(const std::string& name, const Matrix<R>& m) {
    std::cout << "[" << name << "]\n" << format_matrix(m);
}

template <EuclideanRing R>
void print_list(const std::string& key, const std::vector<R>& xs) {
    std::cout << key << ":";
    if (!xs.empty())
        std::cout << " " << format_list(xs);
    std::cout << "\n";
}

template <EuclideanRing R>
int cmd_snf(const RawMatrix& raw) {
    auto m = parse_entries<R>(raw);
    auto d = snf(m);
    std::cout << "ring: " << ring_tag_of<R>() << "\n";
    std::cout << "rank: " << d.rank() << "\n";
    print_list("invariants", d.invariant_factors);
    print_block("Q", d.Q);
    print_block("S", d.S);
    print_block("V", d.V);
    return kOk;
}

template <EuclideanRing R>
int cmd_hnf(const RawMatrix& raw) {
    auto m = parse_entries<R>(raw);
    auto h = hnf(m);
    std::cout << "ring: " << ring_tag_of<R>() << "\n";
    std::cout << "rank: " << h.rank() << "\n";
    std::cout << "pivot-rows:";
    for (auto r : h.pivot_rows)
        std::cout << " " << r;
    std::cout << "\n";
    print_list("invariants", snf(m).invariant_factors);
    print_block("H", h.H);
    print_block("U", h.U);
    return kOk;
}

template <EuclideanRing R>
int cmd_closure(const RawMatrix& raw) {
    auto m = parse_entries<R>(raw);
    auto d = snf(m);
    auto span = Submodule<R>::from_generators(m.rows(), m);
    // HNF-reduced basis; the leading rank(M) columns of Q^-1 span the same module
    auto c = Submodule<R>::from_generators(m.rows(), closure(span).basis());
    std::cout << "ring: " << ring_tag_of<R>() << "\n";
    std::cout << "rank: " << c.rank() << "\n";
    std::cout << "pure: " << (is_pure(span) ? "yes" : "no") << "\n";
    print_list("invariants", d.invariant_factors);
    print_block("basis", c.basis());
    print_block("completion", d.Q_inv);
    return kOk;
}

template <EuclideanRing R>
int cmd_pair_canon(const std::vector<RawMatrix>& raw) {
    auto x1 = parse_entries<R>(raw[0]);
    auto x2 = parse_entries<R>(raw[1]);
    auto c = canonical_pair(x1, x2);
    std::cout << "ring: " << ring_tag_of<R>() << "\n";
    std::cout << "n: " << c.n << "\n";
    std::cout << "m1: " << c.m1 << "\n";
    std::cout << "m2: " << c.m2 << "\n";
    std::cout << "t: " << c.t << "\n";
    print_list("alpha", c.alphas);
    print_list("beta", c.betas);
    print_block("Y1", c.Y1);
    print_block("Y2", c.Y2);
    print_block("Q", c.Q);
    print_block("V1", c.V1);
    print_block("V2", c.V2);
    return kOk;
}

template <EuclideanRing R>
void print_summary(const std::string& label, const PairInvariants<R>& inv, const PairCanonicalForm<R>& c) {
    std::cout << label << ".n: " << inv.n << "\n";
    std::cout << label << ".rank: " << inv.rank_sum << "\n";
    print_list(label + ".q1.torsion", inv.q1.torsion);
    std::cout << label << ".q1.free: " << inv.q1.free_rank << "\n";
    print_list(label + ".q2.torsion", inv.q2.torsion);
    std::cout << label << ".q2.free: " << inv.q2.free_rank << "\n";
    std::cout << label << ".t: " << c.t << "\n";
    print_list(label + ".alpha", c.alphas);
    print_list(label + ".beta", c.betas);
}

template <EuclideanRing R>
int cmd_pair_equiv(const std::vector<RawMatrix>& raw) {
    MatrixPair<R> a{parse_entries<R>(raw[0]), parse_entries<R>(raw[1])};
    MatrixPair<R> b{parse_entries<R>(raw[2]), parse_entries<R>(raw[3])};
    auto rep = decide_equivalence(a, b);
    std::cout << (rep.equivalent ? "equivalent" : "inequivalent") << "\n";
    print_summary("A", rep.invariants_a, rep.canonical_a);
    print_summary("B", rep.invariants_b, rep.canonical_b);
    return rep.equivalent ? kOk : kNegative;
}

int cmd_selftest(SelftestOptions opt, const std::vector<std::string>& suites, long only_trial) {
    std::vector<Suite> chosen;
    for (Suite s : all_suites())
        if (suites.empty() || std::find(suites.begin(), suites.end(), suite_name(s)) != suites.end())
            chosen.push_back(s);
    std::vector<SuiteResult> results;
    for (Suite s : chosen) {
        if (only_trial >= 0) {
            auto r = run_suite_trial(s, opt, static_cast<std::size_t>(only_trial));
            // keep the real trial index in the report
            for (auto& f : r.failures)
                f.trial = static_cast<std::size_t>(only_trial);
            results.push_back(std::move(r));
        } else {
            results.push_back(run_suite(s, opt));
        }
    }
    if (only_trial >= 0)
        opt.trials = 1;
    std::cout << format_report(opt, results);
    for (const auto& r : results)
        if (!r.ok())
            return kNegative;
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Smith/Hermite normal forms, submodule closure and canonical matrix pairs over Z and Q[x]"};
    app.require_subcommand(1);

    std::string file;
    auto* snf_cmd = app.add_subcommand("snf", "Smith normal form Q*M*V = S with witnesses");
    snf_cmd->add_option("file", file, "matrix file")->required();
    auto* hnf_cmd = app.add_subcommand("hnf", "column Hermite normal form M*U = H");
    hnf_cmd->add_option("file", file, "matrix file")->required();
    auto* closure_cmd = app.add_subcommand("closure", "pure closure of the column span");
    closure_cmd->add_option("file", file, "matrix file")->required();

    std::vector<std::string> files;
    auto* canon_cmd = app.add_subcommand("pair-canon", "canonical form of the pair (X1, X2)");
    canon_cmd->add_option("files", files, "X1 and X2 matrix files")->required()->expected(2);
    auto* equiv_cmd = app.add_subcommand("pair-equiv", "decide whether (X1, X2) and (X3, X4) are equivalent");
    equiv_cmd->add_option("files", files, "X1 X2 X3 X4 matrix files")->required()->expected(4);

    SelftestOptions opt;
    std::string ring = "int";
    std::vector<std::string> suites;
    long only_trial = -1;
    auto* self_cmd = app.add_subcommand("selftest", "randomized property suites");
    self_cmd->add_option("--trials", opt.trials, "trials per suite")->capture_default_str();
    self_cmd->add_option("--seed", opt.seed, "base seed")->capture_default_str();
    self_cmd->add_option("--ring", ring, "int or polyq")->check(CLI::IsMember({"int", "polyq"}))->capture_default_str();
    self_cmd->add_option("--max-dim", opt.max_dim, "largest matrix dimension")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    self_cmd->add_option("--max-entry", opt.max_entry, "largest |entry| (polyq: |coefficient|)")
        ->check(CLI::Range(0L, 1000000L))
        ->capture_default_str();
    self_cmd->add_option("--max-degree", opt.max_degree, "largest polyq entry degree")
        ->check(CLI::Range(0, 16))
        ->capture_default_str();
    self_cmd->add_option("--steps", opt.scramble_steps, "elementary steps per random unimodular matrix")
        ->capture_default_str();
    std::vector<std::string> names;
    for (Suite s : all_suites())
        names.emplace_back(suite_name(s));
    self_cmd->add_option("--suite", suites, "run only these suites")->check(CLI::IsMember(names));
    self_cmd->add_option("--trial", only_trial, "rerun a single trial index")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    try {
        if (*snf_cmd || *hnf_cmd || *closure_cmd) {
            RawMatrix raw = read_raw_matrix_file(file);
            return with_ring(raw.ring, [&]<class R>() {
                if (*snf_cmd)
                    return cmd_snf<R>(raw);
                if (*hnf_cmd)
                    return cmd_hnf<R>(raw);
                return cmd_closure<R>(raw);
            });
        }
        if (*canon_cmd) {
            auto raw = load_same_ring(files);
            return with_ring(raw[0].ring, [&]<class R>() { return cmd_pair_canon<R>(raw); });
        }
        if (*equiv_cmd) {
            auto raw = load_same_ring(files);
            return with_ring(raw[0].ring, [&]<class R>() { return cmd_pair_equiv<R>(raw); });
        }
        opt.ring = ring == "int" ? RingKind::Integer : RingKind::PolyQ;
        return cmd_selftest(opt, suites, only_trial);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const RingMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const HypothesisViolation& e) {
        std::cerr << e.what() << "\n";
        return kHypothesis;
    } catch (const DimensionMismatch& e) {
        std::cerr << "hypothesis failed: " << e.what() << "\n";
        return kHypothesis;
    }
}
