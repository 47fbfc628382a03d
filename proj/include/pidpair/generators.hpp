#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pidpair/matrix.hpp"
#include "pidpair/normal_forms.hpp"
#include "pidpair/pairs.hpp"
#include "pidpair/random.hpp"
#include "pidpair/submodule.hpp"

// Random instances for property checks: submodules, pairs whose sum is pure,
// and pairs whose canonical data differs from a given one in exactly one
// alpha or beta.

namespace pidpair {

struct InstanceLimits {
    std::size_t max_dim = 5;
    EntryBounds entries{};
    /// Elementary steps for the random unimodular scrambles.
    std::size_t scramble_steps = 20;
};

template <EuclideanRing R>
Submodule<R> random_submodule(Rng& rng, std::size_t n, const InstanceLimits& lim) {
    auto gens = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) + 1));
    Matrix<R> g = random_matrix<R>(rng, n, gens, lim.entries);
    if (gens > 1 && draw(rng, 0, 2) == 0) {
        // force a dependency so low-rank spans show up too
        auto inner = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(gens) - 1));
        g = random_matrix<R>(rng, n, inner, lim.entries) *
            random_matrix<R>(rng, inner, gens, EntryBounds{2, lim.entries.max_degree > 0 ? 1 : 0});
    }
    return Submodule<R>::from_generators(n, g);
}

/// A pair (X1, X2) of full-column-rank matrices with pure column sum:
/// X1 = S [A1 0; 0 I; 0 0; 0 0] V1', X2 = S [B1 0; 0 0; 0 I; 0 0] V2' with
/// (A1 B1) left coprime and S, V1', V2' random unimodular.
template <EuclideanRing R>
MatrixPair<R> random_valid_pair(Rng& rng, const InstanceLimits& lim, bool require_overlap = false) {
    for (;;) {
        auto n = static_cast<std::size_t>(draw(rng, require_overlap ? 1 : 0, static_cast<long>(lim.max_dim)));
        auto m1 = static_cast<std::size_t>(draw(rng, require_overlap ? 1 : 0, static_cast<long>(n)));
        auto m2 = static_cast<std::size_t>(draw(rng, require_overlap ? 1 : 0, static_cast<long>(n)));
        std::size_t t_lo = m1 + m2 > n ? m1 + m2 - n : 0;
        if (require_overlap && t_lo == 0)
            t_lo = 1;
        std::size_t t_hi = std::min(m1, m2);
        if (t_lo > t_hi)
            continue;
        auto t = static_cast<std::size_t>(draw(rng, static_cast<long>(t_lo), static_cast<long>(t_hi)));

        std::optional<std::pair<Matrix<R>, Matrix<R>>> core;
        for (int attempt = 0; attempt < 50 && !core; ++attempt) {
            Matrix<R> a = random_matrix<R>(rng, t, t, lim.entries);
            Matrix<R> b = random_matrix<R>(rng, t, t, lim.entries);
            if (rank(a) != t || rank(b) != t || !snf(hcat(a, b)).all_units())
                continue;
            core.emplace(std::move(a), std::move(b));
        }
        if (!core)
            continue;

        Matrix<R> y1(n, m1), y2(n, m2);
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = 0; j < t; ++j) {
                y1(i, j) = core->first(i, j);
                y2(i, j) = core->second(i, j);
            }
        for (std::size_t k = t; k < m1; ++k)
            y1(k, k) = R::one();
        for (std::size_t k = t; k < m2; ++k)
            y2(m1 + k - t, k) = R::one();

        Matrix<R> s = random_unimodular<R>(n, rng, lim.scramble_steps);
        Matrix<R> v1 = random_unimodular<R>(m1, rng, lim.scramble_steps);
        Matrix<R> v2 = random_unimodular<R>(m2, rng, lim.scramble_steps);
        return {s * y1 * v1, s * y2 * v2};
    }
}

/// (Q X1 V1, Q X2 V2) for fresh random unimodular Q, V1, V2.
template <EuclideanRing R>
MatrixPair<R> scramble_pair(Rng& rng, const MatrixPair<R>& p, std::size_t steps) {
    Matrix<R> q = random_unimodular<R>(p.x1.rows(), rng, steps);
    Matrix<R> v1 = random_unimodular<R>(p.x1.cols(), rng, steps);
    Matrix<R> v2 = random_unimodular<R>(p.x2.cols(), rng, steps);
    return {q * p.x1 * v1, q * p.x2 * v2};
}

namespace detail {

inline std::vector<Integer> prime_candidates(const Integer*) {
    return {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
}

inline std::vector<Polynomial> prime_candidates(const Polynomial*) {
    std::vector<Polynomial> out;
    for (long c = 0; c < 12; ++c) {
        out.push_back(Polynomial(std::vector<mpq_class>{mpq_class(-c), mpq_class(1)}));
        out.push_back(Polynomial(std::vector<mpq_class>{mpq_class(c + 1), mpq_class(1)}));
    }
    return out;
}

template <EuclideanRing R>
R prime_coprime_to(const R& x) {
    for (const auto& p : prime_candidates(static_cast<const R*>(nullptr)))
        if (is_unit(gcd(p, x)))
            return p;
    throw InternalError("no prime candidate coprime to " + x.to_string());
}

} // namespace detail

/// Canonical data with exactly one alpha or beta multiplied by a prime,
/// keeping both divisibility chains and the pairwise coprimality intact.
template <EuclideanRing R>
struct PerturbedCanonical {
    std::vector<R> alphas;
    std::vector<R> betas;
    bool perturbed_alpha = false;
};

/// Requires t >= 1.
template <EuclideanRing R>
PerturbedCanonical<R> perturb_canonical(Rng& rng, const PairCanonicalForm<R>& c) {
    if (c.t == 0)
        throw HypothesisViolation("perturbation needs a nonzero intersection rank");
    PerturbedCanonical<R> out{c.alphas, c.betas, draw(rng, 0, 1) == 1};
    if (out.perturbed_alpha) {
        // alpha_1 is the top of its chain; stay coprime to beta_1
        out.alphas.front() = out.alphas.front() * detail::prime_coprime_to(c.betas.front());
    } else {
        out.betas.back() = out.betas.back() * detail::prime_coprime_to(c.alphas.back());
    }
    return out;
}

/// A random representative of the class with the perturbed canonical data.
template <EuclideanRing R>
MatrixPair<R> perturbed_pair(Rng& rng, const PairCanonicalForm<R>& c, std::size_t steps) {
    auto pc = perturb_canonical(rng, c);
    auto [y1, y2] = canonical_matrices<R>(c.n, c.m1, c.m2, pc.alphas, pc.betas);
    return scramble_pair(rng, MatrixPair<R>{std::move(y1), std::move(y2)}, steps);
}

} // namespace pidpair
