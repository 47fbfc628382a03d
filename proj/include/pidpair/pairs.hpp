#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pidpair/errors.hpp"
#include "pidpair/fraction.hpp"
#include "pidpair/matrix.hpp"
#include "pidpair/normal_forms.hpp"
#include "pidpair/random.hpp"
#include "pidpair/ring.hpp"
#include "pidpair/submodule.hpp"

namespace pidpair {

template <EuclideanRing R>
struct PairHypotheses {
    bool x1_full_column_rank = false;
    bool x2_full_column_rank = false;
    /// Every nonzero invariant factor of (X1 X2) is a unit.
    bool sum_pure = false;
    std::size_t sum_rank = 0;
    std::vector<R> sum_invariant_factors;

    bool all_hold() const { return x1_full_column_rank && x2_full_column_rank && sum_pure; }

    /// Description of the first failed hypothesis, empty if all hold.
    std::string first_failure() const {
        if (!x1_full_column_rank)
            return "X1 does not have full column rank";
        if (!x2_full_column_rank)
            return "X2 does not have full column rank";
        if (!sum_pure)
            return "span of (X1 X2) not pure";
        return {};
    }
};

template <EuclideanRing R>
PairHypotheses<R> check_pair_hypotheses(const Matrix<R>& x1, const Matrix<R>& x2) {
    if (x1.rows() != x2.rows())
        throw DimensionMismatch("pair members have " + std::to_string(x1.rows()) + " and " +
                                std::to_string(x2.rows()) + " rows");
    PairHypotheses<R> h;
    h.x1_full_column_rank = rank(x1) == x1.cols();
    h.x2_full_column_rank = rank(x2) == x2.cols();
    auto s = snf(hcat(x1, x2));
    h.sum_rank = s.rank();
    h.sum_pure = s.all_units();
    h.sum_invariant_factors = s.invariant_factors;
    return h;
}

/// Canonical representative of a matrix pair under (X1, X2) -> (Q X1 V1, Q X2 V2).
///
/// Row blocks of Y1 and Y2 have heights t, m1 - t, m2 - t, n - rank(X1 X2):
///
///     Y1 = [A 0; 0 I; 0 0; 0 0],   Y2 = [B 0; 0 0; 0 I; 0 0]
///
/// with A = diag(alphas), B = diag(betas). Only (n, m1, m2, t, alphas,
/// betas) are canonical; Q, V1, V2 are one choice of witnesses.
template <EuclideanRing R>
struct PairCanonicalForm {
    std::size_t n = 0;
    std::size_t m1 = 0;
    std::size_t m2 = 0;
    std::size_t t = 0;
    std::vector<R> alphas; // alpha_t | ... | alpha_1
    std::vector<R> betas;  // beta_1 | ... | beta_t
    Matrix<R> Y1;
    Matrix<R> Y2;
    Matrix<R> Q;
    Matrix<R> V1;
    Matrix<R> V2;

    bool same_invariants(const PairCanonicalForm& o) const {
        return n == o.n && m1 == o.m1 && m2 == o.m2 && t == o.t && alphas == o.alphas && betas == o.betas;
    }
};

/// Builds (Y1, Y2) from the canonical data. Requires m1 + m2 - t <= n.
template <EuclideanRing R>
std::pair<Matrix<R>, Matrix<R>> canonical_matrices(std::size_t n, std::size_t m1, std::size_t m2,
                                                   std::span<const R> alphas, std::span<const R> betas) {
    const std::size_t t = alphas.size();
    if (betas.size() != t || t > m1 || t > m2 || m1 + m2 - t > n)
        throw DimensionMismatch("inconsistent canonical pair shape");
    Matrix<R> y1(n, m1), y2(n, m2);
    for (std::size_t k = 0; k < t; ++k) {
        y1(k, k) = alphas[k];
        y2(k, k) = betas[k];
    }
    for (std::size_t k = t; k < m1; ++k)
        y1(k, k) = R::one();
    for (std::size_t k = t; k < m2; ++k)
        y2(m1 + k - t, k) = R::one();
    return {std::move(y1), std::move(y2)};
}

namespace detail {

template <EuclideanRing R>
Matrix<R> to_ring(const Matrix<Fraction<R>>& m) {
    Matrix<R> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!m(i, j).is_integral())
                throw InternalError("coprime factor transform has a non-ring entry " + m(i, j).to_string());
            out(i, j) = m(i, j).num();
        }
    return out;
}

} // namespace detail

/// Throws HypothesisViolation naming the first failed hypothesis.
template <EuclideanRing R>
PairCanonicalForm<R> canonical_pair(const Matrix<R>& x1, const Matrix<R>& x2) {
    using F = Fraction<R>;
    auto hyp = check_pair_hypotheses(x1, x2);
    if (!hyp.all_hold())
        throw HypothesisViolation(hyp.first_failure());

    PairCanonicalForm<R> out;
    out.n = x1.rows();
    out.m1 = x1.cols();
    out.m2 = x2.cols();
    const std::size_t n = out.n, m1 = out.m1, m2 = out.m2;

    auto mod1 = Submodule<R>::from_basis(x1);
    auto mod2 = Submodule<R>::from_basis(x2);
    auto dec = pure_sum_decompose(mod1, mod2);
    const std::size_t t = dec.dbar.rank();
    out.t = t;

    // Basis of R^n adapted to closure(D) (+) K1 (+) K2 (+) complement.
    Matrix<R> adapted = hcat({dec.dbar.basis(), dec.k1.basis(), dec.k2.basis()});
    Matrix<R> s = hcat(adapted, complete_to_unimodular(adapted));
    Matrix<R> s_inv = inverse_unimodular(s);

    // Xi Wi = [Hi | Ki]; Hi = Dbar * A1 (resp. B1) in closure(D)-coordinates.
    Matrix<R> w1 = solve_exact(x1, hcat(dec.h1.basis(), dec.k1.basis()));
    Matrix<R> w2 = solve_exact(x2, hcat(dec.h2.basis(), dec.k2.basis()));
    Matrix<R> a1 = solve_exact(dec.dbar.basis(), dec.h1.basis());
    Matrix<R> b1 = solve_exact(dec.dbar.basis(), dec.h2.basis());

    // Square, left coprime case: A1^{-1} B1 and its two coprime factorizations.
    Matrix<F> a1_inv = inverse(convert<F>(a1));
    auto mm = smith_mcmillan(Matrix<F>(a1_inv * convert<F>(b1)));
    Matrix<R> x1_hat = Matrix<R>::diagonal(mm.alphas) * mm.V1;
    Matrix<R> qc = detail::to_ring(Matrix<F>(convert<F>(x1_hat) * a1_inv));
    if (!is_unimodular(qc))
        throw InternalError("left factor relating the coprime factorizations is not unimodular");
    const Matrix<R>& wa = mm.V1_inv;
    const Matrix<R>& wb = mm.V2_inv;

    out.Q = block_diag(qc, Matrix<R>::identity(n - t)) * s_inv;
    out.V1 = w1 * block_diag(wa, Matrix<R>::identity(m1 - t));
    out.V2 = w2 * block_diag(wb, Matrix<R>::identity(m2 - t));

    for (std::size_t k = 0; k < t; ++k) {
        auto [ua, na] = normalize_unit(mm.alphas[k]);
        if (ua != R::one())
            out.V1.scale_col(k, unit_inverse(ua));
        auto [ub, nb] = normalize_unit(mm.betas[k]);
        if (ub != R::one())
            out.V2.scale_col(k, unit_inverse(ub));
        out.alphas.push_back(std::move(na));
        out.betas.push_back(std::move(nb));
    }
    std::tie(out.Y1, out.Y2) = canonical_matrices<R>(n, m1, m2, out.alphas, out.betas);

    if (out.Q * x1 * out.V1 != out.Y1 || out.Q * x2 * out.V2 != out.Y2)
        throw InternalError("canonical pair witnesses do not reproduce the canonical matrices");
    return out;
}

/// The data deciding R-unimodular equivalence of (X1 R^m1, X2 R^m2).
template <EuclideanRing R>
struct PairInvariants {
    std::size_t n = 0;
    std::size_t rank_sum = 0;
    QuotientInvariants<R> q1; // X1 / (X1 n X2)
    QuotientInvariants<R> q2; // X2 / (X1 n X2)

    friend bool operator==(const PairInvariants&, const PairInvariants&) = default;
};

/// Columns of X1, X2 are generators; they need not be independent.
/// Throws HypothesisViolation when the sum of the spans is not pure.
template <EuclideanRing R>
PairInvariants<R> pair_invariants(const Matrix<R>& x1, const Matrix<R>& x2) {
    if (x1.rows() != x2.rows())
        throw DimensionMismatch("pair members have different row counts");
    const std::size_t n = x1.rows();
    auto mod1 = Submodule<R>::from_generators(n, x1);
    auto mod2 = Submodule<R>::from_generators(n, x2);
    auto total = sum(mod1, mod2);
    if (!is_pure(total))
        throw HypothesisViolation("span of (X1 X2) not pure");
    auto d = intersect(mod1, mod2);
    return {n, total.rank(), quotient_invariants(mod1, d), quotient_invariants(mod2, d)};
}

template <EuclideanRing R>
struct MatrixPair {
    Matrix<R> x1;
    Matrix<R> x2;
};

/// Both decision routes and their evidence.
template <EuclideanRing R>
struct EquivalenceReport {
    bool equivalent = false;
    PairInvariants<R> invariants_a;
    PairInvariants<R> invariants_b;
    PairCanonicalForm<R> canonical_a;
    PairCanonicalForm<R> canonical_b;
};

namespace detail {

template <EuclideanRing R>
Matrix<R> basis_of_span(const Matrix<R>& m) {
    return Submodule<R>::from_generators(m.rows(), m).basis();
}

} // namespace detail

/// Decides whether one automorphism of R^n carries the spans of pair A onto
/// those of pair B. The invariants route (rank of the sum, quotients by the
/// intersection) and the canonical-form route are both evaluated; a
/// disagreement is an InternalError. Mixed ambient ranks and non-pure sums
/// raise HypothesisViolation.
template <EuclideanRing R>
EquivalenceReport<R> decide_equivalence(const MatrixPair<R>& a, const MatrixPair<R>& b) {
    if (a.x1.rows() != b.x1.rows())
        throw HypothesisViolation("pairs live in R^" + std::to_string(a.x1.rows()) + " and R^" +
                                  std::to_string(b.x1.rows()) + ", ambient ranks differ");
    EquivalenceReport<R> rep;
    rep.invariants_a = pair_invariants(a.x1, a.x2);
    rep.invariants_b = pair_invariants(b.x1, b.x2);
    rep.canonical_a = canonical_pair(detail::basis_of_span(a.x1), detail::basis_of_span(a.x2));
    rep.canonical_b = canonical_pair(detail::basis_of_span(b.x1), detail::basis_of_span(b.x2));
    const bool by_invariants = rep.invariants_a == rep.invariants_b;
    const bool by_canonical = rep.canonical_a.same_invariants(rep.canonical_b);
    if (by_invariants != by_canonical)
        throw InternalError("invariant route and canonical-form route disagree");
    rep.equivalent = by_invariants;
    return rep;
}

template <EuclideanRing R>
bool equivalent(const MatrixPair<R>& a, const MatrixPair<R>& b) {
    return decide_equivalence(a, b).equivalent;
}

} // namespace pidpair
