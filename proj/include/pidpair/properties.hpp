#pragma once

#include <string>
#include <vector>

#include "pidpair/oracles.hpp"
#include "pidpair/pairs.hpp"
#include "pidpair/submodule.hpp"

// Property checks over single instances. Each returns the names of the
// violated properties; an empty list means the instance passed.

namespace pidpair::props {

class Violations {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok)
            list_.push_back(what);
    }
    std::vector<std::string> take() { return std::move(list_); }

private:
    std::vector<std::string> list_;
};

/// SNF witnesses and invariant factors against the minor-gcd oracle.
template <EuclideanRing R>
std::vector<std::string> snf_against_oracle(const Matrix<R>& m) {
    Violations v;
    auto d = snf(m);
    v.expect(d.Q * m * d.V == d.S, "Q*M*V = S");
    v.expect(is_unimodular(d.Q), "Q unimodular");
    v.expect(is_unimodular(d.V), "V unimodular");
    v.expect(d.Q * d.Q_inv == Matrix<R>::identity(m.rows()), "Q * Q_inv = I");
    v.expect(d.V * d.V_inv == Matrix<R>::identity(m.cols()), "V * V_inv = I");
    const auto& f = d.invariant_factors;
    bool diag = d.S.rows() == m.rows() && d.S.cols() == m.cols();
    for (std::size_t i = 0; diag && i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            R want = (i == j && i < f.size()) ? f[i] : R::zero();
            if (d.S(i, j) != want)
                diag = false;
        }
    v.expect(diag, "S = diag(invariant factors)");
    for (std::size_t k = 0; k < f.size(); ++k) {
        v.expect(!f[k].is_zero() && normalized(f[k]) == f[k], "invariant factors nonzero and normalized");
        if (k + 1 < f.size())
            v.expect(divides(f[k], f[k + 1]), "s_k | s_k+1");
    }
    v.expect(f == oracle::invariant_factors_by_minors(m), "invariant factors = minor-gcd quotients");
    v.expect(rank(m) == f.size(), "hnf rank = number of invariant factors");
    if (m.rows() == m.cols())
        v.expect(determinant(m) == oracle::laplace_det(m), "Bareiss det = cofactor det");
    return v.take();
}

/// Closure idempotence, monotonicity, and the intersection and sum laws on
/// an arbitrary pair.
template <EuclideanRing R>
std::vector<std::string> closure_laws(const Submodule<R>& a, const Submodule<R>& b) {
    Violations v;
    auto ca = closure(a), cb = closure(b);
    v.expect(ca.contains(a) && ca.rank() == a.rank(), "closure(M) contains M with equal rank");
    v.expect(is_pure(ca), "closure(M) pure");
    v.expect(closure(ca) == ca, "closure idempotent");
    v.expect(is_pure(a) == (ca == a), "M pure iff closure(M) = M");
    auto ab = intersect(a, b);
    v.expect(ca.contains(closure(ab)), "closure monotone");
    v.expect(closure(ab) == intersect(ca, cb), "closure(M1 n M2) = closure(M1) n closure(M2)");
    auto s = sum(a, b);
    v.expect(closure(s).contains(sum(ca, cb)), "closure(M1 + M2) contains closure(M1) + closure(M2)");
    if (is_pure(s))
        v.expect(s == sum(ca, cb), "M1 + M2 pure implies M1 + M2 = closure(M1) + closure(M2)");
    return v.take();
}

/// The sum law for a pair whose sum is known to be pure.
template <EuclideanRing R>
std::vector<std::string> pure_sum_law(const Submodule<R>& a, const Submodule<R>& b) {
    Violations v;
    auto s = sum(a, b);
    v.expect(is_pure(s), "generated sum is pure");
    v.expect(s == sum(closure(a), closure(b)), "M1 + M2 pure implies M1 + M2 = closure(M1) + closure(M2)");
    return v.take();
}

/// X1 + X2 = closure(D) (+) K1 (+) K2 and X_i = (closure(D) n X_i) (+) K_i.
template <EuclideanRing R>
std::vector<std::string> pure_sum_decomposition(const Submodule<R>& x1, const Submodule<R>& x2) {
    Violations v;
    auto d = pure_sum_decompose(x1, x2);
    auto total = sum(x1, x2);
    v.expect(d.dbar == closure(intersect(x1, x2)), "Dbar = closure(X1 n X2)");
    v.expect(d.dbar.rank() + d.k1.rank() + d.k2.rank() == total.rank(), "rank(Dbar) + rank(K1) + rank(K2) = rank(X1 + X2)");
    v.expect(intersect(d.dbar, d.k1).is_zero() && intersect(d.dbar, d.k2).is_zero() && intersect(d.k1, d.k2).is_zero(),
             "Dbar, K1, K2 pairwise zero intersections");
    v.expect(sum(sum(d.dbar, d.k1), d.k2) == total, "Dbar + K1 + K2 = X1 + X2");
    v.expect(x1.contains(d.k1) && x2.contains(d.k2), "K_i inside X_i");
    v.expect(is_pure(d.k1) && is_pure(d.k2), "K_i pure");
    auto h1 = intersect(d.dbar, x1), h2 = intersect(d.dbar, x2);
    v.expect(h1 == d.h1 && h2 == d.h2, "H_i = Dbar n X_i");
    v.expect(sum(h1, h2) == d.dbar, "H1 + H2 = Dbar");
    v.expect(sum(h1, d.k1) == x1 && h1.rank() + d.k1.rank() == x1.rank(), "X1 = (Dbar n X1) (+) K1");
    v.expect(sum(h2, d.k2) == x2 && h2.rank() + d.k2.rank() == x2.rank(), "X2 = (Dbar n X2) (+) K2");
    return v.take();
}

/// Witness identities, block shapes, chains and coprimality of one
/// canonical_pair result for the input (x1, x2).
template <EuclideanRing R>
std::vector<std::string> canonical_structure(const Matrix<R>& x1, const Matrix<R>& x2, const PairCanonicalForm<R>& c) {
    Violations v;
    v.expect(c.Q * x1 * c.V1 == c.Y1, "Q*X1*V1 = Y1");
    v.expect(c.Q * x2 * c.V2 == c.Y2, "Q*X2*V2 = Y2");
    v.expect(is_unimodular(c.Q) && is_unimodular(c.V1) && is_unimodular(c.V2), "Q, V1, V2 unimodular");
    v.expect(c.n == x1.rows() && c.m1 == x1.cols() && c.m2 == x2.cols(), "dimensions n, m1, m2");
    if (c.alphas.size() != c.t || c.betas.size() != c.t || c.m1 + c.m2 < c.t + c.t ||
        c.m1 + c.m2 - c.t > c.n) {
        v.expect(false, "t consistent with alpha/beta lengths and n >= m1 + m2 - t");
        return v.take();
    }
    for (std::size_t k = 0; k < c.t; ++k) {
        v.expect(normalized(c.alphas[k]) == c.alphas[k] && normalized(c.betas[k]) == c.betas[k],
                 "alpha, beta unit-normalized");
        v.expect(is_unit(gcd(c.alphas[k], c.betas[k])), "gcd(alpha_k, beta_k) unit");
        if (k + 1 < c.t) {
            v.expect(divides(c.alphas[k + 1], c.alphas[k]), "alpha_t | ... | alpha_1");
            v.expect(divides(c.betas[k], c.betas[k + 1]), "beta_1 | ... | beta_t");
        }
    }
    auto [y1, y2] = canonical_matrices<R>(c.n, c.m1, c.m2, c.alphas, c.betas);
    v.expect(c.Y1 == y1, "Y1 block shape");
    v.expect(c.Y2 == y2, "Y2 block shape");
    return v.take();
}

/// Nonunit betas = torsion of X1/D, nonunit alphas = torsion of X2/D, with
/// D = X1 n X2 computed independently of the canonical form.
template <EuclideanRing R>
std::vector<std::string> quotient_characterization(const Matrix<R>& x1, const Matrix<R>& x2,
                                                   const PairCanonicalForm<R>& c) {
    Violations v;
    const std::size_t n = x1.rows();
    auto m1 = Submodule<R>::from_generators(n, x1), m2 = Submodule<R>::from_generators(n, x2);
    auto d = intersect(m1, m2);
    auto q1 = quotient_invariants(m1, d), q2 = quotient_invariants(m2, d);
    std::vector<R> nonunit_b, nonunit_a;
    for (std::size_t k = 0; k < c.t; ++k) {
        if (!is_unit(c.betas[k]))
            nonunit_b.push_back(c.betas[k]);
        if (!is_unit(c.alphas[c.t - 1 - k]))
            nonunit_a.push_back(c.alphas[c.t - 1 - k]);
    }
    v.expect(q1.torsion == nonunit_b, "nonunit betas = torsion of X1/(X1 n X2)");
    v.expect(q2.torsion == nonunit_a, "nonunit alphas = torsion of X2/(X1 n X2)");
    v.expect(q1.free_rank == c.m1 - c.t && q2.free_rank == c.m2 - c.t, "free ranks of X_i/(X1 n X2) = m_i - t");
    v.expect(d.rank() == c.t, "rank(X1 n X2) = t");
    return v.take();
}

} // namespace pidpair::props
