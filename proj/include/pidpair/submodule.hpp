#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pidpair/errors.hpp"
#include "pidpair/matrix.hpp"
#include "pidpair/normal_forms.hpp"
#include "pidpair/ring.hpp"

namespace pidpair {

/// Finitely generated submodule of R^n, held as the nonzero columns of its
/// column Hermite form (full column rank; the zero module has an n x 0
/// basis). Equality is still checked as mutual containment.
template <EuclideanRing R>
class Submodule {
public:
    /// Span of the columns of `g`, reduced to a basis via Hermite form.
    static Submodule from_generators(std::size_t n, const Matrix<R>& g) {
        if (g.rows() != n)
            throw DimensionMismatch("generators have " + std::to_string(g.rows()) +
                                    " rows, ambient rank is " + std::to_string(n));
        auto h = hnf(g);
        return Submodule(n, h.H.columns(0, h.rank()));
    }

    /// Span of the columns of `b`. Throws HypothesisViolation if they are
    /// linearly dependent.
    static Submodule from_basis(const Matrix<R>& b) {
        auto h = hnf(b);
        if (h.rank() != b.cols())
            throw HypothesisViolation("basis matrix does not have full column rank");
        return Submodule(b.rows(), std::move(h.H));
    }

    static Submodule zero(std::size_t n) { return Submodule(n, Matrix<R>(n, 0)); }
    static Submodule whole(std::size_t n) { return Submodule(n, Matrix<R>::identity(n)); }

    std::size_t ambient_rank() const { return n_; }
    std::size_t rank() const { return basis_.cols(); }
    const Matrix<R>& basis() const { return basis_; }
    bool is_zero() const { return basis_.cols() == 0; }

    bool contains(std::span<const R> x) const {
        if (x.size() != n_)
            throw DimensionMismatch("vector length does not match ambient rank");
        return contains_columns(Matrix<R>::column(x));
    }

    /// other is a submodule of *this.
    bool contains(const Submodule& other) const {
        require_same_ambient(other);
        return contains_columns(other.basis_);
    }

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.n_ == b.n_ && a.rank() == b.rank() && a.contains(b) && b.contains(a);
    }

    void require_same_ambient(const Submodule& other) const {
        if (n_ != other.n_)
            throw DimensionMismatch("submodules of R^" + std::to_string(n_) + " and R^" +
                                    std::to_string(other.n_));
    }

private:
    Submodule(std::size_t n, Matrix<R> basis) : n_(n), basis_(std::move(basis)) {}

    bool contains_columns(const Matrix<R>& cols) const {
        try {
            solve_exact(basis_, cols);
            return true;
        } catch (const NoSolution&) {
            return false;
        }
    }

    std::size_t n_ = 0;
    Matrix<R> basis_;
};

/// Isomorphism type of M/N: R/q_1 + ... + R/q_k + R^free_rank.
template <EuclideanRing R>
struct QuotientInvariants {
    std::vector<R> torsion; // nonunit, normalized, q_1 | q_2 | ...
    std::size_t free_rank = 0;

    friend bool operator==(const QuotientInvariants&, const QuotientInvariants&) = default;
};

template <EuclideanRing R>
Submodule<R> sum(const Submodule<R>& a, const Submodule<R>& b) {
    a.require_same_ambient(b);
    return Submodule<R>::from_generators(a.ambient_rank(), hcat(a.basis(), b.basis()));
}

template <EuclideanRing R>
Submodule<R> intersect(const Submodule<R>& a, const Submodule<R>& b) {
    a.require_same_ambient(b);
    // X1 y = X2 z  <=>  [X1 | -X2] (y; z) = 0
    Matrix<R> k = kernel_basis(hcat(a.basis(), -b.basis()));
    Matrix<R> top = k.row_range(0, a.rank());
    return Submodule<R>::from_generators(a.ambient_rank(), a.basis() * top);
}

/// Saturation {x : c x in M for some c != 0}.
template <EuclideanRing R>
Submodule<R> closure(const Submodule<R>& m) {
    // x is in the closure iff every linear form vanishing on M vanishes on x.
    // The Q^{-1} columns from an SNF would also do, but over Q[x] their
    // coefficients are far larger than this HNF-reduced basis.
    Matrix<R> annihilator = kernel_basis(m.basis().transpose()).transpose();
    return Submodule<R>::from_generators(m.ambient_rank(), kernel_basis(annihilator));
}

template <EuclideanRing R>
bool is_pure(const Submodule<R>& m) {
    return snf(m.basis()).all_units();
}

/// Isomorphism type of M/N. Throws HypothesisViolation unless N is in M.
template <EuclideanRing R>
QuotientInvariants<R> quotient_invariants(const Submodule<R>& m, const Submodule<R>& n) {
    m.require_same_ambient(n);
    Matrix<R> coords;
    try {
        coords = solve_exact(m.basis(), n.basis());
    } catch (const NoSolution&) {
        throw HypothesisViolation("quotient requested but the submodule is not contained in the module");
    }
    auto s = snf(coords);
    QuotientInvariants<R> q;
    for (const auto& f : s.invariant_factors)
        if (!is_unit(f))
            q.torsion.push_back(f);
    q.free_rank = m.rank() - s.rank();
    return q;
}

/// A complement of H inside X, where H is closed in X: X = H (+) K.
template <EuclideanRing R>
Submodule<R> complement_in(const Submodule<R>& x, const Submodule<R>& h) {
    Matrix<R> coords;
    try {
        coords = solve_exact(x.basis(), h.basis());
    } catch (const NoSolution&) {
        throw HypothesisViolation("complement requested for a submodule that is not contained in the module");
    }
    Matrix<R> rest;
    try {
        rest = complete_to_unimodular(coords);
    } catch (const HypothesisViolation&) {
        throw HypothesisViolation("submodule is not closed in the module, no direct complement exists");
    }
    return Submodule<R>::from_basis(x.basis() * rest);
}

/// X1 + X2 = closure(X1 n X2) (+) K1 (+) K2 with Xi = (closure(D) n Xi) (+) Ki.
/// `h1` = X1 n closure(X2) and `h2` = X2 n closure(X1) are the intermediate
/// modules with h1 + h2 = dbar; each hi equals dbar n Xi.
template <EuclideanRing R>
struct PureSumDecomposition {
    Submodule<R> dbar;
    Submodule<R> k1;
    Submodule<R> k2;
    Submodule<R> h1;
    Submodule<R> h2;
};

/// Throws HypothesisViolation when X1 + X2 is not pure.
template <EuclideanRing R>
PureSumDecomposition<R> pure_sum_decompose(const Submodule<R>& x1, const Submodule<R>& x2) {
    x1.require_same_ambient(x2);
    if (!is_pure(sum(x1, x2)))
        throw HypothesisViolation("X1 + X2 is not a pure submodule");
    auto dbar = closure(intersect(x1, x2));
    auto h1 = intersect(x1, closure(x2));
    auto h2 = intersect(x2, closure(x1));
    auto k1 = complement_in(x1, h1);
    auto k2 = complement_in(x2, h2);
    return {std::move(dbar), std::move(k1), std::move(k2), std::move(h1), std::move(h2)};
}

} // namespace pidpair
