#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pidpair/errors.hpp"
#include "pidpair/fraction.hpp"
#include "pidpair/matrix.hpp"
#include "pidpair/ring.hpp"

namespace pidpair {

/// Column-style Hermite form: M * U = H.
///
/// H has its nonzero columns first. Column k carries its pivot in row
/// `pivot_rows[k]`, the rows strictly increase with k, every entry above a
/// pivot is zero, the pivot is unit-normalized, and the entries of the pivot
/// row left of the pivot are reduced modulo it.
template <class R>
struct HermiteDecomposition {
    Matrix<R> H;
    Matrix<R> U;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return pivot_rows.size(); }
};

/// Q * M * V = S with S diagonal-rectangular, diagonal = invariant factors
/// followed by zeros. Q_inv and V_inv are tracked during elimination, which
/// is much cheaper than inverting Q and V afterwards.
template <class R>
struct SmithDecomposition {
    Matrix<R> Q;
    Matrix<R> S;
    Matrix<R> V;
    std::vector<R> invariant_factors;
    Matrix<R> Q_inv;
    Matrix<R> V_inv;

    std::size_t rank() const { return invariant_factors.size(); }
    bool all_units() const {
        for (const auto& s : invariant_factors)
            if (!is_unit(s))
                return false;
        return true;
    }
};

/// T = V1^{-1} * diag(betas[i] / alphas[i]) * V2 with alphas descending and
/// betas ascending in divisibility, each pair coprime.
template <class R>
struct McMillanForm {
    Matrix<R> V1;
    Matrix<R> V2;
    std::vector<R> alphas;
    std::vector<R> betas;
    Matrix<R> V1_inv;
    Matrix<R> V2_inv;
};

template <class R>
struct CoprimeFactorization {
    Matrix<R> X1;
    Matrix<R> X2;
};

/// Fraction-free (Bareiss) determinant; det of a 0x0 matrix is one.
template <EuclideanRing R>
R determinant(const Matrix<R>& m) {
    if (!m.is_square())
        throw DimensionMismatch("determinant of non-square " + m.shape());
    const std::size_t n = m.rows();
    if (n == 0)
        return R::one();
    Matrix<R> a = m;
    bool negate = false;
    R prev = R::one();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t i = k + 1;
            while (i < n && a(i, k).is_zero())
                ++i;
            if (i == n)
                return R::zero();
            a.swap_rows(i, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = div_exact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            a(i, k) = R::zero();
        }
        prev = a(k, k);
    }
    return negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
}

namespace detail {

/// Scales column j of both matrices by the unit that tidies it (for Q[x]:
/// integer, primitive coefficients), judged on `a` unless that column is
/// zero. Keeps rational coefficient growth in check during elimination.
template <EuclideanRing R>
void tidy_col(Matrix<R>& a, Matrix<R>& b, std::size_t j) {
    auto column = [j](const Matrix<R>& m) {
        std::vector<R> col;
        col.reserve(m.rows());
        bool zero = true;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            col.push_back(m(i, j));
            zero = zero && col.back().is_zero();
        }
        return std::make_pair(std::move(col), zero);
    };
    auto [ca, a_zero] = column(a);
    R c = a_zero ? content_unit(std::span<const R>(column(b).first)) : content_unit(std::span<const R>(ca));
    if (c == R::one())
        return;
    a.scale_col(j, c);
    b.scale_col(j, c);
}

} // namespace detail

template <EuclideanRing R>
HermiteDecomposition<R> hnf(const Matrix<R>& m) {
    HermiteDecomposition<R> out{m, Matrix<R>::identity(m.cols()), {}};
    Matrix<R>& h = out.H;
    Matrix<R>& u = out.U;
    const std::size_t cols = m.cols();
    std::size_t k = 0;
    for (std::size_t i = 0; i < m.rows() && k < cols; ++i) {
        // smallest nonzero entry of row i at or right of column k
        std::optional<std::size_t> best;
        for (std::size_t j = k; j < cols; ++j)
            if (!h(i, j).is_zero() && (!best || smaller(h(i, j), h(i, *best))))
                best = j;
        if (!best)
            continue;
        h.swap_cols(k, *best);
        u.swap_cols(k, *best);
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (h(i, j).is_zero())
                continue;
            const R a = h(i, k), b = h(i, j);
            auto [g, s, t] = gcd_ext(a, b);
            R a1 = div_exact(a, g), b1 = div_exact(b, g);
            h.combine_cols(k, j, s, t, -b1, a1);
            u.combine_cols(k, j, s, t, -b1, a1);
            detail::tidy_col(h, u, j);
        }
        auto [unit, pivot] = normalize_unit(h(i, k));
        if (unit != R::one()) {
            R inv = unit_inverse(unit);
            h.scale_col(k, inv);
            u.scale_col(k, inv);
        }
        for (std::size_t j = 0; j < k; ++j) {
            R q = div_rem(h(i, j), pivot).first;
            h.add_col_multiple(j, k, -q);
            u.add_col_multiple(j, k, -q);
        }
        out.pivot_rows.push_back(i);
        ++k;
    }
    return out;
}

template <EuclideanRing R>
std::size_t rank(const Matrix<R>& m) {
    return hnf(m).rank();
}

template <EuclideanRing R>
SmithDecomposition<R> snf(const Matrix<R>& m) {
    SmithDecomposition<R> out{Matrix<R>::identity(m.rows()), m, Matrix<R>::identity(m.cols()), {},
                              Matrix<R>::identity(m.rows()), Matrix<R>::identity(m.cols())};
    Matrix<R>& a = out.S;
    Matrix<R>& q = out.Q;
    Matrix<R>& v = out.V;
    Matrix<R>& qi = out.Q_inv;
    Matrix<R>& vi = out.V_inv;
    const std::size_t rows = m.rows(), cols = m.cols();

    std::size_t r = 0;
    for (std::size_t p = 0; p < std::min(rows, cols); ++p) {
        bool found = false;
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = p; i < rows; ++i)
                for (std::size_t j = p; j < cols; ++j)
                    if (!a(i, j).is_zero() && (!best || smaller(a(i, j), a(best->first, best->second))))
                        best = std::make_pair(i, j);
            if (!best)
                break;
            found = true;
            a.swap_rows(p, best->first);
            q.swap_rows(p, best->first);
            qi.swap_cols(p, best->first);
            a.swap_cols(p, best->second);
            v.swap_cols(p, best->second);
            vi.swap_rows(p, best->second);

            bool clean = true;
            for (std::size_t i = p + 1; i < rows; ++i) {
                if (a(i, p).is_zero())
                    continue;
                R c = -div_rem(a(i, p), a(p, p)).first;
                a.add_row_multiple(i, p, c);
                q.add_row_multiple(i, p, c);
                qi.add_col_multiple(p, i, -c);
                clean = clean && a(i, p).is_zero();
            }
            for (std::size_t j = p + 1; j < cols; ++j) {
                if (a(p, j).is_zero())
                    continue;
                R c = -div_rem(a(p, j), a(p, p)).first;
                a.add_col_multiple(j, p, c);
                v.add_col_multiple(j, p, c);
                vi.add_row_multiple(p, j, -c);
                clean = clean && a(p, j).is_zero();
            }
            if (clean)
                break;
        }
        if (!found)
            break;
        ++r;
    }

    // gcd absorption on 2x2 diagonal blocks until s_1 | s_2 | ... | s_r
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i + 1; j < r; ++j) {
                if (divides(a(i, i), a(j, j)))
                    continue;
                const R x = a(i, i), y = a(j, j);
                auto [g, s, t] = gcd_ext(x, y);
                R x1 = div_exact(x, g), y1 = div_exact(y, g);
                // both 2x2 transforms have determinant s*x1 + t*y1 = 1,
                // so their inverses are the adjugates
                a.combine_rows(i, j, s, t, -y1, x1);
                q.combine_rows(i, j, s, t, -y1, x1);
                qi.combine_cols(i, j, x1, y1, -t, s);
                R c = -(t * y1), d = s * x1;
                a.combine_cols(i, j, R::one(), R::one(), c, d);
                v.combine_cols(i, j, R::one(), R::one(), c, d);
                vi.combine_rows(i, j, d, -c, -R::one(), R::one());
                changed = true;
            }
    }

    for (std::size_t i = 0; i < r; ++i) {
        auto [unit, normal] = normalize_unit(a(i, i));
        if (unit != R::one()) {
            R inv = unit_inverse(unit);
            a.scale_row(i, inv);
            q.scale_row(i, inv);
            qi.scale_col(i, unit);
        }
        out.invariant_factors.push_back(std::move(normal));
    }
    return out;
}

template <EuclideanRing R>
bool is_unimodular(const Matrix<R>& m) {
    return m.is_square() && is_unit(determinant(m));
}

/// Basis of {v : M v = 0} as columns; the span is pure.
template <EuclideanRing R>
Matrix<R> kernel_basis(const Matrix<R>& m) {
    auto h = hnf(m);
    return h.U.columns(h.rank(), m.cols() - h.rank());
}

/// Some C with M * C = B; throws NoSolution when B is not in the column
/// span of M over the ring (even if it is over the fraction field).
template <EuclideanRing R>
Matrix<R> solve_exact(const Matrix<R>& m, const Matrix<R>& b) {
    if (m.rows() != b.rows())
        throw DimensionMismatch("solve_exact: " + m.shape() + " vs right-hand side " + b.shape());
    auto h = hnf(m);
    const std::size_t r = h.rank();
    Matrix<R> y(r, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        for (std::size_t k = 0; k < r; ++k) {
            const std::size_t p = h.pivot_rows[k];
            R val = b(p, c);
            for (std::size_t j = 0; j < k; ++j)
                val -= h.H(p, j) * y(j, c);
            auto [quot, rem] = div_rem(val, h.H(p, k));
            if (!rem.is_zero())
                throw NoSolution("right-hand side column " + std::to_string(c) +
                                 " is not in the span over the ring");
            y(k, c) = std::move(quot);
        }
    }
    if (h.H.columns(0, r) * y != b)
        throw NoSolution("right-hand side is not in the column span");
    return h.U.columns(0, r) * y;
}

/// Inverse of a unimodular matrix, exact over the ring.
template <EuclideanRing R>
Matrix<R> inverse_unimodular(const Matrix<R>& u) {
    if (!u.is_square())
        throw DimensionMismatch("inverse of non-square " + u.shape());
    try {
        return solve_exact(u, Matrix<R>::identity(u.rows()));
    } catch (const NoSolution&) {
        throw SingularMatrix("matrix is not unimodular");
    }
}

/// Gauss-Jordan inverse over the fraction field.
template <EuclideanRing R>
Matrix<Fraction<R>> inverse(const Matrix<Fraction<R>>& m) {
    using F = Fraction<R>;
    if (!m.is_square())
        throw DimensionMismatch("inverse of non-square " + m.shape());
    const std::size_t n = m.rows();
    Matrix<F> a = m;
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k).is_zero())
            ++p;
        if (p == n)
            throw SingularMatrix("matrix is singular over the fraction field");
        a.swap_rows(k, p);
        inv.swap_rows(k, p);
        F pinv = a(k, k).inverse();
        a.scale_row(k, pinv);
        inv.scale_row(k, pinv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k).is_zero())
                continue;
            F c = -a(i, k);
            a.add_row_multiple(i, k, c);
            inv.add_row_multiple(i, k, c);
        }
    }
    return inv;
}

/// Returns C with [X C] unimodular. X must have full column rank and a
/// pure column span; otherwise HypothesisViolation.
template <EuclideanRing R>
Matrix<R> complete_to_unimodular(const Matrix<R>& x) {
    auto s = snf(x);
    if (s.rank() != x.cols())
        throw HypothesisViolation("matrix to complete does not have full column rank");
    if (!s.all_units())
        throw HypothesisViolation("column span is not pure, no unimodular completion exists");
    // X = Q^{-1} [I; 0] V^{-1}, so the trailing columns of Q^{-1} complete it
    return s.Q_inv.columns(x.cols(), x.rows() - x.cols());
}

/// Scalar common-denominator construction: T = N / d, snf(N), and each
/// diagonal entry s / d reduced to beta / alpha.
template <EuclideanRing R>
McMillanForm<R> smith_mcmillan(const Matrix<Fraction<R>>& t) {
    if (!t.is_square())
        throw DimensionMismatch("Smith-McMillan form of non-square " + t.shape());
    R d = R::one();
    for (const auto& x : t.entries())
        d = lcm(d, x.den());
    Matrix<R> numer(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j)
            numer(i, j) = t(i, j).num() * div_exact(d, t(i, j).den());
    auto s = snf(numer);
    if (s.rank() != t.rows())
        throw SingularMatrix("Smith-McMillan form requires a nonsingular matrix");
    McMillanForm<R> out{s.Q, s.V_inv, {}, {}, s.Q_inv, s.V};
    for (const auto& f : s.invariant_factors) {
        auto red = Fraction<R>::reduce(f, d);
        out.betas.push_back(normalized(red.num()));
        out.alphas.push_back(red.den());
    }
    return out;
}

/// T = X1^{-1} X2 with (X1 X2) having only unit invariant factors.
template <EuclideanRing R>
CoprimeFactorization<R> left_coprime_factorization(const Matrix<Fraction<R>>& t) {
    auto mm = smith_mcmillan(t);
    return {Matrix<R>::diagonal(mm.alphas) * mm.V1, Matrix<R>::diagonal(mm.betas) * mm.V2};
}

} // namespace pidpair
