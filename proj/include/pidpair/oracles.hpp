#pragma once

#include <cstddef>
#include <vector>

#include "pidpair/matrix.hpp"
#include "pidpair/ring.hpp"

// Reference computations that share nothing with the elimination engines in
// normal_forms.hpp: determinants by cofactor expansion, invariant factors by
// enumerating all minors. Exponential; meant for matrices up to about 6x6.

namespace pidpair::oracle {

/// Cofactor expansion along the first row.
template <EuclideanRing R>
R laplace_det(const Matrix<R>& m) {
    const std::size_t n = m.rows();
    if (n == 0)
        return R::one();
    if (n == 1)
        return m(0, 0);
    R total = R::zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero())
            continue;
        Matrix<R> minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(i - 1, cc++) = m(i, c);
        R term = m(0, j) * laplace_det(minor);
        total = (j % 2 == 0) ? total + term : total - term;
    }
    return total;
}

namespace detail {

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
        cur.push_back(i);
        combinations(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    combinations(n, k, 0, cur, out);
    return out;
}

} // namespace detail

/// d_k: normalized gcd of all k x k minors (d_0 = 1).
template <EuclideanRing R>
R determinantal_divisor(const Matrix<R>& m, std::size_t k) {
    if (k == 0)
        return R::one();
    R g = R::zero();
    for (const auto& rows : detail::subsets(m.rows(), k))
        for (const auto& cols : detail::subsets(m.cols(), k)) {
            Matrix<R> sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    sub(i, j) = m(rows[i], cols[j]);
            g = gcd(g, laplace_det(sub));
        }
    return g;
}

/// s_k = d_k / d_{k-1} for k = 1..rank.
template <EuclideanRing R>
std::vector<R> invariant_factors_by_minors(const Matrix<R>& m) {
    std::vector<R> out;
    R prev = R::one();
    for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
        R d = determinantal_divisor(m, k);
        if (d.is_zero())
            break;
        out.push_back(normalized(div_exact(d, prev)));
        prev = d;
    }
    return out;
}

} // namespace pidpair::oracle
