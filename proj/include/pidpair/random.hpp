#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pidpair/matrix.hpp"
#include "pidpair/ring.hpp"

namespace pidpair {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi]. Modulo draw on purpose: unlike the std
/// distributions it gives identical streams on every standard library.
inline long draw(Rng& rng, long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(rng() % span);
}

/// Size limits for random ring elements. For polynomials the coefficients
/// are integers in [-max_entry, max_entry] and the degree is at most
/// max_degree; integers ignore max_degree.
struct EntryBounds {
    long max_entry = 10;
    int max_degree = 2;
};

inline Integer random_element(Rng& rng, const EntryBounds& b, const Integer*) {
    return Integer(draw(rng, -b.max_entry, b.max_entry));
}

inline Polynomial random_element(Rng& rng, const EntryBounds& b, const Polynomial*) {
    const int deg = static_cast<int>(draw(rng, 0, b.max_degree));
    std::vector<mpq_class> c;
    for (int k = 0; k <= deg; ++k)
        c.emplace_back(draw(rng, -b.max_entry, b.max_entry));
    return Polynomial(std::move(c));
}

template <EuclideanRing R>
R random_element(Rng& rng, const EntryBounds& b) {
    return random_element(rng, b, static_cast<const R*>(nullptr));
}

template <EuclideanRing R>
Matrix<R> random_matrix(Rng& rng, std::size_t rows, std::size_t cols, const EntryBounds& b) {
    Matrix<R> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = random_element<R>(rng, b);
    return m;
}

namespace detail {

inline Integer small_multiplier(Rng& rng, const Integer*) {
    long c = draw(rng, 1, 2);
    return Integer(draw(rng, 0, 1) ? c : -c);
}

inline Polynomial small_multiplier(Rng& rng, const Polynomial*) {
    long c = draw(rng, 1, 2);
    return Polynomial::monomial(mpq_class(draw(rng, 0, 1) ? c : -c), static_cast<int>(draw(rng, 0, 1)));
}

inline Integer random_unit(Rng&, const Integer*) { return Integer(-1L); }

inline Polynomial random_unit(Rng& rng, const Polynomial*) {
    static const long nums[] = {-1, 2, 1, -3};
    static const long dens[] = {1, 1, 2, 1};
    auto k = static_cast<std::size_t>(draw(rng, 0, 3));
    return Polynomial(mpq_class(nums[k], dens[k]));
}

} // namespace detail

/// Product of `steps` random elementary matrices: transvections with small
/// multipliers, row swaps, and unit scalings.
template <EuclideanRing R>
Matrix<R> random_unimodular(std::size_t n, Rng& rng, std::size_t steps) {
    Matrix<R> u = Matrix<R>::identity(n);
    if (n == 0)
        return u;
    const R* tag = nullptr;
    for (std::size_t s = 0; s < steps; ++s) {
        const long kind = n < 2 ? 4 : draw(rng, 0, 4);
        if (kind <= 2) {
            auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
            auto k = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 2));
            if (k >= i)
                ++k;
            u.add_row_multiple(i, k, detail::small_multiplier(rng, tag));
        } else if (kind == 3) {
            auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
            auto k = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
            u.swap_rows(i, k);
        } else {
            auto i = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(n) - 1));
            u.scale_row(i, detail::random_unit(rng, tag));
        }
    }
    return u;
}

/// Deterministic in (n, seed, steps).
template <EuclideanRing R>
Matrix<R> random_unimodular(std::size_t n, std::uint64_t seed, std::size_t steps) {
    Rng rng(seed);
    return random_unimodular<R>(n, rng, steps);
}

} // namespace pidpair
