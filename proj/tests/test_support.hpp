#pragma once

#include <cstddef>

#include "pidpair/matrix.hpp"
#include "pidpair/random.hpp"

namespace pidpair::testing {

/// Random matrix, rank deficient about half of the time (product through a
/// narrower inner dimension).
template <EuclideanRing R>
Matrix<R> random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, EntryBounds bounds) {
    const std::size_t full = std::min(rows, cols);
    if (full == 0 || draw(rng, 0, 1) == 0)
        return random_matrix<R>(rng, rows, cols, bounds);
    auto inner = static_cast<std::size_t>(draw(rng, 0, static_cast<long>(full) - 1));
    EntryBounds half = bounds;
    half.max_entry = std::max(1L, bounds.max_entry / 3);
    if (half.max_degree > 1)
        half.max_degree = 1;
    return random_matrix<R>(rng, rows, inner, half) * random_matrix<R>(rng, inner, cols, half);
}

} // namespace pidpair::testing
