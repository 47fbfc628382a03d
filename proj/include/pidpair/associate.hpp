#pragma once

namespace pidpair {

/// `value = unit * normal`, where `normal` is the canonical associate
/// (nonnegative integer, monic polynomial, or zero with unit one).
template <class R>
struct Associate {
    R unit;
    R normal;
};

} // namespace pidpair
