#pragma once

#include <concepts>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "pidpair/associate.hpp"
#include "pidpair/errors.hpp"
#include "pidpair/integer.hpp"
#include "pidpair/polynomial.hpp"

namespace pidpair {

/// A Euclidean domain with a chosen canonical associate per class.
///
/// Everything downstream (normal forms, submodules, pairs) is written
/// against this concept; `Integer` and `Polynomial` are the two models.
template <class R>
concept EuclideanRing = std::regular<R> && requires(const R& a, const R& b, std::string_view s) {
    { R::zero() } -> std::same_as<R>;
    { R::one() } -> std::same_as<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a + b } -> std::same_as<R>;
    { a - b } -> std::same_as<R>;
    { a * b } -> std::same_as<R>;
    { -a } -> std::same_as<R>;
    { div_rem(a, b) } -> std::same_as<std::pair<R, R>>;
    { is_unit(a) } -> std::convertible_to<bool>;
    { unit_inverse(a) } -> std::same_as<R>;
    { smaller(a, b) } -> std::convertible_to<bool>;
    { normalize_unit(a) } -> std::same_as<Associate<R>>;
    { a.to_string() } -> std::same_as<std::string>;
    { R::parse(s) } -> std::same_as<R>;
    { ring_tag(static_cast<const R*>(nullptr)) } -> std::convertible_to<std::string_view>;
    { content_unit(std::span<const R>{}) } -> std::same_as<R>;
};

template <EuclideanRing R>
constexpr std::string_view ring_tag_of() {
    return ring_tag(static_cast<const R*>(nullptr));
}

/// Result of the extended Euclidean algorithm: s*a + t*b = g.
template <class R>
struct Bezout {
    R g;
    R s;
    R t;
};

/// Extended gcd with g unit-normalized; gcd_ext(0, 0) = (0, 0, 0).
template <EuclideanRing R>
Bezout<R> gcd_ext(const R& a, const R& b) {
    // invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
    R r0 = a, r1 = b;
    R s0 = R::one(), s1 = R::zero();
    R t0 = R::zero(), t1 = R::one();
    auto normalize_row = [](R& r, R& s, R& t) {
        // keeps Q[x] remainder sequences monic; a no-op up to sign over Z
        auto [u, g] = normalize_unit(r);
        if (u != R::one()) {
            R inv = unit_inverse(u);
            r = std::move(g);
            s = s * inv;
            t = t * inv;
        }
    };
    if (!r1.is_zero())
        normalize_row(r1, s1, t1);
    while (!r1.is_zero()) {
        auto [q, r] = div_rem(r0, r1);
        R s2 = s0 - q * s1;
        R t2 = t0 - q * t1;
        if (!r.is_zero())
            normalize_row(r, s2, t2);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, std::move(s2));
        t0 = std::exchange(t1, std::move(t2));
    }
    if (r0.is_zero())
        return {R::zero(), R::zero(), R::zero()};
    normalize_row(r0, s0, t0);
    return {std::move(r0), std::move(s0), std::move(t0)};
}

template <EuclideanRing R>
R gcd(const R& a, const R& b) {
    R x = a, y = b;
    while (!y.is_zero()) {
        R r = div_rem(x, y).second;
        x = std::exchange(y, std::move(r));
    }
    return normalize_unit(x).normal;
}

/// Divides `b` by `a`, throwing if the quotient is not in the ring.
template <EuclideanRing R>
R div_exact(const R& b, const R& a) {
    if (a.is_zero()) {
        if (b.is_zero())
            return R::zero();
        throw InvalidFraction("division by zero");
    }
    auto [q, r] = div_rem(b, a);
    if (!r.is_zero())
        throw NoSolution("inexact division of " + b.to_string() + " by " + a.to_string());
    return q;
}

/// Normalized least common multiple; lcm(0, x) = 0.
template <EuclideanRing R>
R lcm(const R& a, const R& b) {
    if (a.is_zero() || b.is_zero())
        return R::zero();
    return normalize_unit(div_exact(a, gcd(a, b)) * b).normal;
}

/// True iff b = a*c for some c. Only zero is divisible by zero.
template <EuclideanRing R>
bool divides(const R& a, const R& b) {
    if (a.is_zero())
        return b.is_zero();
    return div_rem(b, a).second.is_zero();
}

template <EuclideanRing R>
bool associates(const R& a, const R& b) {
    return normalize_unit(a).normal == normalize_unit(b).normal;
}

template <EuclideanRing R>
R normalized(const R& a) {
    return normalize_unit(a).normal;
}

} // namespace pidpair
