#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "pidpair/associate.hpp"

namespace pidpair {

/// Arbitrary-precision integer, the ring Z.
class Integer {
public:
    Integer() = default;
    Integer(long v) : v_(v) {} // NOLINT(google-explicit-constructor)
    explicit Integer(mpz_class v) : v_(std::move(v)) {}

    static Integer zero() { return Integer(0L); }
    static Integer one() { return Integer(1L); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    const mpz_class& value() const { return v_; }

    Integer operator-() const { return Integer(mpz_class(-v_)); }
    Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
    Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
    Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

    friend Integer operator+(Integer a, const Integer& b) { return a += b; }
    friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
    friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
    friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Decimal with optional leading minus.
    std::string to_string() const { return v_.get_str(); }
    /// Throws std::invalid_argument on malformed input.
    static Integer parse(std::string_view text);

private:
    mpz_class v_;
};

/// Euclidean division with remainder in [0, |b|). `b` must be nonzero.
std::pair<Integer, Integer> div_rem(const Integer& a, const Integer& b);
bool is_unit(const Integer& a);
Integer unit_inverse(const Integer& u);
/// Strictly smaller Euclidean size (absolute value).
bool smaller(const Integer& a, const Integer& b);
Associate<Integer> normalize_unit(const Integer& a);
/// The only units are +-1, so there is nothing to tidy.
inline Integer content_unit(std::span<const Integer>) { return Integer(1); }

inline std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.to_string(); }

inline constexpr std::string_view ring_tag(const Integer*) { return "int"; }

} // namespace pidpair
