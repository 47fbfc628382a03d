#pragma once

#include <string>

#include "pidpair/errors.hpp"
#include "pidpair/ring.hpp"

namespace pidpair {

/// Element of the fraction field of R, always held in lowest terms with a
/// unit-normalized denominator. Zero is 0/1.
template <EuclideanRing R>
class Fraction {
public:
    Fraction() : num_(R::zero()), den_(R::one()) {}
    Fraction(R value) : num_(std::move(value)), den_(R::one()) {} // NOLINT(google-explicit-constructor)
    Fraction(long value) : Fraction(R(value)) {}                 // NOLINT(google-explicit-constructor)

    /// Throws InvalidFraction when `den` is zero.
    static Fraction reduce(const R& num, const R& den) {
        if (den.is_zero())
            throw InvalidFraction("zero denominator");
        Fraction f;
        if (num.is_zero())
            return f;
        R g = gcd(num, den);
        R n = div_exact(num, g);
        R d = div_exact(den, g);
        auto [u, dn] = normalize_unit(d);
        R inv = unit_inverse(u);
        f.num_ = n * inv;
        f.den_ = std::move(dn);
        return f;
    }

    static Fraction zero() { return {}; }
    static Fraction one() { return Fraction(R::one()); }

    const R& num() const { return num_; }
    const R& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integral() const { return den_ == R::one(); }

    Fraction operator-() const {
        Fraction f = *this;
        f.num_ = -f.num_;
        return f;
    }
    /// Throws InvalidFraction on zero.
    Fraction inverse() const { return reduce(den_, num_); }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return reduce(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return reduce(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return reduce(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        return reduce(a.num_ * b.den_, a.den_ * b.num_);
    }
    Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
    Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
    Fraction& operator*=(const Fraction& o) { return *this = *this * o; }
    friend bool operator==(const Fraction&, const Fraction&) = default;

    std::string to_string() const {
        if (is_integral())
            return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    R num_;
    R den_;
};

template <EuclideanRing R>
Fraction<R> fraction_reduce(const R& num, const R& den) {
    return Fraction<R>::reduce(num, den);
}

} // namespace pidpair
