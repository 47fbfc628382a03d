#pragma once

#include <gmpxx.h>

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pidpair/associate.hpp"

namespace pidpair {

/// Univariate polynomial with exact rational coefficients, the ring Q[x].
///
/// Coefficients are stored lowest degree first with no trailing zeros, so
/// the zero polynomial is the empty list and `degree()` is -1 for it.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) : Polynomial(mpq_class(c)) {} // NOLINT(google-explicit-constructor)
    explicit Polynomial(mpq_class c);
    explicit Polynomial(std::vector<mpq_class> coeffs);

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(1L); }
    /// The monomial c * x^k.
    static Polynomial monomial(mpq_class c, int k);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    /// Coefficient of x^k, zero past the degree.
    mpq_class coeff(int k) const;
    const mpq_class& leading() const { return c_.back(); }

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& scale(const mpq_class& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// `poly[c0,c1,...,cd]` with reduced `p/q` coefficients; zero is `poly[]`.
    std::string to_string() const;
    /// Accepts `poly[...]` or a bare rational constant. Throws
    /// std::invalid_argument on malformed input.
    static Polynomial parse(std::string_view text);

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Long division: a = q*b + r with deg r < deg b. `b` must be nonzero.
std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a, const Polynomial& b);
bool is_unit(const Polynomial& a);
Polynomial unit_inverse(const Polynomial& u);
/// Strictly smaller Euclidean size (degree, zero below every constant).
bool smaller(const Polynomial& a, const Polynomial& b);
Associate<Polynomial> normalize_unit(const Polynomial& a);
/// Nonzero constant c such that c*v has integer coefficients with no common
/// factor and a positive first nonzero coefficient; 1 for the zero vector.
Polynomial content_unit(std::span<const Polynomial> v);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& a) { return os << a.to_string(); }

inline constexpr std::string_view ring_tag(const Polynomial*) { return "polyq"; }

/// Reduced `p/q`, or `p` when q = 1.
std::string format_rational(const mpq_class& q);
/// Throws std::invalid_argument on malformed input.
mpq_class parse_rational(std::string_view text);

} // namespace pidpair
