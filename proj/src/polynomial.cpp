#include "pidpair/polynomial.hpp"

#include <cctype>
#include <stdexcept>

namespace pidpair {

namespace {

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_integer_literal(std::string_view s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            return false;
    return true;
}

mpz_class parse_mpz(std::string_view s) {
    if (!is_integer_literal(s))
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    if (s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

std::string format_rational(const mpq_class& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

mpq_class parse_rational(std::string_view text) {
    text = strip(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return mpq_class(parse_mpz(text));
    mpz_class num = parse_mpz(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw std::invalid_argument("sign not allowed in denominator: '" + std::string(text) + "'");
    mpz_class den = parse_mpz(den_text);
    if (den == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

// mpq equality and arithmetic assume canonical operands, so inputs are
// canonicalized on the way in
Polynomial::Polynomial(mpq_class c) {
    c.canonicalize();
    if (c != 0)
        c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& c : c_)
        c.canonicalize();
    trim();
}

Polynomial Polynomial::monomial(mpq_class c, int k) {
    if (c == 0)
        return {};
    std::vector<mpq_class> v(static_cast<std::size_t>(k) + 1);
    v.back() = std::move(c);
    return Polynomial(std::move(v));
}

mpq_class Polynomial::coeff(int k) const {
    if (k < 0 || k > degree())
        return 0;
    return c_[static_cast<std::size_t>(k)];
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    // Multiply integer numerators over a common denominator: mpq arithmetic
    // would canonicalize (a gcd) on every term.
    auto scaled = [](const std::vector<mpq_class>& c, mpz_class& den) {
        den = 1;
        for (const auto& x : c)
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
            out[i] *= c[i].get_num();
        }
        return out;
    };
    mpz_class da, db;
    const auto na = scaled(a.c_, da);
    const auto nb = scaled(b.c_, db);
    std::vector<mpz_class> acc(na.size() + nb.size() - 1);
    for (std::size_t i = 0; i < na.size(); ++i) {
        if (na[i] == 0)
            continue;
        for (std::size_t j = 0; j < nb.size(); ++j)
            mpz_addmul(acc[i + j].get_mpz_t(), na[i].get_mpz_t(), nb[j].get_mpz_t());
    }
    const mpz_class den = da * db;
    std::vector<mpq_class> r(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        r[k] = mpq_class(acc[k], den);
        r[k].canonicalize();
    }
    return Polynomial(std::move(r));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::scale(const mpq_class& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_)
        x *= c;
    return *this;
}

std::string Polynomial::to_string() const {
    std::string out = "poly[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i)
            out += ',';
        out += format_rational(c_[i]);
    }
    out += ']';
    return out;
}

Polynomial Polynomial::parse(std::string_view text) {
    text = strip(text);
    constexpr std::string_view prefix = "poly[";
    if (text.substr(0, prefix.size()) != prefix)
        return Polynomial(parse_rational(text));
    if (text.back() != ']')
        throw std::invalid_argument("unterminated polynomial '" + std::string(text) + "'");
    std::string_view body = strip(text.substr(prefix.size(), text.size() - prefix.size() - 1));
    std::vector<mpq_class> coeffs;
    while (!body.empty()) {
        auto comma = body.find(',');
        std::string_view item = body.substr(0, comma);
        if (strip(item).empty())
            throw std::invalid_argument("empty coefficient in '" + std::string(text) + "'");
        coeffs.push_back(parse_rational(item));
        if (comma == std::string_view::npos)
            break;
        body.remove_prefix(comma + 1);
        if (strip(body).empty())
            throw std::invalid_argument("trailing comma in '" + std::string(text) + "'");
    }
    return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> div_rem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial{}, a};
    std::vector<mpq_class> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const int db = b.degree();
    const mpq_class lead_inv = 1 / b.leading();
    std::vector<mpq_class> quot(static_cast<std::size_t>(a.degree() - db) + 1);
    for (int k = a.degree() - db; k >= 0; --k) {
        mpq_class q = rem[static_cast<std::size_t>(k + db)] * lead_inv;
        if (q == 0)
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
        quot[static_cast<std::size_t>(k)] = std::move(q);
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

bool is_unit(const Polynomial& a) {
    return a.degree() == 0;
}

Polynomial unit_inverse(const Polynomial& u) {
    if (!is_unit(u))
        throw std::domain_error(u.to_string() + " is not a unit in Q[x]");
    return Polynomial(mpq_class(1 / u.leading()));
}

bool smaller(const Polynomial& a, const Polynomial& b) {
    return a.degree() < b.degree();
}

Associate<Polynomial> normalize_unit(const Polynomial& a) {
    if (a.is_zero() || a.leading() == 1)
        return {Polynomial::one(), a};
    Polynomial monic = a;
    monic.scale(1 / a.leading());
    return {Polynomial(a.leading()), std::move(monic)};
}

Polynomial content_unit(std::span<const Polynomial> v) {
    mpz_class den = 1, num = 0;
    const mpq_class* first = nullptr;
    for (const auto& p : v)
        for (const auto& c : p.coeffs()) {
            if (c == 0)
                continue;
            if (!first)
                first = &c;
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
            mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        }
    if (!first)
        return Polynomial::one();
    mpq_class c(den, num);
    c.canonicalize();
    if (*first < 0)
        c = -c;
    return Polynomial(c);
}

} // namespace pidpair
