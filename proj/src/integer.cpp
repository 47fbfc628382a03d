#include "pidpair/integer.hpp"

#include <cctype>
#include <stdexcept>

namespace pidpair {

Integer Integer::parse(std::string_view text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
    if (i == text.size())
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j])))
            throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    std::string digits(text.substr(text[0] == '+' ? 1 : 0));
    return Integer(mpz_class(digits, 10));
}

std::pair<Integer, Integer> div_rem(const Integer& a, const Integer& b) {
    if (b.is_zero())
        throw std::domain_error("integer division by zero");
    mpz_class q, r;
    // remainder in [0, |b|)
    if (b.sign() > 0)
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
    else
        mpz_cdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.value().get_mpz_t(), b.value().get_mpz_t());
    return {Integer(std::move(q)), Integer(std::move(r))};
}

bool is_unit(const Integer& a) {
    return a.value() == 1 || a.value() == -1;
}

Integer unit_inverse(const Integer& u) {
    if (!is_unit(u))
        throw std::domain_error(u.to_string() + " is not a unit in Z");
    return u;
}

bool smaller(const Integer& a, const Integer& b) {
    return mpz_cmpabs(a.value().get_mpz_t(), b.value().get_mpz_t()) < 0;
}

Associate<Integer> normalize_unit(const Integer& a) {
    if (a.sign() < 0)
        return {Integer(-1L), -a};
    return {Integer(1L), a};
}

} // namespace pidpair
