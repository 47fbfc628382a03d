#include "doctest.h"

#include "pidpair/fraction.hpp"
#include "pidpair/random.hpp"
#include "pidpair/ring.hpp"

using namespace pidpair;

namespace {

Polynomial poly(std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c)
        v.emplace_back(x);
    return Polynomial(std::move(v));
}

} // namespace

TEST_CASE("gcd_ext on integers") {
    auto [g, s, t] = gcd_ext(Integer(4), Integer(6));
    CHECK(g == Integer(2));
    CHECK(s * Integer(4) + t * Integer(6) == g);

    auto z = gcd_ext(Integer(0), Integer(0));
    CHECK(z.g.is_zero());
    CHECK(z.s.is_zero());
    CHECK(z.t.is_zero());

    auto n = gcd_ext(Integer(-12), Integer(0));
    CHECK(n.g == Integer(12));
    CHECK(n.s * Integer(-12) == n.g);
}

TEST_CASE("gcd_ext on Q[x]") {
    // x^2 - 1 = (x - 1)(x + 1)
    Polynomial a = poly({-1, 0, 1});
    Polynomial b = poly({-1, 1});
    auto [g, s, t] = gcd_ext(a, b);
    CHECK(g == poly({-1, 1}));
    CHECK(s * a + t * b == g);

    // 2x + 4 and 3x + 6 share x + 2
    auto r = gcd_ext(poly({4, 2}), poly({6, 3}));
    CHECK(r.g == poly({2, 1}));
    CHECK(r.s * poly({4, 2}) + r.t * poly({6, 3}) == r.g);
}

TEST_CASE("normalize_unit") {
    auto a = normalize_unit(Integer(-6));
    CHECK(a.unit == Integer(-1));
    CHECK(a.normal == Integer(6));
    auto z = normalize_unit(Integer(0));
    CHECK(z.unit == Integer(1));
    CHECK(z.normal.is_zero());

    auto p = normalize_unit(poly({4, 2}));
    CHECK(p.unit == Polynomial(2L));
    CHECK(p.normal == poly({2, 1}));
    CHECK(p.unit * p.normal == poly({4, 2}));
    auto again = normalize_unit(p.normal);
    CHECK(again.unit == Polynomial::one());
    CHECK(again.normal == p.normal);

    CHECK(normalize_unit(Polynomial::zero()).unit == Polynomial::one());
}

TEST_CASE("divides") {
    CHECK(divides(Integer(2), Integer(6)));
    CHECK_FALSE(divides(Integer(0), Integer(5)));
    CHECK(divides(Integer(0), Integer(0)));
    CHECK(divides(Integer(7), Integer(0)));
    CHECK_FALSE(divides(Integer(4), Integer(6)));
    CHECK(divides(poly({-1, 1}), poly({-1, 0, 1})));
    CHECK_FALSE(divides(poly({1, 1, 1}), poly({-1, 0, 1})));
    CHECK(divides(Polynomial(3L), poly({5, 7})));
}

TEST_CASE("fraction_reduce") {
    auto f = fraction_reduce(Integer(6), Integer(4));
    CHECK(f.num() == Integer(3));
    CHECK(f.den() == Integer(2));

    auto z = fraction_reduce(Integer(0), Integer(5));
    CHECK(z.num().is_zero());
    CHECK(z.den() == Integer(1));

    auto neg = fraction_reduce(Integer(3), Integer(-6));
    CHECK(neg.num() == Integer(-1));
    CHECK(neg.den() == Integer(2));

    auto p = fraction_reduce(poly({-1, 0, 1}), poly({-1, 1}));
    CHECK(p.num() == poly({1, 1}));
    CHECK(p.den() == Polynomial::one());

    auto q = fraction_reduce(poly({1}), poly({0, 2}));
    CHECK(q.den() == poly({0, 1}));
    CHECK(q.num() == Polynomial(mpq_class(1, 2)));

    CHECK_THROWS_AS(fraction_reduce(Integer(1), Integer(0)), InvalidFraction);
    CHECK_THROWS_AS(Fraction<Integer>().inverse(), InvalidFraction);
}

TEST_CASE("scalar text syntax") {
    CHECK(Integer::parse("-42") == Integer(-42));
    CHECK(Integer::parse("+7") == Integer(7));
    CHECK_THROWS(Integer::parse("4x"));
    CHECK_THROWS(Integer::parse("-"));
    CHECK_THROWS(Integer::parse(""));

    CHECK(Polynomial::parse("poly[1,-2/4,3]").to_string() == "poly[1,-1/2,3]");
    CHECK(Polynomial::parse("poly[]").is_zero());
    CHECK(Polynomial::parse("poly[0,0]").is_zero());
    CHECK(Polynomial::parse("5/3") == Polynomial(mpq_class(5, 3)));
    CHECK(Polynomial::zero().to_string() == "poly[]");
    CHECK_THROWS(Polynomial::parse("poly[1,"));
    CHECK_THROWS(Polynomial::parse("poly[1,]"));
    CHECK_THROWS(Polynomial::parse("poly[1/0]"));
    CHECK_THROWS(Polynomial::parse("poly[1;2]"));
}

TEST_CASE("Euclidean division keeps remainders small") {
    auto [q, r] = div_rem(Integer(-7), Integer(3));
    CHECK(q * Integer(3) + r == Integer(-7));
    CHECK(r == Integer(2));
    auto [q2, r2] = div_rem(Integer(7), Integer(-3));
    CHECK(q2 * Integer(-3) + r2 == Integer(7));
    CHECK(r2 == Integer(1));

    auto [pq, pr] = div_rem(poly({1, 2, 3, 4}), poly({1, 1}));
    CHECK(pq * poly({1, 1}) + pr == poly({1, 2, 3, 4}));
    CHECK(pr.degree() < 1);
}

template <class R>
void ring_properties(EntryBounds bounds, std::uint64_t seed) {
    Rng rng(seed);
    for (int trial = 0; trial < 200; ++trial) {
        R a = random_element<R>(rng, bounds);
        R b = random_element<R>(rng, bounds);
        auto [g, s, t] = gcd_ext(a, b);
        CHECK(s * a + t * b == g);
        CHECK(divides(g, a));
        CHECK(divides(g, b));
        CHECK(g.is_zero() == (a.is_zero() && b.is_zero()));
        CHECK(normalize_unit(g).normal == g);
        CHECK(gcd(a, b) == g);

        auto na = normalize_unit(a);
        CHECK(na.unit * na.normal == a);
        CHECK(is_unit(na.unit));
        CHECK(normalize_unit(na.normal).normal == na.normal);

        if (!a.is_zero() && !b.is_zero()) {
            auto x = Fraction<R>::reduce(a, b);
            auto y = Fraction<R>::reduce(b, a);
            CHECK(x * y == Fraction<R>::one());
            CHECK(gcd(x.num(), x.den()) == R::one());
            CHECK(normalize_unit(x.den()).normal == x.den());
            auto z = x + y - y;
            CHECK(z == x);
            CHECK(x / x == Fraction<R>::one());
            CHECK(lcm(a, b) * g == normalize_unit(a * b).normal);
        }
    }
}

TEST_CASE("ring properties over Z") {
    ring_properties<Integer>({1000, 0}, 7);
}

TEST_CASE("ring properties over Q[x]") {
    ring_properties<Polynomial>({5, 3}, 11);
}
