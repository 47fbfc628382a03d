#include "doctest.h"

#include "pidpair/generators.hpp"
#include "pidpair/oracles.hpp"
#include "pidpair/submodule.hpp"

using namespace pidpair;

using IM = Matrix<Integer>;
using Mod = Submodule<Integer>;

namespace {

Mod span(const IM& g) {
    return Mod::from_generators(g.rows(), g);
}

} // namespace

TEST_CASE("from_generators") {
    auto m = span(IM{{2, 4}, {0, 0}});
    CHECK(m.rank() == 1);
    CHECK(m.basis() == IM{{2}, {0}});

    auto z = span(IM(2, 0));
    CHECK(z.is_zero());
    CHECK(z.ambient_rank() == 2);

    auto w = span(IM::identity(2));
    CHECK(w.basis() == IM::identity(2));
    CHECK(w == Mod::whole(2));

    CHECK_THROWS_AS(Mod::from_generators(3, IM::identity(2)), DimensionMismatch);
    CHECK_THROWS_AS(Mod::from_basis(IM{{1, 2}, {2, 4}}), HypothesisViolation);
}

TEST_CASE("sum") {
    auto a = span(IM{{2}, {0}});
    auto b = span(IM{{3}, {0}});
    CHECK(sum(a, b) == span(IM{{1}, {0}}));
    CHECK(sum(a, b).basis() == IM{{1}, {0}});
    CHECK(sum(a, Mod::zero(2)) == a);
    CHECK(sum(span(IM{{1}, {0}}), span(IM{{0}, {1}})) == Mod::whole(2));
    CHECK_THROWS_AS(sum(a, Mod::zero(3)), DimensionMismatch);
}

TEST_CASE("intersect") {
    auto a = span(IM{{2, 0}, {0, 1}});
    auto b = span(IM{{3, 0}, {0, 4}});
    // diagonal lattices intersect coordinatewise: lcm(2,3), lcm(1,4)
    auto d = intersect(a, b);
    CHECK(d == span(IM{{6, 0}, {0, 4}}));
    CHECK(a.contains(d));
    CHECK(b.contains(d));
    CHECK(intersect(a, a) == a);
    CHECK(intersect(span(IM{{1}, {0}}), span(IM{{0}, {1}})).is_zero());
    CHECK(intersect(a, Mod::zero(2)).is_zero());
    CHECK_THROWS_AS(intersect(a, Mod::zero(1)), DimensionMismatch);
}

TEST_CASE("closure") {
    CHECK(closure(span(IM{{2}, {0}})) == span(IM{{1}, {0}}));
    // invariant factors (1, 6): saturation is everything
    CHECK(closure(span(IM{{2, 0}, {0, 3}})) == Mod::whole(2));
    auto pure = span(IM{{2}, {3}});
    CHECK(closure(pure) == pure);
    CHECK(closure(Mod::zero(3)).is_zero());
    CHECK(closure(span(IM{{4}, {6}})) == span(IM{{2}, {3}}));
}

TEST_CASE("is_pure") {
    CHECK_FALSE(is_pure(span(IM{{2}, {0}})));
    CHECK(is_pure(span(IM{{2}, {3}})));
    CHECK(oracle::invariant_factors_by_minors(IM{{2}, {3}}) == std::vector<Integer>{1});
    CHECK(is_pure(Mod::zero(2)));
    CHECK(is_pure(Mod::whole(3)));
}

TEST_CASE("contains") {
    auto m = span(IM{{2, 0}, {0, 1}});
    CHECK(m.contains(std::vector<Integer>{4, 7}));
    CHECK_FALSE(m.contains(std::vector<Integer>{3, 0}));
    CHECK(m.contains(std::vector<Integer>{0, 0}));
    CHECK(Mod::zero(2).contains(std::vector<Integer>{0, 0}));
    CHECK_FALSE(Mod::zero(2).contains(std::vector<Integer>{0, 1}));
    CHECK_THROWS_AS(m.contains(std::vector<Integer>{1}), DimensionMismatch);
}

TEST_CASE("quotient_invariants") {
    auto m = span(IM{{2, 0}, {0, 1}});
    auto n = span(IM{{6, 0}, {0, 4}});
    // coordinates diag(3,4); minors give (1, 12)
    CHECK(oracle::invariant_factors_by_minors(IM{{3, 0}, {0, 4}}) == std::vector<Integer>{1, 12});
    auto q = quotient_invariants(m, n);
    CHECK(q.torsion == std::vector<Integer>{12});
    CHECK(q.free_rank == 0);

    auto same = quotient_invariants(m, m);
    CHECK(same.torsion.empty());
    CHECK(same.free_rank == 0);

    auto free = quotient_invariants(Mod::whole(2), Mod::zero(2));
    CHECK(free.torsion.empty());
    CHECK(free.free_rank == 2);

    CHECK_THROWS_AS(quotient_invariants(n, m), HypothesisViolation);
}

TEST_CASE("pure_sum_decompose examples") {
    {
        auto x1 = span(IM{{2}, {0}});
        auto x2 = span(IM{{3}, {0}});
        auto d = pure_sum_decompose(x1, x2);
        CHECK(d.dbar == span(IM{{1}, {0}}));
        CHECK(d.k1.is_zero());
        CHECK(d.k2.is_zero());
        CHECK(d.h1 == x1);
        CHECK(d.h2 == x2);
    }
    {
        auto x1 = span(IM{{1}, {0}});
        auto x2 = span(IM{{0}, {1}});
        auto d = pure_sum_decompose(x1, x2);
        CHECK(d.dbar.is_zero());
        CHECK(d.k1 == x1);
        CHECK(d.k2 == x2);
    }
    {
        auto x1 = span(IM{{2, 0}, {0, 1}});
        auto x2 = span(IM{{3, 0}, {0, 4}});
        auto d = pure_sum_decompose(x1, x2);
        CHECK(d.dbar == Mod::whole(2));
        CHECK(d.k1.is_zero());
        CHECK(d.k2.is_zero());
    }
    CHECK_THROWS_AS(pure_sum_decompose(span(IM{{2}, {0}}), span(IM{{0}, {2}})), HypothesisViolation);
}

template <class R>
void closure_laws(std::uint64_t seed, const InstanceLimits& lim, int trials) {
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        auto n = static_cast<std::size_t>(draw(rng, 1, static_cast<long>(lim.max_dim)));
        auto a = random_submodule<R>(rng, n, lim);
        auto b = random_submodule<R>(rng, n, lim);
        auto ca = closure(a), cb = closure(b);

        CHECK(ca.contains(a));
        CHECK(ca.rank() == a.rank());
        CHECK(is_pure(ca));
        CHECK(closure(ca) == ca);
        CHECK(is_pure(a) == (ca == a));

        // monotone
        auto ab = intersect(a, b);
        CHECK(ca.contains(closure(ab)));

        CHECK(closure(ab) == intersect(ca, cb));
        auto s = sum(a, b);
        CHECK(closure(s).contains(sum(ca, cb)));
        if (is_pure(s))
            CHECK(s == sum(ca, cb));
    }
}

TEST_CASE("closure laws over Z") {
    closure_laws<Integer>(101, {4, {6, 0}, 10}, 80);
}

TEST_CASE("closure laws over Q[x]") {
    closure_laws<Polynomial>(102, {3, {3, 1}, 6}, 15);
}

template <class R>
void check_decomposition(const Submodule<R>& x1, const Submodule<R>& x2) {
    auto d = pure_sum_decompose(x1, x2);
    auto total = sum(x1, x2);
    const std::size_t n = total.ambient_rank();
    CHECK(d.dbar.rank() + d.k1.rank() + d.k2.rank() == total.rank());
    CHECK(intersect(d.dbar, d.k1).is_zero());
    CHECK(intersect(d.dbar, d.k2).is_zero());
    CHECK(intersect(d.k1, d.k2).is_zero());
    CHECK(sum(sum(d.dbar, d.k1), d.k2) == total);
    CHECK(x1.contains(d.k1));
    CHECK(x2.contains(d.k2));
    CHECK(is_pure(d.k1));
    CHECK(is_pure(d.k2));
    CHECK(d.dbar == closure(intersect(x1, x2)));
    CHECK(sum(d.h1, d.h2) == d.dbar);
    // X_i = (closure(D) n X_i) (+) K_i
    auto h1 = intersect(d.dbar, x1), h2 = intersect(d.dbar, x2);
    CHECK(h1 == d.h1);
    CHECK(h2 == d.h2);
    CHECK(sum(h1, d.k1) == x1);
    CHECK(h1.rank() + d.k1.rank() == x1.rank());
    CHECK(sum(h2, d.k2) == x2);
    CHECK(h2.rank() + d.k2.rank() == x2.rank());
    CHECK(d.k1.ambient_rank() == n);
}

template <class R>
void pure_sum_properties(std::uint64_t seed, const InstanceLimits& lim, int trials) {
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        auto p = random_valid_pair<R>(rng, lim);
        const std::size_t n = p.x1.rows();
        check_decomposition(Submodule<R>::from_generators(n, p.x1), Submodule<R>::from_generators(n, p.x2));
    }
}

TEST_CASE("pure-sum decomposition identities over Z") {
    pure_sum_properties<Integer>(201, {5, {10, 0}, 10}, 60);
}

TEST_CASE("pure-sum decomposition identities over Q[x]") {
    pure_sum_properties<Polynomial>(202, {3, {3, 2}, 4}, 10);
}

TEST_CASE("quotient invariants are invariant under automorphisms") {
    Rng rng(301);
    InstanceLimits lim{4, {8, 0}, 10};
    for (int trial = 0; trial < 40; ++trial) {
        auto n = static_cast<std::size_t>(draw(rng, 1, 4));
        auto m = random_submodule<Integer>(rng, n, lim);
        // N inside M: images of random combinations of M's basis
        IM comb = random_matrix<Integer>(rng, m.rank(), static_cast<std::size_t>(draw(rng, 0, 4)), {6, 0});
        auto sub = Mod::from_generators(n, m.basis() * comb);
        auto q = quotient_invariants(m, sub);
        for (std::size_t i = 0; i + 1 < q.torsion.size(); ++i)
            CHECK(divides(q.torsion[i], q.torsion[i + 1]));
        for (const auto& x : q.torsion) {
            CHECK_FALSE(is_unit(x));
            CHECK_FALSE(x.is_zero());
        }
        IM u = random_unimodular<Integer>(n, rng, 20);
        auto q2 = quotient_invariants(Mod::from_generators(n, u * m.basis()), Mod::from_generators(n, u * sub.basis()));
        CHECK(q2 == q);
    }
}
