#include <doctest.h>

#include <stdexcept>

#include "dscode/code.hpp"
#include "dscode/poly.hpp"
#include "dscode/rng.hpp"
#include "test_util.hpp"

using namespace dscode;
using testutil::prefix_grid;
using testutil::random_reduced_poly;

TEST_CASE("multivariate evaluation") {
    PrimeField f3(3);
    MultiPoly p(f3, 2);  // X1 + X2
    p.add_term({1, 0}, Fp{1});
    p.add_term({0, 1}, Fp{1});
    CHECK(p.eval({Fp{1}, Fp{2}}).v == 0);

    MultiPoly zero(f3, 2);
    CHECK(zero.eval({Fp{2}, Fp{2}}).v == 0);

    PrimeField f5(5);
    MultiPoly q(f5, 2);  // X1^2 X2
    q.add_term({2, 1}, Fp{1});
    CHECK(q.eval({Fp{2}, Fp{3}}).v == 2);

    CHECK_THROWS_AS(p.eval({Fp{1}}), std::invalid_argument);
}

TEST_CASE("univariate interpolation") {
    PrimeField f5(5);
    SUBCASE("single point gives the constant") {
        UniPoly c = interpolate_univariate(f5, {{Fp{0}, Fp{4}}});
        CHECK(c.degree() == 0);
        CHECK(c.coeff(0).v == 4);
    }
    SUBCASE("identity function") {
        UniPoly x = interpolate_univariate(f5, {{Fp{0}, Fp{0}}, {Fp{1}, Fp{1}}, {Fp{2}, Fp{2}}});
        CHECK(x == UniPoly(f5, {Fp{0}, Fp{1}}));
    }
    SUBCASE("re-evaluation roundtrip") {
        PrimeField f7(7);
        std::vector<std::pair<Fp, Fp>> pts = {{Fp{0}, Fp{1}}, {Fp{1}, Fp{2}}, {Fp{3}, Fp{3}}};
        UniPoly g = interpolate_univariate(f7, pts);
        CHECK(g.degree() <= 2);
        for (auto [x, y] : pts) CHECK(g.eval(x) == y);
    }
    SUBCASE("repeated abscissa rejected") {
        CHECK_THROWS_AS(interpolate_univariate(f5, {{Fp{1}, Fp{0}}, {Fp{1}, Fp{2}}}),
                        std::invalid_argument);
    }
}

TEST_CASE("univariate division") {
    PrimeField f7(7);
    SplitMix64 rng(11);
    for (int t = 0; t < 50; ++t) {
        std::vector<Fp> ac(1 + rng.below(6)), bc(1 + rng.below(4));
        for (auto& c : ac) c = Fp{rng.below(7)};
        for (auto& c : bc) c = Fp{rng.below(7)};
        UniPoly a(f7, ac), b(f7, bc);
        if (b.is_zero()) {
            CHECK_THROWS_AS(a.divrem(b), std::domain_error);
            continue;
        }
        auto [q, r] = a.divrem(b);
        CHECK(q.mul(b).add(r) == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("grid interpolation base cases") {
    PrimeField f2(2);
    Grid g = prefix_grid(f2, {2, 2});
    SUBCASE("zero table") {
        MultiPoly p = grid_interpolate(g, std::vector<Fp>(4, Fp{0}));
        CHECK(p.is_zero());
    }
    SUBCASE("X1*X2 on {0,1}^2 comes back exactly") {
        // canonical order: (0,0),(0,1),(1,0),(1,1)
        MultiPoly p = grid_interpolate(g, {Fp{0}, Fp{0}, Fp{0}, Fp{1}});
        MultiPoly expect(f2, 2);
        expect.add_term({1, 1}, Fp{1});
        CHECK(p == expect);
    }
    SUBCASE("table size checked") {
        CHECK_THROWS_AS(grid_interpolate(g, std::vector<Fp>(3, Fp{0})), std::invalid_argument);
    }
}

TEST_CASE("grid interpolation roundtrips on random instances") {
    SplitMix64 rng(2024);
    PrimeField f5(5);
    Grid g3 = prefix_grid(f5, {3, 3});
    for (int t = 0; t < 20; ++t) {
        std::vector<Fp> table(9);
        for (auto& v : table) v = Fp{rng.below(5)};
        MultiPoly p = grid_interpolate(g3, table);
        CHECK(p.degree_in(0) <= 2);
        CHECK(p.degree_in(1) <= 2);
        CHECK(evaluate_on_grid(p, g3) == table);
    }
    // Interpolating an evaluation of a reduced polynomial returns it exactly.
    for (std::uint64_t pmod : {2, 5, 7}) {
        PrimeField f(pmod);
        Grid g = prefix_grid(f, {2, std::min<std::size_t>(pmod, 3), 2});
        for (int t = 0; t < 20; ++t) {
            MultiPoly p = random_reduced_poly(g, rng, 6);
            CHECK(grid_interpolate(g, evaluate_on_grid(p, g)) == p);
        }
    }
}

TEST_CASE("individual degree reduction") {
    SUBCASE("already reduced is unchanged") {
        PrimeField f5(5);
        Grid g = prefix_grid(f5, {3});
        MultiPoly p(f5, 1);
        p.add_term({2}, Fp{4});
        p.add_term({0}, Fp{1});
        CHECK(reduce_individual_degrees(p, g) == p);
    }
    SUBCASE("X^2 over {0,1} becomes X") {
        PrimeField f2(2);
        Grid g = prefix_grid(f2, {2});
        MultiPoly p(f2, 1);
        p.add_term({2}, Fp{1});
        MultiPoly expect(f2, 1);
        expect.add_term({1}, Fp{1});
        CHECK(reduce_individual_degrees(p, g) == expect);
    }
    SUBCASE("X^3 over {0,1,2} in F5 agrees on the grid with degree <= 2") {
        PrimeField f5(5);
        Grid g = prefix_grid(f5, {3});
        MultiPoly p(f5, 1);
        p.add_term({3}, Fp{1});
        MultiPoly r = reduce_individual_degrees(p, g);
        CHECK(r.degree_in(0) <= 2);
        for (std::uint64_t x = 0; x < 3; ++x) {
            CHECK(r.eval({Fp{x}}) == p.eval({Fp{x}}));
        }
    }
}

TEST_CASE("degree reduction preserves the function and shrinks the support") {
    SplitMix64 rng(77);
    PrimeField f5(5);
    Grid g = prefix_grid(f5, {3, 2});
    for (int t = 0; t < 40; ++t) {
        // Random polynomial with inflated exponents.
        MultiPoly p(f5, 2);
        std::size_t terms = 1 + rng.below(5);
        for (std::size_t k = 0; k < terms; ++k) {
            p.add_term({static_cast<std::uint32_t>(rng.below(7)),
                        static_cast<std::uint32_t>(rng.below(6))},
                       Fp{rng.below(5)});
        }
        MultiPoly r = reduce_individual_degrees(p, g);
        CHECK(r.degree_in(0) < 3);
        CHECK(r.degree_in(1) < 2);
        CHECK(evaluate_on_grid(r, g) == evaluate_on_grid(p, g));
        // Every output monomial divides some input monomial.
        for (const auto& [beta, cb] : r.terms()) {
            bool dominated = false;
            for (const auto& [alpha, ca] : p.terms()) {
                if (divides(beta, alpha)) {
                    dominated = true;
                    break;
                }
            }
            CHECK(dominated);
        }
    }
}

TEST_CASE("leading monomial under graded lex") {
    PrimeField f5(5);
    MultiPoly p(f5, 2);
    p.add_term({1, 0}, Fp{1});
    p.add_term({0, 1}, Fp{1});
    CHECK(p.leading_monomial() == ExpVec{1, 0});

    MultiPoly c = MultiPoly::constant(f5, 3, Fp{2});
    CHECK(c.leading_monomial() == ExpVec{0, 0, 0});

    MultiPoly q(f5, 2);
    q.add_term({2, 0}, Fp{1});
    q.add_term({0, 3}, Fp{1});
    CHECK(q.leading_monomial() == ExpVec{0, 3});

    MultiPoly zero(f5, 2);
    CHECK_THROWS_AS(zero.leading_monomial(), std::domain_error);
}

TEST_CASE("support of a nonzero reduced polynomial dominates nabla of its leading monomial") {
    SplitMix64 rng(31337);
    for (std::uint64_t pmod : {2, 3, 5}) {
        PrimeField f(pmod);
        Grid g = prefix_grid(f, {std::min<std::size_t>(pmod, 3), 2, std::min<std::size_t>(pmod, 2)});
        for (int t = 0; t < 60; ++t) {
            MultiPoly p = random_reduced_poly(g, rng, 5);
            if (p.is_zero()) continue;
            std::vector<Fp> vals = evaluate_on_grid(p, g);
            std::uint64_t support = 0;
            for (Fp v : vals) {
                if (v.v != 0) ++support;
            }
            CHECK(support >= nabla_size(p.leading_monomial(), g));
        }
    }
}
