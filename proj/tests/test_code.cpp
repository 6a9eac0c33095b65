#include <doctest.h>

#include <stdexcept>

#include "dscode/code.hpp"
#include "dscode/oracle.hpp"
#include "test_util.hpp"

using namespace dscode;
using testutil::prefix_grid;

TEST_CASE("nabla size") {
    PrimeField f5(5);
    Grid g34 = prefix_grid(f5, {3, 4});
    CHECK(nabla_size({0, 0}, g34) == 12);
    CHECK(nabla_size({1, 2}, g34) == 4);
    Grid g3 = prefix_grid(f5, {3});
    CHECK(nabla_size({2}, g3) == 1);
    CHECK_THROWS_AS(nabla_size({3}, g3), std::invalid_argument);
}

TEST_CASE("code spec validation") {
    PrimeField f3(3);
    Grid g = prefix_grid(f3, {2, 2});
    CHECK_THROWS_AS(CodeSpec(g, Downset::total_degree(2, 2)), std::invalid_argument);
    CHECK_THROWS_AS(CodeSpec(g, Downset::total_degree(3, 1)), std::invalid_argument);
    CHECK_NOTHROW(CodeSpec(g, Downset::total_degree(2, 1)));
}

TEST_CASE("minimum distance from the nabla formula") {
    PrimeField f3(3);
    SUBCASE("3x3 grid, total degree <= 1: mu = |S| (1 - d/k) = 6") {
        CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 1));
        auto [mu, alpha] = spec.min_distance_attained();
        CHECK(mu == 6);
        CHECK(nabla_size(alpha, spec.grid()) == 6);
    }
    SUBCASE("constants form a repetition code") {
        CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 0));
        CHECK(spec.min_distance() == 9);
        CHECK(brute_force_min_distance(spec) == 9);
    }
    SUBCASE("multilinear degree <= 1 on {0,1}^3 has distance 4") {
        PrimeField f2(2);
        CodeSpec spec(prefix_grid(f2, {2, 2, 2}), Downset::total_degree(3, 1));
        CHECK(spec.min_distance() == 4);
        CHECK(brute_force_min_distance(spec) == 4);  // 2^4 codewords enumerated
    }
    SUBCASE("the full box decodes every function: distance 1") {
        CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::box({2, 2}));
        CHECK(spec.min_distance() == 1);
        CHECK(brute_force_min_distance(spec) == 1);  // a point indicator is a codeword
    }
}

TEST_CASE("encoding") {
    PrimeField f3(3);
    CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 1));
    SUBCASE("zero coefficients give the zero word") {
        Word w = encode(spec, {});
        CHECK(w == Word(9, Fp{0}));
    }
    SUBCASE("constant one gives the all-ones word") {
        Word w = encode(spec, {{{0, 0}, Fp{1}}});
        CHECK(w == Word(9, Fp{1}));
    }
    SUBCASE("X1 + X2 matches per-point evaluation") {
        Word w = encode(spec, {{{1, 0}, Fp{1}}, {{0, 1}, Fp{1}}});
        MultiPoly p(f3, 2);
        p.add_term({1, 0}, Fp{1});
        p.add_term({0, 1}, Fp{1});
        for (std::uint64_t i = 0; i < 9; ++i) {
            CHECK(w[i] == p.eval(spec.grid().point(i)));
        }
    }
    SUBCASE("coefficients outside the downset are rejected") {
        CHECK_THROWS_AS(encode(spec, {{{1, 1}, Fp{1}}}), std::invalid_argument);
    }
}

TEST_CASE("minimum weight witness") {
    SUBCASE("alpha = 0 is the constant one") {
        PrimeField f3(3);
        CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 1));
        MultiPoly w = min_weight_witness(spec, {0, 0});
        CHECK(w == MultiPoly::constant(f3, 2, Fp{1}));
    }
    SUBCASE("univariate witness vanishes on the used points") {
        PrimeField f5(5);
        CodeSpec spec(prefix_grid(f5, {3}), Downset::total_degree(1, 2));
        MultiPoly w = min_weight_witness(spec, {2});
        std::vector<Fp> vals = evaluate_on_grid(w, spec.grid());
        CHECK(vals[0].v == 0);
        CHECK(vals[1].v == 0);
        CHECK(vals[2].v != 0);
    }
    SUBCASE("product support for alpha = (1,1)") {
        PrimeField f3(3);
        CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::closure_of(2, {{1, 1}}));
        MultiPoly w = min_weight_witness(spec, {1, 1});
        MultiPoly expect(f3, 2);
        expect.add_term({1, 1}, Fp{1});  // (X1 - 0)(X2 - 0)
        CHECK(w == expect);
        std::vector<Fp> vals = evaluate_on_grid(w, spec.grid());
        std::uint64_t weight = 0;
        for (Fp v : vals) {
            if (v.v != 0) ++weight;
        }
        CHECK(weight == 4);
    }
    SUBCASE("alpha outside the downset is rejected") {
        PrimeField f3(3);
        CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 1));
        CHECK_THROWS_AS(min_weight_witness(spec, {1, 1}), std::invalid_argument);
    }
}

TEST_CASE("witness weight equals nabla size and is a codeword") {
    SplitMix64 rng(5150);
    for (int t = 0; t < 25; ++t) {
        SpecSampleOptions opt;
        opt.max_codeword_bits = 12;
        CodeSpec spec = random_spec(rng, opt);
        for (const auto& alpha : spec.downset().members()) {
            MultiPoly w = min_weight_witness(spec, alpha);
            std::vector<Fp> vals = evaluate_on_grid(w, spec.grid());
            std::uint64_t weight = 0;
            for (Fp v : vals) {
                if (v.v != 0) ++weight;
            }
            CHECK(weight == nabla_size(alpha, spec.grid()));
            CHECK(is_codeword(spec, vals));
        }
    }
}

TEST_CASE("codeword membership") {
    PrimeField f3(3);
    CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 0));
    CHECK(is_codeword(spec, Word(9, Fp{0})));
    CHECK(is_codeword(spec, Word(9, Fp{2})));
    Word mixed(9, Fp{0});
    mixed[3] = Fp{1};
    CHECK_FALSE(is_codeword(spec, mixed));

    SplitMix64 rng(808);
    SpecSampleOptions opt;
    for (int t = 0; t < 20; ++t) {
        CodeSpec s = random_spec(rng, opt);
        Word w = encode(s, random_coefficients(s, rng));
        CHECK(is_codeword(s, w));
    }
}

TEST_CASE("product bound: mu(S,D) <= mu(prefix,D_i) * (k_m - i)") {
    SplitMix64 rng(424242);
    SpecSampleOptions opt;
    for (int t = 0; t < 60; ++t) {
        CodeSpec spec = random_spec(rng, opt);
        if (spec.grid().num_vars() < 2) continue;
        Grid sub = spec.grid().prefix();
        std::size_t km = spec.grid().axis_size(spec.grid().num_vars() - 1);
        auto slices = spec.downset().slices();
        for (std::size_t i = 0; i < slices.size(); ++i) {
            CodeSpec sub_spec(sub, slices[i]);
            // mu(S_m, {0..i}) is the distance of the degree-i RS code: k_m - i.
            CHECK(spec.min_distance() <= sub_spec.min_distance() * (km - i));
        }
    }
}

TEST_CASE("distance formula matches enumeration on random enumerable codes") {
    SplitMix64 rng(31415);
    SpecSampleOptions opt;
    opt.max_codeword_bits = 14;
    for (int t = 0; t < 40; ++t) {
        CodeSpec spec = random_spec(rng, opt);
        CHECK(spec.min_distance() == brute_force_min_distance(spec));
    }
}
