#include <doctest.h>

#include <stdexcept>

#include "dscode/decoder.hpp"
#include "dscode/oracle.hpp"
#include "test_util.hpp"

using namespace dscode;
using testutil::poly_from_coeffs;
using testutil::prefix_grid;

TEST_CASE("weighted distance") {
    PrimeField f3(3);
    WeightedWord w = WeightedWord::hard({Fp{0}, Fp{1}, Fp{2}, Fp{0}});
    SUBCASE("zero weights, equal words: distance zero") {
        CHECK(weighted_distance(w, w.values) == Rat(0));
    }
    SUBCASE("zero weights reduce to Hamming distance") {
        std::vector<Fp> g = w.values;
        g[0] = Fp{1};
        g[3] = Fp{2};
        CHECK(weighted_distance(w, g) == Rat(2));
    }
    SUBCASE("all-ones weights cost n/2 regardless of the values") {
        WeightedWord u;
        u.values = w.values;
        u.weights.assign(4, Rat(1));
        CHECK(weighted_distance(u, w.values) == Rat(2));
        std::vector<Fp> g(4, Fp{2});
        CHECK(weighted_distance(u, g) == Rat(2));
    }
    SUBCASE("index sets must match") {
        CHECK_THROWS_AS(weighted_distance(w, std::vector<Fp>(3, Fp{0})), std::invalid_argument);
    }
}

TEST_CASE("clean codewords decode to themselves") {
    SplitMix64 rng(1001);
    SpecSampleOptions opt;
    for (int t = 0; t < 30; ++t) {
        CodeSpec spec = random_spec(rng, opt);
        auto coeffs = random_coefficients(spec, rng);
        Word word = encode(spec, coeffs);
        MultiPoly expect = poly_from_coeffs(spec, coeffs);
        CHECK(weighted_downset_decode(spec, WeightedWord::hard(word)) == expect);
    }
}

TEST_CASE("any two flips of X1+X2 on the 3x3 grid are corrected") {
    PrimeField f3(3);
    CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 1));
    REQUIRE(spec.min_distance() == 6);
    std::map<ExpVec, Fp> coeffs{{{1, 0}, Fp{1}}, {{0, 1}, Fp{1}}};
    Word clean = encode(spec, coeffs);
    MultiPoly expect = poly_from_coeffs(spec, coeffs);

    for (std::size_t i = 0; i < 9; ++i) {
        for (std::size_t j = i + 1; j < 9; ++j) {
            for (std::uint64_t di = 1; di <= 2; ++di) {
                for (std::uint64_t dj = 1; dj <= 2; ++dj) {
                    Word corrupted = clean;
                    corrupted[i] = f3.add(corrupted[i], Fp{di});
                    corrupted[j] = f3.add(corrupted[j], Fp{dj});
                    auto got = unique_decode(spec, corrupted);
                    REQUIRE(got.has_value());
                    CHECK(*got == expect);
                }
            }
        }
    }
}

TEST_CASE("three variables, random downsets, errors at the radius edge") {
    SplitMix64 rng(34567);
    PrimeField f5(5);
    for (int t = 0; t < 20; ++t) {
        Grid grid = prefix_grid(f5, {3, 3, 3});
        Downset ds = random_downset({3, 3, 3}, 1 + rng.below(4), rng);
        CodeSpec spec(grid, ds);
        auto coeffs = random_coefficients(spec, rng);
        Word clean = encode(spec, coeffs);
        std::size_t e = (spec.min_distance() + 1) / 2 - 1;
        Word received = corrupt(clean, e, f5, rng);
        auto got = unique_decode(spec, received);
        REQUIRE(got.has_value());
        CHECK(*got == poly_from_coeffs(spec, coeffs));
    }
}

TEST_CASE("weighted decoding matches the oracle within the radius") {
    SplitMix64 rng(9090);
    SpecSampleOptions opt;
    opt.max_codeword_bits = 14;
    for (int t = 0; t < 25; ++t) {
        CodeSpec spec = random_spec(rng, opt);
        auto coeffs = random_coefficients(spec, rng);
        Word clean = encode(spec, coeffs);
        MultiPoly expect = poly_from_coeffs(spec, coeffs);
        const Rat half = half_min_distance(spec);

        // Corrupt a little and add light weights; keep only in-radius cases.
        std::size_t budget = (spec.min_distance() + 1) / 2;
        WeightedWord w;
        w.values = corrupt(clean, budget ? rng.below(budget) : 0, spec.grid().field(), rng);
        w.weights.clear();
        for (std::size_t i = 0; i < clean.size(); ++i) {
            std::int64_t den = 4 + static_cast<std::int64_t>(rng.below(5));
            w.weights.push_back(make_rat(static_cast<std::int64_t>(rng.below(2)), den));
        }
        if (!(weighted_distance(w, clean) < half)) continue;

        CHECK(weighted_downset_decode(spec, w) == expect);
        NearestResult oracle = brute_force_nearest(spec, w);
        CHECK(oracle.codeword == expect);
        CHECK(oracle.unique_within_radius);
    }
}

TEST_CASE("a fully erased column is recovered through the other columns") {
    PrimeField f3(3);
    CodeSpec spec(prefix_grid(f3, {3, 3}), Downset::total_degree(2, 1));  // mu = 6
    std::map<ExpVec, Fp> coeffs{{{1, 0}, Fp{2}}, {{0, 1}, Fp{1}}, {{0, 0}, Fp{1}}};
    Word clean = encode(spec, coeffs);
    WeightedWord w = WeightedWord::hard(clean);
    for (std::size_t y = 0; y < 3; ++y) {
        // column x1 = 1 occupies indices 3..5 (last coordinate fastest)
        w.values[3 + y] = Fp{(clean[3 + y].v + 1 + y) % 3};
        w.weights[3 + y] = Rat(1);
    }
    REQUIRE(weighted_distance(w, clean) == make_rat(3, 2));
    CHECK(weighted_downset_decode(spec, w) == testutil::poly_from_coeffs(spec, coeffs));
}

TEST_CASE("unique decode verifies and reports failure past the radius") {
    PrimeField f2(2);
    SUBCASE("constants on {0,1}^2: (0,0,0,1) decodes to zero") {
        CodeSpec spec(prefix_grid(f2, {2, 2}), Downset::total_degree(2, 0));
        auto got = unique_decode(spec, {Fp{0}, Fp{0}, Fp{0}, Fp{1}});
        REQUIRE(got.has_value());
        CHECK(got->is_zero());
    }
    SUBCASE("symmetric tie: (0,0,1,1) is undecodable") {
        CodeSpec spec(prefix_grid(f2, {2, 2}), Downset::total_degree(2, 0));
        CHECK_FALSE(unique_decode(spec, {Fp{0}, Fp{0}, Fp{1}, Fp{1}}).has_value());
    }
    SUBCASE("exact codewords come back with distance zero") {
        PrimeField f7(7);
        CodeSpec spec(prefix_grid(f7, {4, 3}), Downset::total_degree(2, 2));
        SplitMix64 rng(64);
        auto coeffs = random_coefficients(spec, rng);
        Word w = encode(spec, coeffs);
        auto got = unique_decode(spec, w);
        REQUIRE(got.has_value());
        CHECK(evaluate_on_grid(*got, spec.grid()) == w);
    }
}

TEST_CASE("decoded outputs always satisfy the contract") {
    SplitMix64 rng(777);
    SpecSampleOptions opt;
    for (int t = 0; t < 60; ++t) {
        CodeSpec spec = random_spec(rng, opt);
        Word received(spec.grid().point_count());
        for (auto& v : received) v = Fp{rng.below(spec.grid().field().modulus())};
        auto got = unique_decode(spec, received);
        if (!got) continue;
        // Support inside the downset, distance strictly below mu/2.
        for (const auto& [alpha, c] : got->terms()) {
            CHECK(spec.downset().contains(alpha));
        }
        std::vector<Fp> vals = evaluate_on_grid(*got, spec.grid());
        std::uint64_t hamming = 0;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (vals[i] != received[i]) ++hamming;
        }
        CHECK(2 * hamming < spec.min_distance());
    }
}

TEST_CASE("recursion invariant: every level stays inside its own radius") {
    SplitMix64 rng(13579);
    PrimeField f5(5);
    for (int t = 0; t < 15; ++t) {
        Grid grid = prefix_grid(f5, {4, 4});
        Downset ds = random_downset({4, 4}, 1 + rng.below(5), rng);
        CodeSpec spec(grid, ds);
        auto coeffs = random_coefficients(spec, rng);
        Word clean = encode(spec, coeffs);
        std::size_t e = (spec.min_distance() + 1) / 2 - 1;
        WeightedWord w = WeightedWord::hard(corrupt(clean, e, f5, rng));

        // Slice the planted codeword by Y-degree: C = sum_i P_i(X) Y^{d-i}.
        MultiPoly planted = poly_from_coeffs(spec, coeffs);
        const std::uint32_t d = spec.downset().deg_last();

        bool all_levels_ok = true;
        auto observer = [&](const Grid& sub, const Downset& slice, const WeightedWord& f_i,
                            std::size_t level, std::size_t depth) {
            if (depth != 0) return;
            MultiPoly p_i(f5, sub.num_vars());
            for (const auto& [alpha, c] : planted.terms()) {
                if (alpha.back() == d - level) {
                    p_i.add_term(ExpVec(alpha.begin(), alpha.end() - 1), c);
                }
            }
            CodeSpec sub_spec(sub, slice);
            Rat bound = half_min_distance(sub_spec);
            if (!(weighted_distance(f_i, evaluate_on_grid(p_i, sub)) < bound)) {
                all_levels_ok = false;
            }
        };
        MultiPoly got = weighted_downset_decode(spec, w, observer);
        CHECK(all_levels_ok);
        CHECK(got == planted);
    }
}

TEST_CASE("decoding over a word-size prime field") {
    PrimeField f((std::uint64_t{1} << 61) - 1);
    CodeSpec spec(prefix_grid(f, {5, 5}), Downset::total_degree(2, 2));
    REQUIRE(spec.min_distance() == 15);
    SplitMix64 rng(8675309);
    auto coeffs = random_coefficients(spec, rng);
    Word clean = encode(spec, coeffs);
    Word received = corrupt(clean, 7, f, rng);
    auto got = unique_decode(spec, received);
    REQUIRE(got.has_value());
    CHECK(*got == poly_from_coeffs(spec, coeffs));
}

TEST_CASE("axes need not be 0..k-1 or sorted") {
    PrimeField f7(7);
    Grid grid(f7, {{Fp{3}, Fp{1}, Fp{4}}, {Fp{5}, Fp{2}}});
    CodeSpec spec(grid, Downset::total_degree(2, 1));
    REQUIRE(spec.min_distance() == 3);
    std::map<ExpVec, Fp> coeffs{{{1, 0}, Fp{2}}, {{0, 1}, Fp{6}}, {{0, 0}, Fp{1}}};
    Word clean = encode(spec, coeffs);
    for (std::size_t pos = 0; pos < clean.size(); ++pos) {
        Word received = clean;
        received[pos] = f7.add(received[pos], Fp{4});
        auto got = unique_decode(spec, received);
        REQUIRE(got.has_value());
        CHECK(*got == poly_from_coeffs(spec, coeffs));
    }
}

TEST_CASE("decoding is deterministic, also across thread counts") {
    SplitMix64 rng(5);
    SpecSampleOptions opt;
    for (int t = 0; t < 10; ++t) {
        CodeSpec spec = random_spec(rng, opt);
        WeightedWord w;
        w.values.resize(spec.grid().point_count());
        w.weights.resize(w.values.size());
        for (std::size_t i = 0; i < w.values.size(); ++i) {
            w.values[i] = Fp{rng.below(spec.grid().field().modulus())};
            w.weights[i] = make_rat(static_cast<std::int64_t>(rng.below(3)), 4);
        }
        MultiPoly serial = weighted_downset_decode(spec, w);
        CHECK(serial == weighted_downset_decode(spec, w));
        CHECK(serial == weighted_downset_decode(spec, w, {}, 4));
    }
}
