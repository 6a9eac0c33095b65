#include "dscode/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <vector>

#include "dscode/decoder.hpp"
#include "dscode/oracle.hpp"

namespace dscode {

namespace {

/// A weighted word around `word` with Delta(w, word) < mu/2: corrupt a few
/// positions, sprinkle small rational weights, retry with less noise until
/// the exact distance fits under the radius.
WeightedWord weighted_case(const Word& word, const CodeSpec& spec, SplitMix64& rng) {
    const PrimeField& F = spec.grid().field();
    const std::uint64_t mu = spec.min_distance();
    const Rat half = make_rat(static_cast<std::int64_t>(mu), 2);
    std::size_t budget = (mu + 1) / 2;  // errors strictly inside the radius

    for (int attempt = 0; attempt < 16; ++attempt) {
        std::size_t e = budget == 0 ? 0 : rng.below(budget);
        WeightedWord w;
        w.values = corrupt(word, e, F, rng);
        w.weights.reserve(word.size());
        // Retries shrink both the error count and the weights.
        const std::int64_t damp = std::int64_t{1} << std::min(attempt, 20);
        for (std::size_t i = 0; i < word.size(); ++i) {
            std::int64_t den = 1 + static_cast<std::int64_t>(rng.below(8));
            std::int64_t num = static_cast<std::int64_t>(rng.below(den + 1));
            w.weights.push_back(make_rat(num, den * damp));
        }
        if (weighted_distance(w, word) < half) return w;
        budget = budget > 1 ? budget / 2 : 0;
    }
    // Hard fallback: no weights, error count strictly inside the radius.
    std::size_t e = (mu + 1) / 2 - 1;
    return WeightedWord::hard(corrupt(word, e, F, rng));
}

std::string run_case(std::uint64_t seed, std::size_t index, const FuzzOptions& opt) {
    SplitMix64 rng = SplitMix64::stream(seed, index);

    SpecSampleOptions sopt;
    sopt.primes.clear();
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL}) {
        if (p <= opt.max_p) sopt.primes.push_back(p);
    }
    if (sopt.primes.empty()) sopt.primes.push_back(2);
    sopt.max_vars = opt.max_m;
    sopt.max_axis = opt.max_grid;

    CodeSpec spec = random_spec(rng, sopt);
    const std::uint64_t mu = spec.min_distance();

    std::ostringstream line;
    line << "case " << index << ": p=" << spec.grid().field().modulus()
         << " m=" << spec.grid().num_vars() << " k=";
    for (std::size_t i = 0; i < spec.grid().num_vars(); ++i) {
        line << (i ? "x" : "") << spec.grid().axis_size(i);
    }
    line << " |D|=" << spec.downset().size() << " mu=" << mu;

    std::vector<std::string> failures;

    // Distance formula against enumeration.
    if (brute_force_min_distance(spec) != mu) failures.push_back("distance");

    // Slice structure: each slice a downset (guaranteed by construction,
    // so just check the nesting chain).
    if (spec.grid().num_vars() >= 2) {
        auto slices = spec.downset().slices();
        for (std::size_t i = 0; i + 1 < slices.size(); ++i) {
            for (const auto& alpha : slices[i + 1].members()) {
                if (!slices[i].contains(alpha)) {
                    failures.push_back("slices");
                    break;
                }
            }
        }
    }

    // Half-distance unweighted decoding of a planted codeword.
    auto coeffs = random_coefficients(spec, rng);
    Word planted = encode(spec, coeffs);
    MultiPoly planted_poly(spec.grid().field(), spec.grid().num_vars());
    for (const auto& [alpha, c] : coeffs) planted_poly.add_term(alpha, c);
    {
        std::size_t budget = (mu + 1) / 2;
        std::size_t e = budget == 0 ? 0 : rng.below(budget);
        Word received = corrupt(planted, e, spec.grid().field(), rng);
        auto decoded = unique_decode(spec, received);
        if (!decoded || !(*decoded == planted_poly)) failures.push_back("decode");
    }

    // Weighted decoding within the radius, cross-checked against the oracle.
    {
        WeightedWord w = weighted_case(planted, spec, rng);
        MultiPoly got = weighted_downset_decode(spec, w);
        if (!(got == planted_poly)) failures.push_back("weighted");
        NearestResult oracle = brute_force_nearest(spec, w);
        if (!(oracle.codeword == planted_poly) || !oracle.unique_within_radius) {
            failures.push_back("oracle");
        }
    }

    if (failures.empty()) {
        line << " PASS";
    } else {
        line << " FAIL(";
        for (std::size_t i = 0; i < failures.size(); ++i) line << (i ? "," : "") << failures[i];
        line << ")";
    }
    line << "\n";
    return line.str();
}

}  // namespace

FuzzOutcome run_fuzz(const FuzzOptions& opt) {
    std::ostringstream head;
    head << "fuzz seed=" << opt.seed << " cases=" << opt.cases << " max_p=" << opt.max_p
         << " max_m=" << opt.max_m << " max_grid=" << opt.max_grid << "\n";

    std::vector<std::string> lines(opt.cases);
    const unsigned workers =
        std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(opt.cases ? opt.cases : 1)));
    if (workers == 1) {
        for (std::size_t i = 0; i < opt.cases; ++i) lines[i] = run_case(opt.seed, i, opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= opt.cases) return;
                    lines[i] = run_case(opt.seed, i, opt);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    FuzzOutcome out;
    std::size_t passed = 0;
    std::ostringstream body;
    body << head.str();
    for (const auto& l : lines) {
        body << l;
        if (l.find(" PASS") != std::string::npos) ++passed;
    }
    body << "summary: " << passed << "/" << opt.cases << " passed\n";
    out.all_passed = (passed == opt.cases);
    out.report = body.str();
    return out;
}

}  // namespace dscode
