#pragma once

#include <cstdint>
#include <vector>

#include "dscode/code.hpp"
#include "dscode/decoder.hpp"
#include "dscode/rng.hpp"
#include "dscode/weighted.hpp"

namespace dscode {

/// Largest codeword count the exhaustive oracles will enumerate.
constexpr std::uint64_t kEnumerationGuard = std::uint64_t{1} << 24;

/// p^|D| clamped at `cap`.
std::uint64_t codeword_count_capped(const CodeSpec& spec, std::uint64_t cap = kEnumerationGuard);

/// True iff the oracles may enumerate this code.
bool is_enumerable(const CodeSpec& spec);

struct NearestResult {
    MultiPoly codeword;          // a closest codeword (first in enumeration order on ties)
    Rat distance;                // its exact weighted distance
    bool unique_within_radius;   // exactly one codeword strictly inside mu/2
};

/// Exhaustive weighted-nearest search over all p^|D| codewords.
/// Throws when the enumeration guard is exceeded.
NearestResult brute_force_nearest(const CodeSpec& spec, const WeightedWord& w);

/// Minimum Hamming weight over all nonzero codewords, by enumeration.
std::uint64_t brute_force_min_distance(const CodeSpec& spec);

/// Exactly `errors` positions changed, each to a uniformly random different
/// field value; positions drawn without replacement.
Word corrupt(const Word& word, std::size_t errors, const PrimeField& field, SplitMix64& rng);

/// A random downset inside the box with |D| in [target, 2*target]
/// (clamped to the box size): random points are closed downward until the
/// target is reached, skipping candidates that would overshoot the bound.
Downset random_downset(const std::vector<std::size_t>& box_sizes, std::size_t target,
                       SplitMix64& rng);

struct SpecSampleOptions {
    std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13};
    std::size_t max_vars = 3;
    std::size_t max_axis = 5;
    std::size_t max_downset = 12;
    /// log2 bound on p^|D| so oracle cross-checks stay cheap.
    double max_codeword_bits = 18.0;
};

/// A random enumerable CodeSpec: random prime, random axes of distinct
/// elements, random downset sized to keep p^|D| under the bit budget.
CodeSpec random_spec(SplitMix64& rng, const SpecSampleOptions& opt = {});

/// Uniformly random coefficients over the downset (possibly zero).
std::map<ExpVec, Fp> random_coefficients(const CodeSpec& spec, SplitMix64& rng);

}  // namespace dscode
