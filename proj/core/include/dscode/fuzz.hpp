#pragma once

#include <cstdint>
#include <string>

namespace dscode {

struct FuzzOptions {
    std::uint64_t seed = 42;
    std::size_t cases = 100;
    std::uint64_t max_p = 13;
    std::size_t max_m = 3;
    std::size_t max_grid = 5;
    unsigned threads = 1;
};

struct FuzzOutcome {
    std::string report;  // byte-deterministic given the options
    bool all_passed = true;
};

/// Oracle-equivalence fuzzing: each case draws a random enumerable code and
/// checks the distance formula, slice structure, half-distance decoding and
/// weighted decoding against the brute-force oracles. Case RNGs derive from
/// (seed, case index), so runs are reproducible and cases independent.
FuzzOutcome run_fuzz(const FuzzOptions& opt);

}  // namespace dscode
