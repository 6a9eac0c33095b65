#pragma once

#include <vector>

#include "dscode/code.hpp"
#include "dscode/field.hpp"
#include "dscode/rational.hpp"

namespace dscode {

/// Received word with per-position reliability weights u in [0, 1]
/// (u = 0 hard symbol, u = 1 full erasure). Positions follow the canonical
/// order of whatever index set the word is over (grid points or RS points).
struct WeightedWord {
    std::vector<Fp> values;
    std::vector<Rat> weights;

    /// An unweighted word: u identically zero.
    static WeightedWord hard(const Word& received);

    std::size_t size() const { return values.size(); }

    /// Sizes consistent and every weight in [0, 1]; throws otherwise.
    void validate() const;
};

/// Weighted distance: agreements cost u/2, disagreements 1 - u/2.
/// Reduces to Hamming distance when u is identically zero.
Rat weighted_distance(const WeightedWord& w, const std::vector<Fp>& g);

/// mu(spec)/2, the unique decoding radius, as an exact rational.
Rat half_min_distance(const CodeSpec& spec);

}  // namespace dscode
