#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "dscode/poly.hpp"
#include "dscode/weighted.hpp"

namespace dscode {

/// Classical errors-and-erasures decoding of the degree-<=d code on an
/// arbitrary evaluation set, by rational interpolation (Berlekamp-Welch):
/// solve N(x_j) = y_j * E(x_j) on the non-erased positions with
/// deg N <= e + d, deg E <= e, e = floor((n' - d - 1) / 2), n' = #non-erased.
///
/// Returns the unique polynomial of degree <= d disagreeing with the
/// non-erased values in at most e positions, if one exists; nullopt is the
/// normal "nothing decodable" outcome, not an error.
std::optional<UniPoly> errors_erasures_decode(const PrimeField& field,
                                              const std::vector<Fp>& points,
                                              const std::vector<Fp>& values,
                                              const std::set<std::size_t>& erasures,
                                              std::size_t degree_bound);

/// GMD decoding of the degree-<=d code on `points` against a weighted word:
/// positions sorted heaviest weight first (ties by index), every erasure
/// count s = 0..n-d-1 tried, the first candidate with exact weighted
/// distance < mu/2 accepted (mu = n - d). At most one codeword can qualify,
/// so the first verified candidate is the answer. Returns the zero
/// polynomial when nothing qualifies.
UniPoly weighted_rs_decode(const PrimeField& field,
                           const std::vector<Fp>& points,
                           std::size_t degree_bound,
                           const WeightedWord& w);

}  // namespace dscode
