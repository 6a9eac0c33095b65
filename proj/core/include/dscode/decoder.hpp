#pragma once

#include <functional>
#include <optional>

#include "dscode/code.hpp"
#include "dscode/weighted.hpp"

namespace dscode {

/// Test hook: observes each recursion sub-problem (the prefix grid, the
/// slice being decoded, and the rescaled weighted word f_i) along with the
/// outer-loop level i and recursion depth.
using LevelObserver = std::function<void(const Grid& sub_grid, const Downset& slice,
                                         const WeightedWord& f_i, std::size_t level,
                                         std::size_t depth)>;

/// Recursive weighted unique decoding of C(S, D).
///
/// Base case m = 1: GMD Reed-Solomon decoding. Otherwise, for each
/// Y-degree d-i from the top down: column-wise RS decoding of the residual
/// word recovers noisy evaluations of the coefficient polynomial, whose
/// per-column distances become the weights of a smaller weighted word
/// decoded recursively over the prefix grid.
///
/// If some codeword C has Delta(w, C) < mu/2 the result is C (it is unique
/// at that distance); otherwise the output is an arbitrary well-formed
/// element of C(S, D).
///
/// The per-column decodes within a level are independent; `threads` > 1
/// fans them out. The result does not depend on the thread count.
MultiPoly weighted_downset_decode(const CodeSpec& spec, const WeightedWord& w,
                                  const LevelObserver& observer = {}, unsigned threads = 1);

/// Unweighted unique decoding with verification: lifts the received table
/// to a hard weighted word, decodes, and returns the result only if its
/// exact distance is strictly below mu/2. nullopt means no codeword lies
/// within the unique decoding radius.
std::optional<MultiPoly> unique_decode(const CodeSpec& spec, const Word& received,
                                       unsigned threads = 1);

}  // namespace dscode
