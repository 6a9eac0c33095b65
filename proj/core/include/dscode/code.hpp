#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dscode/downset.hpp"
#include "dscode/grid.hpp"
#include "dscode/poly.hpp"

namespace dscode {

/// Codeword as a flat value table over the grid, canonical point order.
using Word = std::vector<Fp>;

/// |nabla(alpha)| = prod_i (k_i - alpha_i); throws if alpha leaves the box.
std::uint64_t nabla_size(const ExpVec& alpha, const Grid& grid);

/// A grid together with a downset: fully determines the code C(S, D).
/// Every member must fit the box alpha_i <= k_i - 1.
class CodeSpec {
public:
    CodeSpec(Grid grid, Downset downset);

    const Grid& grid() const { return grid_; }
    const Downset& downset() const { return downset_; }

    /// Minimum Hamming weight of a nonzero codeword, with one maximal
    /// exponent vector attaining it. Only maximal members are scanned;
    /// nabla shrinks coordinatewise, so the minimum lives there.
    std::pair<std::uint64_t, ExpVec> min_distance_attained() const;
    std::uint64_t min_distance() const { return min_distance_attained().first; }

    bool operator==(const CodeSpec&) const = default;

private:
    Grid grid_;
    Downset downset_;
};

/// Evaluation table of sum c_alpha X^alpha; keys must lie in the downset.
Word encode(const CodeSpec& spec, const std::map<ExpVec, Fp>& coefficients);

/// A codeword supported on exactly nabla(alpha):
/// prod_i prod_{j < alpha_i} (X_i - a_{i,j}) over the first alpha_i axis points.
MultiPoly min_weight_witness(const CodeSpec& spec, const ExpVec& alpha);

/// Membership: the reduced interpolant's support lies inside the downset.
bool is_codeword(const CodeSpec& spec, const Word& word);

}  // namespace dscode
