#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "dscode/poly.hpp"

namespace dscode {

/// True iff every member stays in the set when any coordinate is decremented.
/// The empty set counts as closed (rejected separately by Downset itself).
bool is_downset(std::size_t num_vars, const std::set<ExpVec>& members);

/// A nonempty set of exponent vectors closed under taking factors
/// (downward-closed in the coordinatewise order). Immutable.
class Downset {
public:
    /// Validates closure and nonemptiness.
    Downset(std::size_t num_vars, std::set<ExpVec> members);

    /// Downward closure of the given generators. Throws on an empty list.
    static Downset closure_of(std::size_t num_vars, const std::vector<ExpVec>& generators);
    /// All alpha with total degree <= d.
    static Downset total_degree(std::size_t num_vars, std::uint32_t d);
    /// The box 0 <= alpha_i <= max_exponents[i].
    static Downset box(const std::vector<std::uint32_t>& max_exponents);

    std::size_t num_vars() const { return num_vars_; }
    std::size_t size() const { return members_.size(); }
    const std::set<ExpVec>& members() const { return members_; }
    bool contains(const ExpVec& alpha) const { return members_.count(alpha) != 0; }

    /// Members with no coordinatewise-larger member; the closure of these
    /// regenerates the downset (used for compact serialization).
    std::vector<ExpVec> maximal_members() const;

    /// Max exponent of the last variable across the members.
    std::uint32_t deg_last() const;

    /// Slices D_0, ..., D_d: D_i = prefixes beta with (beta, i) a member.
    /// Requires num_vars >= 2; the slices are nested downsets D_0 >= ... >= D_d.
    std::vector<Downset> slices() const;

    bool operator==(const Downset&) const = default;

private:
    std::size_t num_vars_;
    std::set<ExpVec> members_;
};

}  // namespace dscode
