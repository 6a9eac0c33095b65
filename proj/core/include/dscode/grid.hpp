#pragma once

#include <cstdint>
#include <vector>

#include "dscode/field.hpp"

namespace dscode {

/// Evaluation grid S_1 x ... x S_m; each axis a nonempty list of distinct
/// field elements, kept in the order given. Immutable after construction.
///
/// Canonical point order is odometer order with the LAST coordinate
/// fastest: point index = ((c_1*k_2 + c_2)*k_3 + ...)*k_m + c_m.
/// Every word (table over the grid) is a flat vector in this order.
class Grid {
public:
    Grid(const PrimeField& field, std::vector<std::vector<Fp>> axes);

    const PrimeField& field() const { return field_; }
    std::size_t num_vars() const { return axes_.size(); }
    std::size_t axis_size(std::size_t i) const { return axes_[i].size(); }
    const std::vector<Fp>& axis(std::size_t i) const { return axes_[i]; }
    const std::vector<std::vector<Fp>>& axes() const { return axes_; }

    std::uint64_t point_count() const { return point_count_; }

    /// Coordinates of the point at a canonical index.
    std::vector<Fp> point(std::uint64_t index) const;

    /// The prefix grid S_1 x ... x S_{m-1}. Throws for m == 1.
    Grid prefix() const;

    bool operator==(const Grid&) const = default;

private:
    PrimeField field_;
    std::vector<std::vector<Fp>> axes_;
    std::uint64_t point_count_;
};

}  // namespace dscode
