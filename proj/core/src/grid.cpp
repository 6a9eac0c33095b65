#include "dscode/grid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dscode {

namespace {
constexpr std::uint64_t kMaxPoints = std::uint64_t{1} << 32;
}

Grid::Grid(const PrimeField& field, std::vector<std::vector<Fp>> axes)
    : field_(field), axes_(std::move(axes)), point_count_(1) {
    if (axes_.empty()) throw std::invalid_argument("Grid: needs at least one axis");
    for (std::size_t i = 0; i < axes_.size(); ++i) {
        const auto& s = axes_[i];
        if (s.empty()) {
            throw std::invalid_argument("Grid: axis " + std::to_string(i + 1) + " is empty");
        }
        for (Fp x : s) {
            if (x.v >= field_.modulus()) {
                throw std::invalid_argument("Grid: axis " + std::to_string(i + 1) +
                                            " element not reduced mod p");
            }
        }
        auto sorted = s;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("Grid: axis " + std::to_string(i + 1) +
                                        " has repeated elements");
        }
        if (point_count_ > kMaxPoints / s.size()) {
            throw std::invalid_argument("Grid: point count exceeds 2^32");
        }
        point_count_ *= s.size();
    }
}

std::vector<Fp> Grid::point(std::uint64_t index) const {
    if (index >= point_count_) throw std::out_of_range("Grid::point: index out of range");
    std::vector<Fp> pt(axes_.size());
    for (std::size_t i = axes_.size(); i-- > 0;) {
        std::uint64_t k = axes_[i].size();
        pt[i] = axes_[i][index % k];
        index /= k;
    }
    return pt;
}

Grid Grid::prefix() const {
    if (axes_.size() < 2) throw std::invalid_argument("Grid::prefix: grid is univariate");
    return Grid(field_, std::vector<std::vector<Fp>>(axes_.begin(), axes_.end() - 1));
}

}  // namespace dscode
