#include "dscode/code.hpp"

#include <stdexcept>
#include <string>

namespace dscode {

std::uint64_t nabla_size(const ExpVec& alpha, const Grid& grid) {
    if (alpha.size() != grid.num_vars()) {
        throw std::invalid_argument("nabla_size: dimension mismatch");
    }
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] >= grid.axis_size(i)) {
            throw std::invalid_argument("nabla_size: exponent " + std::to_string(alpha[i]) +
                                        " outside the box in coordinate " + std::to_string(i + 1));
        }
        n *= grid.axis_size(i) - alpha[i];
    }
    return n;
}

CodeSpec::CodeSpec(Grid grid, Downset downset)
    : grid_(std::move(grid)), downset_(std::move(downset)) {
    if (downset_.num_vars() != grid_.num_vars()) {
        throw std::invalid_argument("CodeSpec: downset arity != grid dimension");
    }
    for (const auto& alpha : downset_.maximal_members()) {
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] >= grid_.axis_size(i)) {
                throw std::invalid_argument(
                    "CodeSpec: downset member leaves the box (exponent " +
                    std::to_string(alpha[i]) + " >= k_" + std::to_string(i + 1) + " = " +
                    std::to_string(grid_.axis_size(i)) + ")");
            }
        }
    }
}

std::pair<std::uint64_t, ExpVec> CodeSpec::min_distance_attained() const {
    std::uint64_t best = 0;
    ExpVec arg;
    for (const auto& alpha : downset_.maximal_members()) {
        std::uint64_t n = nabla_size(alpha, grid_);
        if (arg.empty() || n < best) {
            best = n;
            arg = alpha;
        }
    }
    return {best, arg};
}

Word encode(const CodeSpec& spec, const std::map<ExpVec, Fp>& coefficients) {
    MultiPoly p(spec.grid().field(), spec.grid().num_vars());
    for (const auto& [alpha, c] : coefficients) {
        if (!spec.downset().contains(alpha)) {
            throw std::invalid_argument("encode: coefficient exponent outside the downset");
        }
        p.add_term(alpha, c);
    }
    return evaluate_on_grid(p, spec.grid());
}

MultiPoly min_weight_witness(const CodeSpec& spec, const ExpVec& alpha) {
    if (!spec.downset().contains(alpha)) {
        throw std::invalid_argument("min_weight_witness: alpha not in the downset");
    }
    const PrimeField& F = spec.grid().field();
    const std::size_t m = spec.grid().num_vars();
    MultiPoly f = MultiPoly::constant(F, m, F.one());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::uint32_t j = 0; j < alpha[i]; ++j) {
            ExpVec xi(m, 0);
            xi[i] = 1;
            MultiPoly factor = MultiPoly::monomial(F, xi, F.one());
            factor.add_term(ExpVec(m, 0), F.neg(spec.grid().axis(i)[j]));
            f = f.mul(factor);
        }
    }
    return f;
}

bool is_codeword(const CodeSpec& spec, const Word& word) {
    if (word.size() != spec.grid().point_count()) {
        throw std::invalid_argument("is_codeword: word length != grid size");
    }
    MultiPoly p = grid_interpolate(spec.grid(), word);
    for (const auto& [alpha, c] : p.terms()) {
        if (!spec.downset().contains(alpha)) return false;
    }
    return true;
}

}  // namespace dscode
