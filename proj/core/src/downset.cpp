#include "dscode/downset.hpp"

#include <stdexcept>

namespace dscode {

bool is_downset(std::size_t num_vars, const std::set<ExpVec>& members) {
    for (const auto& alpha : members) {
        if (alpha.size() != num_vars) return false;
        ExpVec beta = alpha;
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (alpha[i] == 0) continue;
            beta[i] = alpha[i] - 1;
            bool present = members.count(beta) != 0;
            beta[i] = alpha[i];
            if (!present) return false;
        }
    }
    return true;
}

Downset::Downset(std::size_t num_vars, std::set<ExpVec> members)
    : num_vars_(num_vars), members_(std::move(members)) {
    if (num_vars_ == 0) throw std::invalid_argument("Downset: needs at least one variable");
    if (members_.empty()) throw std::invalid_argument("Downset: empty set (the zero code is excluded)");
    if (!is_downset(num_vars_, members_)) {
        throw std::invalid_argument("Downset: set is not closed under taking factors");
    }
}

Downset Downset::closure_of(std::size_t num_vars, const std::vector<ExpVec>& generators) {
    if (generators.empty()) throw std::invalid_argument("Downset: empty generator list");
    std::set<ExpVec> members;
    for (const auto& g : generators) {
        if (g.size() != num_vars) throw std::invalid_argument("Downset: generator arity mismatch");
        // Enumerate all divisors of g with an odometer over [0, g_i].
        ExpVec beta(num_vars, 0);
        bool done = false;
        while (!done) {
            members.insert(beta);
            done = true;
            for (std::size_t i = num_vars; i-- > 0;) {
                if (++beta[i] <= g[i]) {
                    done = false;
                    break;
                }
                beta[i] = 0;
            }
        }
    }
    return Downset(num_vars, std::move(members));
}

Downset Downset::total_degree(std::size_t num_vars, std::uint32_t d) {
    std::set<ExpVec> members;
    ExpVec beta(num_vars, 0);
    for (;;) {
        if (dscode::total_degree(beta) <= d) members.insert(beta);
        std::size_t i = num_vars;
        bool done = true;
        while (i-- > 0) {
            if (++beta[i] <= d) {
                done = false;
                break;
            }
            beta[i] = 0;
        }
        if (done) break;
    }
    return Downset(num_vars, std::move(members));
}

Downset Downset::box(const std::vector<std::uint32_t>& max_exponents) {
    if (max_exponents.empty()) throw std::invalid_argument("Downset::box: needs at least one variable");
    std::vector<ExpVec> gen = {ExpVec(max_exponents.begin(), max_exponents.end())};
    return closure_of(max_exponents.size(), gen);
}

std::vector<ExpVec> Downset::maximal_members() const {
    std::vector<ExpVec> out;
    for (const auto& alpha : members_) {
        bool maximal = true;
        ExpVec up = alpha;
        for (std::size_t i = 0; i < num_vars_ && maximal; ++i) {
            up[i] = alpha[i] + 1;
            if (members_.count(up)) maximal = false;
            up[i] = alpha[i];
        }
        if (maximal) out.push_back(alpha);
    }
    return out;
}

std::uint32_t Downset::deg_last() const {
    std::uint32_t d = 0;
    for (const auto& alpha : members_) d = std::max(d, alpha.back());
    return d;
}

std::vector<Downset> Downset::slices() const {
    if (num_vars_ < 2) {
        throw std::invalid_argument("Downset::slices: univariate downset has no slices");
    }
    const std::uint32_t d = deg_last();
    std::vector<std::set<ExpVec>> buckets(d + 1);
    for (const auto& alpha : members_) {
        std::uint32_t last = alpha.back();
        buckets[last].insert(ExpVec(alpha.begin(), alpha.end() - 1));
    }
    std::vector<Downset> out;
    out.reserve(d + 1);
    for (auto& b : buckets) out.emplace_back(num_vars_ - 1, std::move(b));
    return out;
}

}  // namespace dscode
