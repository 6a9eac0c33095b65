#include "dscode/rs_decoder.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dscode {

namespace {

/// A nonzero vector in the null space of the given matrix (rows of width
/// `cols`), or empty if the matrix has full column rank. Deterministic:
/// Gauss-Jordan with first-nonzero pivoting, first free column set to 1.
std::vector<Fp> null_space_vector(const PrimeField& F, std::vector<std::vector<Fp>> rows,
                                  std::size_t cols) {
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].v == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Fp inv = F.inv(rows[rank][col]);
        for (std::size_t j = col; j < cols; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].v == 0) continue;
            Fp factor = rows[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                rows[r][j] = F.sub(rows[r][j], F.mul(factor, rows[rank][j]));
            }
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    if (rank == cols) return {};

    // First free column -> 1; pivot variables from the reduced rows.
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col_of_row) is_pivot[c] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<Fp> sol(cols, Fp{0});
    sol[free_col] = F.one();
    for (std::size_t r = 0; r < rank; ++r) {
        sol[pivot_col_of_row[r]] = F.neg(rows[r][free_col]);
    }
    return sol;
}

}  // namespace

std::optional<UniPoly> errors_erasures_decode(const PrimeField& F,
                                              const std::vector<Fp>& points,
                                              const std::vector<Fp>& values,
                                              const std::set<std::size_t>& erasures,
                                              std::size_t degree_bound) {
    const std::size_t n = points.size();
    if (values.size() != n) {
        throw std::invalid_argument("errors_erasures_decode: points/values size mismatch");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) {
                throw std::invalid_argument("errors_erasures_decode: repeated evaluation point");
            }
        }
    }
    for (std::size_t e : erasures) {
        if (e >= n) throw std::invalid_argument("errors_erasures_decode: erasure index out of range");
    }

    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < n; ++i) {
        if (!erasures.count(i)) live.push_back(i);
    }
    const std::size_t n_live = live.size();
    const std::size_t d = degree_bound;
    if (d >= n_live) {
        throw std::invalid_argument("errors_erasures_decode: degree bound >= non-erased count");
    }
    const std::size_t e_max = (n_live - d - 1) / 2;

    // One row per live point: sum_t a_t x^t - y * sum_t b_t x^t = 0,
    // unknowns a_0..a_{e+d} then b_0..b_e.
    const std::size_t n_cols = (e_max + d + 1) + (e_max + 1);
    std::vector<std::vector<Fp>> rows;
    rows.reserve(n_live);
    for (std::size_t idx : live) {
        std::vector<Fp> row(n_cols, Fp{0});
        Fp xp = F.one();
        for (std::size_t t = 0; t <= e_max + d; ++t) {
            row[t] = xp;
            xp = F.mul(xp, points[idx]);
        }
        xp = F.one();
        for (std::size_t t = 0; t <= e_max; ++t) {
            row[e_max + d + 1 + t] = F.neg(F.mul(values[idx], xp));
            xp = F.mul(xp, points[idx]);
        }
        rows.push_back(std::move(row));
    }

    std::vector<Fp> sol = null_space_vector(F, std::move(rows), n_cols);
    if (sol.empty()) return std::nullopt;

    UniPoly N(F, std::vector<Fp>(sol.begin(), sol.begin() + e_max + d + 1));
    UniPoly E(F, std::vector<Fp>(sol.begin() + e_max + d + 1, sol.end()));
    if (E.is_zero()) return std::nullopt;  // cannot happen for d < n_live; guard anyway

    auto [g, rem] = N.divrem(E);
    if (!rem.is_zero()) return std::nullopt;
    if (g.degree() > static_cast<int>(d)) return std::nullopt;

    std::size_t disagreements = 0;
    for (std::size_t idx : live) {
        if (g.eval(points[idx]) != values[idx]) ++disagreements;
    }
    if (disagreements > e_max) return std::nullopt;
    return g;
}

UniPoly weighted_rs_decode(const PrimeField& F,
                           const std::vector<Fp>& points,
                           std::size_t degree_bound,
                           const WeightedWord& w) {
    const std::size_t n = points.size();
    w.validate();
    if (w.size() != n) {
        throw std::invalid_argument("weighted_rs_decode: word length != point count");
    }
    if (degree_bound >= n) {
        throw std::invalid_argument("weighted_rs_decode: degree bound >= point count");
    }
    const std::size_t mu = n - degree_bound;
    const Rat half = make_rat(static_cast<std::int64_t>(mu), 2);

    // Heaviest (least reliable) first; ties broken by position index.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return w.weights[a] > w.weights[b]; });

    std::set<std::size_t> erased;
    for (std::size_t s = 0; s <= n - degree_bound - 1; ++s) {
        if (s > 0) erased.insert(order[s - 1]);
        auto cand = errors_erasures_decode(F, points, w.values, erased, degree_bound);
        if (!cand) continue;
        std::vector<Fp> vals(n);
        for (std::size_t i = 0; i < n; ++i) vals[i] = cand->eval(points[i]);
        if (weighted_distance(w, vals) < half) return *cand;
    }
    return UniPoly(F);
}

}  // namespace dscode
