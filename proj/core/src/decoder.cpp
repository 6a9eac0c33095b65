#include "dscode/decoder.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "dscode/rs_decoder.hpp"

namespace dscode {

namespace {

MultiPoly decode_impl(const Grid& grid, const Downset& ds, const WeightedWord& w,
                      const LevelObserver& observer, std::size_t depth, unsigned threads) {
    const PrimeField& F = grid.field();
    const std::size_t m = grid.num_vars();

    if (m == 1) {
        // Univariate downsets are intervals {0..d}.
        std::size_t d = ds.deg_last();
        UniPoly g = weighted_rs_decode(F, grid.axis(0), d, w);
        MultiPoly out(F, 1);
        for (std::size_t e = 0; e < g.coeffs().size(); ++e) {
            out.add_term({static_cast<std::uint32_t>(e)}, g.coeff(e));
        }
        return out;
    }

    const std::uint32_t d = ds.deg_last();
    const std::vector<Downset> slices = ds.slices();
    const Grid sub = grid.prefix();
    const std::size_t km = grid.axis_size(m - 1);
    const std::uint64_t cols = sub.point_count();
    const std::vector<Fp>& last_axis = grid.axis(m - 1);

    // y^e for every last-axis point, e <= d.
    std::vector<std::vector<Fp>> ypow(km, std::vector<Fp>(d + 1, F.one()));
    for (std::size_t y = 0; y < km; ++y) {
        for (std::uint32_t e = 1; e <= d; ++e) ypow[y][e] = F.mul(ypow[y][e - 1], last_axis[y]);
    }

    // Residual values r_i(x, y) = r(x, y) - sum_{j<i} Q_j(x) y^{d-j};
    // weights never change.
    std::vector<Fp> residual = w.values;
    std::vector<MultiPoly> recovered;  // Q_0 .. Q_d over the prefix grid
    recovered.reserve(d + 1);

    for (std::uint32_t i = 0; i <= d; ++i) {
        const std::size_t deg_bound = d - i;
        const std::size_t mu_rs = km - deg_bound;  // distance of the column code
        const Rat half = make_rat(static_cast<std::int64_t>(mu_rs), 2);

        WeightedWord f_i;
        f_i.values.resize(cols);
        f_i.weights.resize(cols);

        auto decode_column = [&](std::uint64_t x) {
            WeightedWord column;
            column.values.resize(km);
            column.weights.resize(km);
            for (std::size_t y = 0; y < km; ++y) {
                column.values[y] = residual[x * km + y];
                column.weights[y] = w.weights[x * km + y];
            }
            UniPoly g = weighted_rs_decode(F, last_axis, deg_bound, column);
            std::vector<Fp> cand_vals(km);
            for (std::size_t y = 0; y < km; ++y) cand_vals[y] = g.eval(last_axis[y]);
            Rat dist = weighted_distance(column, cand_vals);
            if (dist < half) {
                f_i.values[x] = g.coeff(deg_bound);
                f_i.weights[x] = dist / half;
            } else {
                f_i.values[x] = F.zero();
                f_i.weights[x] = Rat(1);
            }
        };

        // Columns are independent; each worker writes disjoint slots of f_i.
        if (threads > 1 && cols > 1) {
            std::atomic<std::uint64_t> next{0};
            std::vector<std::thread> pool;
            const unsigned workers = std::min<std::uint64_t>(threads, cols);
            pool.reserve(workers);
            for (unsigned t = 0; t < workers; ++t) {
                pool.emplace_back([&] {
                    for (;;) {
                        std::uint64_t x = next.fetch_add(1);
                        if (x >= cols) return;
                        decode_column(x);
                    }
                });
            }
            for (auto& th : pool) th.join();
        } else {
            for (std::uint64_t x = 0; x < cols; ++x) decode_column(x);
        }

        const Downset& slice = slices[d - i];
        if (observer) observer(sub, slice, f_i, i, depth);
        MultiPoly q_i = decode_impl(sub, slice, f_i, observer, depth + 1, threads);

        std::vector<Fp> q_vals = evaluate_on_grid(q_i, sub);
        for (std::uint64_t x = 0; x < cols; ++x) {
            if (q_vals[x].v == 0) continue;
            for (std::size_t y = 0; y < km; ++y) {
                residual[x * km + y] =
                    F.sub(residual[x * km + y], F.mul(q_vals[x], ypow[y][deg_bound]));
            }
        }
        recovered.push_back(std::move(q_i));
    }

    MultiPoly out(F, m);
    for (std::uint32_t i = 0; i <= d; ++i) {
        for (const auto& [alpha, c] : recovered[i].terms()) {
            ExpVec full = alpha;
            full.push_back(d - i);
            out.add_term(full, c);
        }
    }
    return out;
}

}  // namespace

MultiPoly weighted_downset_decode(const CodeSpec& spec, const WeightedWord& w,
                                  const LevelObserver& observer, unsigned threads) {
    w.validate();
    if (w.size() != spec.grid().point_count()) {
        throw std::invalid_argument("weighted_downset_decode: word length != grid size");
    }
    return decode_impl(spec.grid(), spec.downset(), w, observer, 0, threads);
}

std::optional<MultiPoly> unique_decode(const CodeSpec& spec, const Word& received,
                                       unsigned threads) {
    MultiPoly cand = weighted_downset_decode(spec, WeightedWord::hard(received), {}, threads);
    std::vector<Fp> vals = evaluate_on_grid(cand, spec.grid());
    std::uint64_t hamming = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] != received[i]) ++hamming;
    }
    if (2 * hamming < spec.min_distance()) return cand;
    return std::nullopt;
}

}  // namespace dscode
