#include "dscode/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace dscode {

namespace {

/// Walks every codeword of the code in coefficient-odometer order (monomials
/// in downset member order, last monomial fastest, coefficient values
/// ascending). The word is maintained incrementally: bumping digit j by one
/// is a single pointwise add of the j-th monomial table.
void for_each_codeword(const CodeSpec& spec,
                       const std::function<void(std::uint64_t index, const Word& word)>& visit) {
    const PrimeField& F = spec.grid().field();
    const std::uint64_t p = F.modulus();
    const std::uint64_t total = codeword_count_capped(spec, kEnumerationGuard + 1);
    if (total > kEnumerationGuard) {
        throw std::invalid_argument("oracle: codeword count exceeds the enumeration guard (2^24)");
    }

    std::vector<ExpVec> monomials(spec.downset().members().begin(),
                                  spec.downset().members().end());
    const std::size_t t = monomials.size();
    const std::size_t n = spec.grid().point_count();

    std::vector<Word> tables(t);
    for (std::size_t j = 0; j < t; ++j) {
        tables[j] = evaluate_on_grid(MultiPoly::monomial(F, monomials[j], F.one()), spec.grid());
    }

    Word word(n, Fp{0});
    std::vector<std::uint64_t> digits(t, 0);
    std::uint64_t index = 0;
    visit(index, word);
    for (index = 1; index < total; ++index) {
        for (std::size_t j = t; j-- > 0;) {
            const Word& tab = tables[j];
            for (std::size_t q = 0; q < n; ++q) word[q] = F.add(word[q], tab[q]);
            if (++digits[j] < p) break;
            digits[j] = 0;  // p adds of the same table cancel; word is already consistent
        }
        visit(index, word);
    }
}

/// Coefficient table of the codeword at an enumeration index.
std::map<ExpVec, Fp> coefficients_at(const CodeSpec& spec, std::uint64_t index) {
    std::vector<ExpVec> monomials(spec.downset().members().begin(),
                                  spec.downset().members().end());
    const std::uint64_t p = spec.grid().field().modulus();
    std::map<ExpVec, Fp> coeffs;
    for (std::size_t j = monomials.size(); j-- > 0;) {
        std::uint64_t digit = index % p;
        index /= p;
        if (digit != 0) coeffs[monomials[j]] = Fp{digit};
    }
    return coeffs;
}

/// Weights scaled to a common denominator L so distance comparisons run on
/// integers: 2L * Delta = sum_agree U_i + sum_disagree (2L - U_i).
struct ScaledWeights {
    bool usable = false;
    std::uint64_t two_l = 0;
    std::vector<std::uint64_t> scaled;  // U_i = u_i * L
};

ScaledWeights scale_weights(const WeightedWord& w) {
    ScaledWeights out;
    mpz_class l(1);
    for (const Rat& u : w.weights) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), u.get_den().get_mpz_t());
    if (!l.fits_ulong_p() || l.get_ui() > (std::uint64_t{1} << 40)) return out;
    const std::uint64_t L = l.get_ui();
    if (w.size() > 0 && 2 * L > (std::uint64_t{1} << 62) / w.size()) return out;
    out.scaled.reserve(w.size());
    for (const Rat& u : w.weights) {
        mpz_class ui = u.get_num() * (l / u.get_den());
        out.scaled.push_back(ui.get_ui());
    }
    out.two_l = 2 * L;
    out.usable = true;
    return out;
}

}  // namespace

std::uint64_t codeword_count_capped(const CodeSpec& spec, std::uint64_t cap) {
    const std::uint64_t p = spec.grid().field().modulus();
    std::uint64_t count = 1;
    for (std::size_t j = 0; j < spec.downset().size(); ++j) {
        if (count > cap / p) return cap;
        count *= p;
    }
    return std::min(count, cap);
}

bool is_enumerable(const CodeSpec& spec) {
    return codeword_count_capped(spec, kEnumerationGuard + 1) <= kEnumerationGuard;
}

NearestResult brute_force_nearest(const CodeSpec& spec, const WeightedWord& w) {
    w.validate();
    if (w.size() != spec.grid().point_count()) {
        throw std::invalid_argument("brute_force_nearest: word length != grid size");
    }
    const std::uint64_t mu = spec.min_distance();
    const ScaledWeights sw = scale_weights(w);

    std::uint64_t best_index = 0;
    std::uint64_t inside_count = 0;
    bool have_best = false;

    if (sw.usable) {
        // Integer fast path: compare 2L*Delta against mu*2L/2 = mu*L.
        std::uint64_t best_scaled = 0;
        const std::uint64_t radius_scaled = mu * (sw.two_l / 2);
        for_each_codeword(spec, [&](std::uint64_t index, const Word& word) {
            std::uint64_t dist = 0;
            for (std::size_t q = 0; q < word.size(); ++q) {
                dist += (w.values[q] == word[q]) ? sw.scaled[q] : sw.two_l - sw.scaled[q];
            }
            if (!have_best || dist < best_scaled) {
                have_best = true;
                best_scaled = dist;
                best_index = index;
            }
            if (dist < radius_scaled) ++inside_count;
        });
        std::map<ExpVec, Fp> coeffs = coefficients_at(spec, best_index);
        MultiPoly poly(spec.grid().field(), spec.grid().num_vars());
        for (const auto& [alpha, c] : coeffs) poly.add_term(alpha, c);
        Rat dist = weighted_distance(w, evaluate_on_grid(poly, spec.grid()));
        return NearestResult{poly, dist, inside_count == 1};
    }

    // Exact-rational fallback for weights with huge denominators.
    Rat best_dist;
    const Rat radius = make_rat(static_cast<std::int64_t>(mu), 2);
    for_each_codeword(spec, [&](std::uint64_t index, const Word& word) {
        Rat dist = weighted_distance(w, word);
        if (!have_best || dist < best_dist) {
            have_best = true;
            best_dist = dist;
            best_index = index;
        }
        if (dist < radius) ++inside_count;
    });
    std::map<ExpVec, Fp> coeffs = coefficients_at(spec, best_index);
    MultiPoly poly(spec.grid().field(), spec.grid().num_vars());
    for (const auto& [alpha, c] : coeffs) poly.add_term(alpha, c);
    return NearestResult{poly, best_dist, inside_count == 1};
}

std::uint64_t brute_force_min_distance(const CodeSpec& spec) {
    std::uint64_t best = spec.grid().point_count() + 1;
    for_each_codeword(spec, [&](std::uint64_t index, const Word& word) {
        if (index == 0) return;  // skip the zero codeword
        std::uint64_t weight = 0;
        for (Fp v : word) {
            if (v.v != 0) ++weight;
        }
        best = std::min(best, weight);
    });
    return best;
}

Word corrupt(const Word& word, std::size_t errors, const PrimeField& field, SplitMix64& rng) {
    if (errors > word.size()) {
        throw std::invalid_argument("corrupt: more errors than positions");
    }
    Word out = word;
    // Partial Fisher-Yates to pick `errors` distinct positions.
    std::vector<std::size_t> idx(word.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = 0; i < errors; ++i) {
        std::size_t j = i + rng.below(idx.size() - i);
        std::swap(idx[i], idx[j]);
        Fp delta{1 + rng.below(field.modulus() - 1)};
        out[idx[i]] = field.add(out[idx[i]], delta);
    }
    return out;
}

Downset random_downset(const std::vector<std::size_t>& box_sizes, std::size_t target,
                       SplitMix64& rng) {
    if (target == 0) throw std::invalid_argument("random_downset: target must be positive");
    const std::size_t m = box_sizes.size();
    if (m == 0) throw std::invalid_argument("random_downset: empty box");
    std::uint64_t box_total = 1;
    for (std::size_t k : box_sizes) {
        if (k == 0) throw std::invalid_argument("random_downset: zero-size box coordinate");
        box_total = (box_total > (std::uint64_t{1} << 32) / k) ? (std::uint64_t{1} << 32)
                                                               : box_total * k;
    }
    target = static_cast<std::size_t>(std::min<std::uint64_t>(target, box_total));
    const std::size_t bound = 2 * target;

    std::set<ExpVec> members;
    members.insert(ExpVec(m, 0));
    std::size_t stale = 0;
    while (members.size() < target && members.size() < box_total) {
        ExpVec alpha(m);
        for (std::size_t i = 0; i < m; ++i) {
            alpha[i] = static_cast<std::uint32_t>(rng.below(box_sizes[i]));
        }
        // Size of members union closure(alpha), bailing early past the bound.
        std::set<ExpVec> added;
        ExpVec beta(m, 0);
        bool done = false, overshoot = false;
        while (!done && !overshoot) {
            if (!members.count(beta)) {
                added.insert(beta);
                if (members.size() + added.size() > bound) overshoot = true;
            }
            done = true;
            for (std::size_t i = m; i-- > 0;) {
                if (++beta[i] <= alpha[i]) {
                    done = false;
                    break;
                }
                beta[i] = 0;
            }
        }
        if (!overshoot && !added.empty()) {
            members.insert(added.begin(), added.end());
            stale = 0;
            continue;
        }
        if (++stale < 64) continue;
        // Too many rejected samples: grow by one boundary element instead.
        std::vector<ExpVec> boundary;
        for (const auto& a : members) {
            ExpVec up = a;
            for (std::size_t i = 0; i < m; ++i) {
                up[i] = a[i] + 1;
                if (up[i] < box_sizes[i] && !members.count(up)) {
                    bool closed = true;
                    ExpVec down = up;
                    for (std::size_t j = 0; j < m && closed; ++j) {
                        if (up[j] == 0) continue;
                        down[j] = up[j] - 1;
                        if (!members.count(down)) closed = false;
                        down[j] = up[j];
                    }
                    if (closed) boundary.push_back(up);
                }
                up[i] = a[i];
            }
        }
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
        if (boundary.empty()) break;  // box exhausted
        members.insert(boundary[rng.below(boundary.size())]);
        stale = 0;
    }
    return Downset(box_sizes.size(), std::move(members));
}

CodeSpec random_spec(SplitMix64& rng, const SpecSampleOptions& opt) {
    const std::uint64_t p = opt.primes[rng.below(opt.primes.size())];
    PrimeField F(p);
    const std::size_t m = 1 + rng.below(opt.max_vars);

    std::vector<std::vector<Fp>> axes(m);
    std::vector<std::size_t> sizes(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = 1 + rng.below(std::min<std::uint64_t>(opt.max_axis, p));
        sizes[i] = k;
        // Partial Fisher-Yates over [0, p) when p is small, else rejection.
        if (p <= 4096) {
            std::vector<std::uint64_t> all(p);
            for (std::uint64_t v = 0; v < p; ++v) all[v] = v;
            for (std::size_t j = 0; j < k; ++j) {
                std::size_t r = j + rng.below(all.size() - j);
                std::swap(all[j], all[r]);
                axes[i].push_back(Fp{all[j]});
            }
        } else {
            std::set<std::uint64_t> seen;
            while (axes[i].size() < k) {
                std::uint64_t v = rng.below(p);
                if (seen.insert(v).second) axes[i].push_back(Fp{v});
            }
        }
    }
    Grid grid(F, std::move(axes));

    const double bits_per_coeff = std::log2(static_cast<double>(p));
    std::size_t limit = static_cast<std::size_t>(opt.max_codeword_bits / bits_per_coeff);
    limit = std::max<std::size_t>(1, std::min(limit, opt.max_downset));
    // random_downset may overshoot its target by 2x; halve the draw range.
    const std::size_t draw = std::max<std::size_t>(1, limit / 2);
    const std::size_t target = 1 + rng.below(draw);
    Downset ds = random_downset(sizes, target, rng);
    return CodeSpec(std::move(grid), std::move(ds));
}

std::map<ExpVec, Fp> random_coefficients(const CodeSpec& spec, SplitMix64& rng) {
    const std::uint64_t p = spec.grid().field().modulus();
    std::map<ExpVec, Fp> coeffs;
    for (const auto& alpha : spec.downset().members()) {
        std::uint64_t v = rng.below(p);
        if (v != 0) coeffs[alpha] = Fp{v};
    }
    return coeffs;
}

}  // namespace dscode
