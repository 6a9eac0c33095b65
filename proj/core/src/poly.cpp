#include "dscode/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dscode {

bool divides(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("divides: dimension mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

std::uint64_t total_degree(const ExpVec& a) {
    std::uint64_t d = 0;
    for (auto e : a) d += e;
    return d;
}

bool grlex_less(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("grlex_less: dimension mismatch");
    std::uint64_t da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------- UniPoly

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().v == 0) coeffs_.pop_back();
}

UniPoly::UniPoly(const PrimeField& field, std::vector<Fp> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {
    for (Fp c : coeffs_) {
        if (c.v >= field_.modulus()) {
            throw std::invalid_argument("UniPoly: coefficient not reduced mod p");
        }
    }
    trim();
}

UniPoly UniPoly::constant(const PrimeField& field, Fp c) {
    UniPoly r(field);
    if (c.v != 0) r.coeffs_ = {c};
    return r;
}

UniPoly UniPoly::monomial(const PrimeField& field, std::size_t deg, Fp c) {
    UniPoly r(field);
    if (c.v != 0) {
        r.coeffs_.assign(deg + 1, Fp{0});
        r.coeffs_[deg] = c;
    }
    return r;
}

Fp UniPoly::eval(Fp x) const {
    Fp acc{0};
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    }
    return acc;
}

UniPoly UniPoly::add(const UniPoly& g) const {
    if (field_ != g.field_) throw std::invalid_argument("UniPoly::add: field mismatch");
    UniPoly r(field_);
    r.coeffs_.assign(std::max(coeffs_.size(), g.coeffs_.size()), Fp{0});
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] = field_.add(coeff(i), g.coeff(i));
    }
    r.trim();
    return r;
}

UniPoly UniPoly::sub(const UniPoly& g) const {
    if (field_ != g.field_) throw std::invalid_argument("UniPoly::sub: field mismatch");
    UniPoly r(field_);
    r.coeffs_.assign(std::max(coeffs_.size(), g.coeffs_.size()), Fp{0});
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] = field_.sub(coeff(i), g.coeff(i));
    }
    r.trim();
    return r;
}

UniPoly UniPoly::mul(const UniPoly& g) const {
    if (field_ != g.field_) throw std::invalid_argument("UniPoly::mul: field mismatch");
    if (is_zero() || g.is_zero()) return UniPoly(field_);
    UniPoly r(field_);
    r.coeffs_.assign(coeffs_.size() + g.coeffs_.size() - 1, Fp{0});
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].v == 0) continue;
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
            r.coeffs_[i + j] = field_.add(r.coeffs_[i + j], field_.mul(coeffs_[i], g.coeffs_[j]));
        }
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(Fp c) const {
    UniPoly r(field_);
    if (c.v == 0) return r;
    r.coeffs_.reserve(coeffs_.size());
    for (Fp a : coeffs_) r.coeffs_.push_back(field_.mul(a, c));
    r.trim();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divrem(const UniPoly& divisor) const {
    if (field_ != divisor.field_) throw std::invalid_argument("UniPoly::divrem: field mismatch");
    if (divisor.is_zero()) throw std::domain_error("UniPoly::divrem: division by zero polynomial");
    if (degree() < divisor.degree()) return {UniPoly(field_), *this};

    std::vector<Fp> rem = coeffs_;
    std::vector<Fp> quot(coeffs_.size() - divisor.coeffs_.size() + 1, Fp{0});
    Fp lead_inv = field_.inv(divisor.coeffs_.back());
    for (std::size_t k = quot.size(); k-- > 0;) {
        Fp factor = field_.mul(rem[k + divisor.coeffs_.size() - 1], lead_inv);
        quot[k] = factor;
        if (factor.v == 0) continue;
        for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) {
            rem[k + j] = field_.sub(rem[k + j], field_.mul(factor, divisor.coeffs_[j]));
        }
    }
    UniPoly q(field_), r(field_);
    q.coeffs_ = std::move(quot);
    q.trim();
    r.coeffs_ = std::move(rem);
    r.trim();
    return {q, r};
}

bool UniPoly::operator==(const UniPoly& g) const {
    return field_ == g.field_ && coeffs_ == g.coeffs_;
}

UniPoly interpolate_univariate(const PrimeField& field,
                               const std::vector<std::pair<Fp, Fp>>& points) {
    if (points.empty()) throw std::invalid_argument("interpolate_univariate: no points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (points[i].first == points[j].first) {
                throw std::invalid_argument("interpolate_univariate: repeated x = " +
                                            std::to_string(points[i].first.v));
            }
        }
    }
    // master(X) = prod (X - x_j); per point divide out (X - x_i) and scale.
    UniPoly master = UniPoly::constant(field, field.one());
    for (const auto& [x, y] : points) {
        master = master.mul(UniPoly(field, {field.neg(x), field.one()}));
    }
    UniPoly result(field);
    for (const auto& [x, y] : points) {
        if (y.v == 0) continue;
        auto [li, rem] = master.divrem(UniPoly(field, {field.neg(x), field.one()}));
        Fp denom = li.eval(x);
        result = result.add(li.scaled(field.div(y, denom)));
    }
    return result;
}

// --------------------------------------------------------------- MultiPoly

void MultiPoly::require_same(const MultiPoly& g) const {
    if (field_ != g.field_ || num_vars_ != g.num_vars_) {
        throw std::invalid_argument("MultiPoly: field or arity mismatch");
    }
}

MultiPoly MultiPoly::constant(const PrimeField& field, std::size_t num_vars, Fp c) {
    MultiPoly r(field, num_vars);
    r.add_term(ExpVec(num_vars, 0), c);
    return r;
}

MultiPoly MultiPoly::monomial(const PrimeField& field, ExpVec alpha, Fp c) {
    MultiPoly r(field, alpha.size());
    r.add_term(alpha, c);
    return r;
}

Fp MultiPoly::coeff(const ExpVec& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Fp{0} : it->second;
}

void MultiPoly::add_term(const ExpVec& alpha, Fp c) {
    if (alpha.size() != num_vars_) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    if (c.v >= field_.modulus()) throw std::invalid_argument("MultiPoly: coefficient not reduced");
    if (c.v == 0) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second.v == 0) terms_.erase(it);
    }
}

Fp MultiPoly::eval(const std::vector<Fp>& point) const {
    if (point.size() != num_vars_) throw std::invalid_argument("MultiPoly::eval: dimension mismatch");
    Fp acc{0};
    for (const auto& [alpha, c] : terms_) {
        Fp term = c;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (alpha[i]) term = field_.mul(term, field_.pow(point[i], alpha[i]));
        }
        acc = field_.add(acc, term);
    }
    return acc;
}

MultiPoly MultiPoly::add(const MultiPoly& g) const {
    require_same(g);
    MultiPoly r = *this;
    for (const auto& [alpha, c] : g.terms_) r.add_term(alpha, c);
    return r;
}

MultiPoly MultiPoly::sub(const MultiPoly& g) const {
    require_same(g);
    MultiPoly r = *this;
    for (const auto& [alpha, c] : g.terms_) r.add_term(alpha, field_.neg(c));
    return r;
}

MultiPoly MultiPoly::mul(const MultiPoly& g) const {
    require_same(g);
    MultiPoly r(field_, num_vars_);
    for (const auto& [a, ca] : terms_) {
        for (const auto& [b, cb] : g.terms_) {
            ExpVec sum(num_vars_);
            for (std::size_t i = 0; i < num_vars_; ++i) sum[i] = a[i] + b[i];
            r.add_term(sum, field_.mul(ca, cb));
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(Fp c) const {
    MultiPoly r(field_, num_vars_);
    for (const auto& [alpha, ca] : terms_) r.add_term(alpha, field_.mul(ca, c));
    return r;
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
    if (var >= num_vars_) throw std::invalid_argument("MultiPoly::degree_in: bad variable");
    std::uint32_t d = 0;
    for (const auto& [alpha, c] : terms_) d = std::max(d, alpha[var]);
    return d;
}

ExpVec MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("MultiPoly::leading_monomial: zero polynomial");
    const ExpVec* best = &terms_.begin()->first;
    for (const auto& [alpha, c] : terms_) {
        if (grlex_less(*best, alpha)) best = &alpha;
    }
    return *best;
}

bool MultiPoly::operator==(const MultiPoly& g) const {
    return field_ == g.field_ && num_vars_ == g.num_vars_ && terms_ == g.terms_;
}

// ------------------------------------------------------- grid operations

std::vector<Fp> evaluate_on_grid(const MultiPoly& p, const Grid& grid) {
    if (p.field() != grid.field()) throw std::invalid_argument("evaluate_on_grid: field mismatch");
    if (p.num_vars() != grid.num_vars()) {
        throw std::invalid_argument("evaluate_on_grid: dimension mismatch");
    }
    const PrimeField& F = grid.field();
    const std::size_t m = grid.num_vars();

    // Power tables: pow_tab[i][a][e] = axis_i[a]^e for e up to deg_i(P).
    std::vector<std::vector<std::vector<Fp>>> pow_tab(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t dmax = p.degree_in(i);
        pow_tab[i].resize(grid.axis_size(i));
        for (std::size_t a = 0; a < grid.axis_size(i); ++a) {
            auto& row = pow_tab[i][a];
            row.assign(dmax + 1, F.one());
            for (std::uint32_t e = 1; e <= dmax; ++e) {
                row[e] = F.mul(row[e - 1], grid.axis(i)[a]);
            }
        }
    }

    std::vector<Fp> out(grid.point_count(), Fp{0});
    std::vector<std::size_t> idx(m, 0);  // odometer, last coordinate fastest
    for (std::uint64_t n = 0; n < grid.point_count(); ++n) {
        Fp acc{0};
        for (const auto& [alpha, c] : p.terms()) {
            Fp term = c;
            for (std::size_t i = 0; i < m; ++i) {
                if (alpha[i]) term = F.mul(term, pow_tab[i][idx[i]][alpha[i]]);
            }
            acc = F.add(acc, term);
        }
        out[n] = acc;
        for (std::size_t i = m; i-- > 0;) {
            if (++idx[i] < grid.axis_size(i)) break;
            idx[i] = 0;
        }
    }
    return out;
}

MultiPoly grid_interpolate(const Grid& grid, const std::vector<Fp>& table) {
    if (table.size() != grid.point_count()) {
        throw std::invalid_argument("grid_interpolate: table size " + std::to_string(table.size()) +
                                    " != grid size " + std::to_string(grid.point_count()));
    }
    const PrimeField& F = grid.field();
    const std::size_t m = grid.num_vars();

    if (m == 1) {
        std::vector<std::pair<Fp, Fp>> pts(grid.axis_size(0));
        for (std::size_t a = 0; a < pts.size(); ++a) pts[a] = {grid.axis(0)[a], table[a]};
        UniPoly u = interpolate_univariate(F, pts);
        MultiPoly r(F, 1);
        for (std::size_t e = 0; e < u.coeffs().size(); ++e) {
            r.add_term({static_cast<std::uint32_t>(e)}, u.coeff(e));
        }
        return r;
    }

    // Interpolate along the last axis column by column, then recurse on the
    // coefficient tables over the prefix grid.
    Grid sub = grid.prefix();
    const std::size_t km = grid.axis_size(m - 1);
    const std::uint64_t cols = sub.point_count();
    std::vector<std::vector<Fp>> coeff_tables(km, std::vector<Fp>(cols, Fp{0}));
    std::vector<std::pair<Fp, Fp>> pts(km);
    for (std::uint64_t x = 0; x < cols; ++x) {
        for (std::size_t y = 0; y < km; ++y) {
            pts[y] = {grid.axis(m - 1)[y], table[x * km + y]};
        }
        UniPoly u = interpolate_univariate(F, pts);
        for (std::size_t e = 0; e < km; ++e) coeff_tables[e][x] = u.coeff(e);
    }

    MultiPoly result(F, m);
    for (std::size_t e = 0; e < km; ++e) {
        MultiPoly pe = grid_interpolate(sub, coeff_tables[e]);
        for (const auto& [alpha, c] : pe.terms()) {
            ExpVec full = alpha;
            full.push_back(static_cast<std::uint32_t>(e));
            result.add_term(full, c);
        }
    }
    return result;
}

MultiPoly reduce_individual_degrees(const MultiPoly& p, const Grid& grid) {
    if (p.field() != grid.field()) {
        throw std::invalid_argument("reduce_individual_degrees: field mismatch");
    }
    if (p.num_vars() != grid.num_vars()) {
        throw std::invalid_argument("reduce_individual_degrees: dimension mismatch");
    }
    const PrimeField& F = grid.field();
    MultiPoly cur = p;

    for (std::size_t var = 0; var < grid.num_vars(); ++var) {
        const std::size_t k = grid.axis_size(var);
        std::uint32_t dmax = cur.degree_in(var);
        if (dmax < k) continue;

        // vanisher(X) = prod_{a in S_var} (X - a), monic of degree k.
        UniPoly vanisher = UniPoly::constant(F, F.one());
        for (Fp a : grid.axis(var)) {
            vanisher = vanisher.mul(UniPoly(F, {F.neg(a), F.one()}));
        }
        // rems[e] = X^e mod vanisher, for e in [k, dmax].
        std::vector<UniPoly> rems;
        rems.reserve(dmax - k + 1);
        {
            UniPoly xk = UniPoly::monomial(F, k, F.one());
            UniPoly r = xk.divrem(vanisher).second;
            rems.push_back(r);
            for (std::uint32_t e = k + 1; e <= dmax; ++e) {
                UniPoly shifted(F);
                std::vector<Fp> cs(rems.back().coeffs().size() + 1, Fp{0});
                for (std::size_t i = 0; i < rems.back().coeffs().size(); ++i) {
                    cs[i + 1] = rems.back().coeff(i);
                }
                shifted = UniPoly(F, std::move(cs));
                rems.push_back(shifted.divrem(vanisher).second);
            }
        }

        MultiPoly next(F, cur.num_vars());
        for (const auto& [alpha, c] : cur.terms()) {
            if (alpha[var] < k) {
                next.add_term(alpha, c);
                continue;
            }
            const UniPoly& rem = rems[alpha[var] - k];
            for (std::size_t e = 0; e < rem.coeffs().size(); ++e) {
                if (rem.coeff(e).v == 0) continue;
                ExpVec beta = alpha;
                beta[var] = static_cast<std::uint32_t>(e);
                next.add_term(beta, F.mul(c, rem.coeff(e)));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

}  // namespace dscode
