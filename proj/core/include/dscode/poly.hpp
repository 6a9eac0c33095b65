#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dscode/field.hpp"
#include "dscode/grid.hpp"

namespace dscode {

/// Exponent vector (alpha_1, ..., alpha_m); identifies the monomial
/// X_1^{alpha_1} ... X_m^{alpha_m}.
using ExpVec = std::vector<std::uint32_t>;

/// Coordinatewise partial order: a <= b in every coordinate.
bool divides(const ExpVec& a, const ExpVec& b);

std::uint64_t total_degree(const ExpVec& a);

/// Graded lexicographic order with X_1 > X_2 > ... > X_m.
bool grlex_less(const ExpVec& a, const ExpVec& b);

/// Univariate polynomial over F_p, coefficients lowest degree first,
/// normalized so the highest stored coefficient is nonzero.
class UniPoly {
public:
    explicit UniPoly(const PrimeField& field) : field_(field) {}
    UniPoly(const PrimeField& field, std::vector<Fp> coeffs);

    static UniPoly constant(const PrimeField& field, Fp c);
    /// c * X^deg
    static UniPoly monomial(const PrimeField& field, std::size_t deg, Fp c);

    const PrimeField& field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Fp coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Fp{0}; }
    const std::vector<Fp>& coeffs() const { return coeffs_; }

    Fp eval(Fp x) const;

    UniPoly add(const UniPoly& g) const;
    UniPoly sub(const UniPoly& g) const;
    UniPoly mul(const UniPoly& g) const;
    UniPoly scaled(Fp c) const;

    /// Long division: *this = q * divisor + r with deg r < deg divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& divisor) const;

    bool operator==(const UniPoly& g) const;

private:
    void trim();
    PrimeField field_;
    std::vector<Fp> coeffs_;
};

/// Lagrange interpolation through points with distinct x. Throws on a
/// repeated abscissa or an empty list.
UniPoly interpolate_univariate(const PrimeField& field,
                               const std::vector<std::pair<Fp, Fp>>& points);

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient.
class MultiPoly {
public:
    MultiPoly(const PrimeField& field, std::size_t num_vars)
        : field_(field), num_vars_(num_vars) {}

    static MultiPoly constant(const PrimeField& field, std::size_t num_vars, Fp c);
    static MultiPoly monomial(const PrimeField& field, ExpVec alpha, Fp c);

    const PrimeField& field() const { return field_; }
    std::size_t num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<ExpVec, Fp>& terms() const { return terms_; }

    Fp coeff(const ExpVec& alpha) const;
    /// Adds c * X^alpha, dropping the term if the sum cancels.
    void add_term(const ExpVec& alpha, Fp c);

    Fp eval(const std::vector<Fp>& point) const;

    MultiPoly add(const MultiPoly& g) const;
    MultiPoly sub(const MultiPoly& g) const;
    MultiPoly mul(const MultiPoly& g) const;
    MultiPoly scaled(Fp c) const;

    /// Max exponent of variable i across the support; 0 for the zero poly.
    std::uint32_t degree_in(std::size_t var) const;

    /// The grlex-maximal exponent vector in the support. Throws on zero.
    ExpVec leading_monomial() const;

    bool operator==(const MultiPoly& g) const;

private:
    void require_same(const MultiPoly& g) const;
    PrimeField field_;
    std::size_t num_vars_;
    std::map<ExpVec, Fp> terms_;
};

/// Evaluation table of P over every grid point, canonical order.
std::vector<Fp> evaluate_on_grid(const MultiPoly& p, const Grid& grid);

/// The unique polynomial with deg_{X_i} <= k_i - 1 agreeing with the given
/// table on the whole grid (iterated coordinatewise Lagrange).
MultiPoly grid_interpolate(const Grid& grid, const std::vector<Fp>& table);

/// Reduce each X_i-degree below k_i by dividing out prod_{a in S_i}(X_i - a).
/// Preserves the function on the grid; every monomial of the result divides
/// a monomial of the input.
MultiPoly reduce_individual_degrees(const MultiPoly& p, const Grid& grid);

}  // namespace dscode
