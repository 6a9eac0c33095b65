#pragma once

#include <compare>
#include <cstdint>

namespace dscode {

/// Element of a prime field F_p, stored as its representative in [0, p).
/// The modulus lives in the PrimeField descriptor, not in the element.
struct Fp {
    std::uint64_t v = 0;
    auto operator<=>(const Fp&) const = default;
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// Arithmetic descriptor for F_p with a runtime modulus p, 2 <= p < 2^61.
/// Immutable value type; all element operations go through the descriptor.
class PrimeField {
public:
    static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp{0}; }
    Fp one() const { return Fp{1 % p_}; }
    Fp from_int(std::uint64_t x) const { return Fp{x % p_}; }
    Fp from_signed(std::int64_t x) const;

    Fp add(Fp a, Fp b) const;
    Fp sub(Fp a, Fp b) const;
    Fp mul(Fp a, Fp b) const;
    Fp neg(Fp a) const;
    Fp inv(Fp a) const;            // extended Euclid; throws on zero
    Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }
    Fp pow(Fp base, std::uint64_t exp) const;

    bool operator==(const PrimeField&) const = default;

private:
    void check(Fp a) const;        // representative must be reduced
    std::uint64_t p_;
};

}  // namespace dscode
