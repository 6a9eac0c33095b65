#include "dscode/field.hpp"

#include <stdexcept>
#include <string>

namespace dscode {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (p >= kMaxModulus) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " exceeds 2^61");
    }
    if (!is_prime_u64(p)) {
        throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }
}

void PrimeField::check(Fp a) const {
    if (a.v >= p_) {
        throw std::invalid_argument("PrimeField: element " + std::to_string(a.v) +
                                    " not reduced mod " + std::to_string(p_) +
                                    " (mismatched field?)");
    }
}

Fp PrimeField::from_signed(std::int64_t x) const {
    std::int64_t r = x % static_cast<std::int64_t>(p_);
    if (r < 0) r += static_cast<std::int64_t>(p_);
    return Fp{static_cast<std::uint64_t>(r)};
}

Fp PrimeField::add(Fp a, Fp b) const {
    check(a);
    check(b);
    std::uint64_t s = a.v + b.v;  // p < 2^61, no overflow
    if (s >= p_) s -= p_;
    return Fp{s};
}

Fp PrimeField::sub(Fp a, Fp b) const {
    check(a);
    check(b);
    return Fp{a.v >= b.v ? a.v - b.v : a.v + p_ - b.v};
}

Fp PrimeField::mul(Fp a, Fp b) const {
    check(a);
    check(b);
    return Fp{mulmod_u64(a.v, b.v, p_)};
}

Fp PrimeField::neg(Fp a) const {
    check(a);
    return Fp{a.v == 0 ? 0 : p_ - a.v};
}

Fp PrimeField::inv(Fp a) const {
    check(a);
    if (a.v == 0) throw std::domain_error("PrimeField: inverse of zero");
    // Extended Euclid on (a, p); p prime so gcd is 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a.v);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp{static_cast<std::uint64_t>(t)};
}

Fp PrimeField::pow(Fp base, std::uint64_t exp) const {
    check(base);
    return Fp{powmod_u64(base.v, exp, p_)};
}

}  // namespace dscode
