#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dscode {

/// Exact rational, arbitrary precision, always canonical (lowest terms,
/// positive denominator). Backed by GMP's mpq.
using Rat = mpq_class;

inline Rat make_rat(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

/// Serialize as "num/den" in lowest terms, denominator always printed.
inline std::string rat_str(const Rat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parse "num/den" or a bare integer "num". Throws on malformed input.
inline Rat rat_parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
    Rat q;
    if (q.set_str(std::string(s), 10) != 0) {
        throw std::invalid_argument("rat_parse: malformed rational '" + std::string(s) + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("rat_parse: zero denominator in '" + std::string(s) + "'");
    }
    q.canonicalize();
    return q;
}

}  // namespace dscode
