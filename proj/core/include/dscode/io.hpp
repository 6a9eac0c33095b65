#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dscode/code.hpp"
#include "dscode/weighted.hpp"

namespace dscode {

/// Malformed input file; the message carries file/line/field context.
struct FileFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Code specification document (JSON):
///   { "p": <prime>,
///     "grid": [[...], ...],                 // integers, reduced mod p
///     "downset": { "generators": [[...]] }  // or "total_degree": d
///   }                                       // or "individual_degrees": [...]
///                                           // or "members": [[...], ...]
/// An explicit member list must already be a downset.
CodeSpec parse_spec_json(const std::string& text, const std::string& origin);
CodeSpec load_spec_file(const std::string& path);

/// Canonical spec document; the downset is stored by its maximal members.
std::string spec_json(const CodeSpec& spec);

/// Word file: header "p m k_1 ... k_m", then one line per grid point in
/// canonical order: "value" or "value num/den" (weight in [0, 1]).
struct WordFile {
    std::uint64_t p = 0;
    std::vector<std::size_t> axis_sizes;
    std::vector<Fp> values;
    std::vector<Rat> weights;  // empty for an unweighted file

    bool weighted() const { return !weights.empty(); }
};

WordFile parse_word_text(const std::string& text, const std::string& origin);
WordFile load_word_file(const std::string& path);
std::string word_text(const CodeSpec& spec, const Word& values);
std::string weighted_word_text(const CodeSpec& spec, const WeightedWord& w);

/// Header must match the spec's prime and axis sizes.
void check_word_matches(const WordFile& wf, const CodeSpec& spec, const std::string& origin);

/// Coefficient document (JSON):
///   { "coefficients": [ { "exponent": [...], "value": v }, ... ] }
std::map<ExpVec, Fp> parse_coeff_json(const std::string& text, std::size_t num_vars,
                                      const PrimeField& field, const std::string& origin);
std::map<ExpVec, Fp> load_coeff_file(const std::string& path, std::size_t num_vars,
                                     const PrimeField& field);
std::string coeff_json(const std::map<ExpVec, Fp>& coeffs);

/// Decode result documents.
std::string decoded_json(const std::map<ExpVec, Fp>& coeffs, const Rat& distance);
std::string no_codeword_json(const Rat& radius);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace dscode
