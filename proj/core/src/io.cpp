#include "dscode/io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "dscode/downset.hpp"

namespace dscode {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw FileFormatError(origin + ": " + what);
}

json parse_json(const std::string& text, const std::string& origin) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) fail(origin, "not valid JSON");
    return j;
}

ExpVec parse_exponent(const json& arr, const std::string& origin, const std::string& field) {
    if (!arr.is_array()) fail(origin, field + ": expected an array of exponents");
    ExpVec e;
    for (const auto& x : arr) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0) {
            fail(origin, field + ": exponents must be nonnegative integers");
        }
        e.push_back(static_cast<std::uint32_t>(x.get<std::int64_t>()));
    }
    return e;
}

}  // namespace

CodeSpec parse_spec_json(const std::string& text, const std::string& origin) {
    json j = parse_json(text, origin);
    if (!j.is_object()) fail(origin, "top level must be an object");
    if (!j.contains("p") || !j["p"].is_number_integer() || j["p"].get<std::int64_t>() < 2) {
        fail(origin, "field 'p': expected an integer >= 2");
    }
    const std::uint64_t p = j["p"].get<std::uint64_t>();
    PrimeField field = [&] {
        try {
            return PrimeField(p);
        } catch (const std::invalid_argument& e) {
            fail(origin, std::string("field 'p': ") + e.what());
        }
    }();

    if (!j.contains("grid") || !j["grid"].is_array() || j["grid"].empty()) {
        fail(origin, "field 'grid': expected a nonempty array of axes");
    }
    std::vector<std::vector<Fp>> axes;
    for (const auto& axis : j["grid"]) {
        if (!axis.is_array() || axis.empty()) {
            fail(origin, "field 'grid': each axis must be a nonempty array of integers");
        }
        std::vector<Fp> a;
        for (const auto& x : axis) {
            if (!x.is_number_integer()) fail(origin, "field 'grid': axis entries must be integers");
            a.push_back(field.from_signed(x.get<std::int64_t>()));
        }
        axes.push_back(std::move(a));
    }
    const std::size_t m = axes.size();

    if (!j.contains("downset") || !j["downset"].is_object()) {
        fail(origin, "field 'downset': expected an object");
    }
    const json& dj = j["downset"];
    int forms = static_cast<int>(dj.contains("generators")) +
                static_cast<int>(dj.contains("total_degree")) +
                static_cast<int>(dj.contains("individual_degrees")) +
                static_cast<int>(dj.contains("members"));
    if (forms != 1) {
        fail(origin,
             "field 'downset': exactly one of 'generators', 'total_degree', "
             "'individual_degrees', 'members' required");
    }

    try {
        Grid grid(field, std::move(axes));
        if (dj.contains("total_degree")) {
            if (!dj["total_degree"].is_number_integer() || dj["total_degree"].get<std::int64_t>() < 0) {
                fail(origin, "field 'downset.total_degree': expected a nonnegative integer");
            }
            Downset ds = Downset::total_degree(m, dj["total_degree"].get<std::uint32_t>());
            return CodeSpec(std::move(grid), std::move(ds));
        }
        if (dj.contains("individual_degrees")) {
            ExpVec degs = parse_exponent(dj["individual_degrees"], origin,
                                         "field 'downset.individual_degrees'");
            if (degs.size() != m) {
                fail(origin, "field 'downset.individual_degrees': needs one entry per variable");
            }
            Downset ds = Downset::box(std::vector<std::uint32_t>(degs.begin(), degs.end()));
            return CodeSpec(std::move(grid), std::move(ds));
        }
        if (dj.contains("generators")) {
            if (!dj["generators"].is_array() || dj["generators"].empty()) {
                fail(origin, "field 'downset.generators': expected a nonempty array");
            }
            std::vector<ExpVec> gens;
            for (const auto& g : dj["generators"]) {
                ExpVec e = parse_exponent(g, origin, "field 'downset.generators'");
                if (e.size() != m) {
                    fail(origin, "field 'downset.generators': generator arity != number of variables");
                }
                gens.push_back(std::move(e));
            }
            return CodeSpec(std::move(grid), Downset::closure_of(m, gens));
        }
        // Explicit member list: must already be closed under taking factors.
        if (!dj["members"].is_array() || dj["members"].empty()) {
            fail(origin, "field 'downset.members': expected a nonempty array");
        }
        std::set<ExpVec> members;
        for (const auto& g : dj["members"]) {
            ExpVec e = parse_exponent(g, origin, "field 'downset.members'");
            if (e.size() != m) {
                fail(origin, "field 'downset.members': member arity != number of variables");
            }
            members.insert(std::move(e));
        }
        if (!is_downset(m, members)) {
            fail(origin, "field 'downset.members': not a downset (not closed under taking factors)");
        }
        return CodeSpec(std::move(grid), Downset(m, std::move(members)));
    } catch (const FileFormatError&) {
        throw;
    } catch (const std::exception& e) {
        fail(origin, e.what());
    }
}

CodeSpec load_spec_file(const std::string& path) {
    return parse_spec_json(read_file(path), path);
}

std::string spec_json(const CodeSpec& spec) {
    std::ostringstream os;
    os << "{\n  \"p\": " << spec.grid().field().modulus() << ",\n  \"grid\": [";
    for (std::size_t i = 0; i < spec.grid().num_vars(); ++i) {
        os << (i ? ", [" : "[");
        const auto& axis = spec.grid().axis(i);
        for (std::size_t j = 0; j < axis.size(); ++j) os << (j ? ", " : "") << axis[j].v;
        os << "]";
    }
    os << "],\n  \"downset\": { \"generators\": [";
    auto gens = spec.downset().maximal_members();
    for (std::size_t g = 0; g < gens.size(); ++g) {
        os << (g ? ", [" : "[");
        for (std::size_t j = 0; j < gens[g].size(); ++j) os << (j ? ", " : "") << gens[g][j];
        os << "]";
    }
    os << "] }\n}\n";
    return os.str();
}

WordFile parse_word_text(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;

    auto next_line = [&](bool required) -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        if (required) fail(origin, "unexpected end of file (incomplete word)");
        return false;
    };

    WordFile wf;
    if (!next_line(false)) fail(origin, "empty word file");
    {
        std::istringstream hs(line);
        std::int64_t p = 0, m = 0;
        if (!(hs >> p >> m) || p < 2 || m < 1) {
            fail(origin, "line 1: header must be 'p m k_1 ... k_m'");
        }
        wf.p = static_cast<std::uint64_t>(p);
        for (std::int64_t i = 0; i < m; ++i) {
            std::int64_t k = 0;
            if (!(hs >> k) || k < 1) fail(origin, "line 1: bad axis size in header");
            wf.axis_sizes.push_back(static_cast<std::size_t>(k));
        }
        std::string extra;
        if (hs >> extra) fail(origin, "line 1: trailing tokens after header");
    }

    std::uint64_t count = 1;
    for (std::size_t k : wf.axis_sizes) count *= k;

    bool any_weight = false;
    for (std::uint64_t i = 0; i < count; ++i) {
        next_line(true);
        std::istringstream ls(line);
        std::int64_t value = 0;
        if (!(ls >> value)) {
            fail(origin, "line " + std::to_string(line_no) + ": expected a field value");
        }
        std::int64_t r = value % static_cast<std::int64_t>(wf.p);
        if (r < 0) r += static_cast<std::int64_t>(wf.p);
        wf.values.push_back(Fp{static_cast<std::uint64_t>(r)});

        std::string wtok;
        if (ls >> wtok) {
            Rat u;
            try {
                u = rat_parse(wtok);
            } catch (const std::invalid_argument& e) {
                fail(origin, "line " + std::to_string(line_no) + ": " + e.what());
            }
            if (u < 0 || u > 1) {
                fail(origin, "line " + std::to_string(line_no) + ": weight " + rat_str(u) +
                                 " outside [0, 1]");
            }
            if (!any_weight) {
                any_weight = true;
                wf.weights.assign(wf.values.size() - 1, Rat(0));
            }
            wf.weights.push_back(u);
            std::string extra;
            if (ls >> extra) fail(origin, "line " + std::to_string(line_no) + ": trailing tokens");
        } else if (any_weight) {
            wf.weights.push_back(Rat(0));
        }
    }
    if (next_line(false)) fail(origin, "line " + std::to_string(line_no) + ": trailing content");
    return wf;
}

WordFile load_word_file(const std::string& path) {
    return parse_word_text(read_file(path), path);
}

namespace {
std::string word_header(const CodeSpec& spec) {
    std::ostringstream os;
    os << spec.grid().field().modulus() << " " << spec.grid().num_vars();
    for (std::size_t i = 0; i < spec.grid().num_vars(); ++i) os << " " << spec.grid().axis_size(i);
    os << "\n";
    return os.str();
}
}  // namespace

std::string word_text(const CodeSpec& spec, const Word& values) {
    std::ostringstream os;
    os << word_header(spec);
    for (Fp v : values) os << v.v << "\n";
    return os.str();
}

std::string weighted_word_text(const CodeSpec& spec, const WeightedWord& w) {
    std::ostringstream os;
    os << word_header(spec);
    for (std::size_t i = 0; i < w.size(); ++i) {
        os << w.values[i].v << " " << rat_str(w.weights[i]) << "\n";
    }
    return os.str();
}

void check_word_matches(const WordFile& wf, const CodeSpec& spec, const std::string& origin) {
    if (wf.p != spec.grid().field().modulus()) {
        fail(origin, "word header prime " + std::to_string(wf.p) + " != spec prime " +
                         std::to_string(spec.grid().field().modulus()));
    }
    if (wf.axis_sizes.size() != spec.grid().num_vars()) {
        fail(origin, "word header variable count != spec");
    }
    for (std::size_t i = 0; i < wf.axis_sizes.size(); ++i) {
        if (wf.axis_sizes[i] != spec.grid().axis_size(i)) {
            fail(origin, "word header axis size k_" + std::to_string(i + 1) + " != spec");
        }
    }
}

std::map<ExpVec, Fp> parse_coeff_json(const std::string& text, std::size_t num_vars,
                                      const PrimeField& field, const std::string& origin) {
    json j = parse_json(text, origin);
    if (!j.is_object() || !j.contains("coefficients") || !j["coefficients"].is_array()) {
        fail(origin, "expected an object with a 'coefficients' array");
    }
    std::map<ExpVec, Fp> coeffs;
    for (const auto& entry : j["coefficients"]) {
        if (!entry.is_object() || !entry.contains("exponent") || !entry.contains("value")) {
            fail(origin, "each coefficient needs 'exponent' and 'value'");
        }
        ExpVec e = parse_exponent(entry["exponent"], origin, "'exponent'");
        if (e.size() != num_vars) {
            fail(origin, "'exponent' arity != number of variables (" + std::to_string(num_vars) + ")");
        }
        if (!entry["value"].is_number_integer()) fail(origin, "'value' must be an integer");
        Fp v = field.from_signed(entry["value"].get<std::int64_t>());
        if (coeffs.count(e)) fail(origin, "duplicate exponent in coefficient list");
        if (v.v != 0) coeffs[e] = v;
    }
    return coeffs;
}

std::map<ExpVec, Fp> load_coeff_file(const std::string& path, std::size_t num_vars,
                                     const PrimeField& field) {
    return parse_coeff_json(read_file(path), num_vars, field, path);
}

namespace {

/// One coefficient entry per line keeps the documents diff-friendly.
void append_coeff_array(std::ostringstream& os, const std::map<ExpVec, Fp>& coeffs) {
    os << "  \"coefficients\": [";
    bool first = true;
    for (const auto& [alpha, c] : coeffs) {
        os << (first ? "\n" : ",\n") << "    { \"exponent\": [";
        for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? ", " : "") << alpha[i];
        os << "], \"value\": " << c.v << " }";
        first = false;
    }
    os << (first ? "]" : "\n  ]");
}

}  // namespace

std::string coeff_json(const std::map<ExpVec, Fp>& coeffs) {
    std::ostringstream os;
    os << "{\n";
    append_coeff_array(os, coeffs);
    os << "\n}\n";
    return os.str();
}

std::string decoded_json(const std::map<ExpVec, Fp>& coeffs, const Rat& distance) {
    std::ostringstream os;
    os << "{\n  \"status\": \"decoded\",\n  \"distance\": \"" << rat_str(distance) << "\",\n";
    append_coeff_array(os, coeffs);
    os << "\n}\n";
    return os.str();
}

std::string no_codeword_json(const Rat& radius) {
    std::ostringstream os;
    os << "{\n  \"status\": \"no_codeword_within_radius\",\n  \"radius\": \"" << rat_str(radius)
       << "\"\n}\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileFormatError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileFormatError(path + ": cannot open for writing");
    out << content;
    if (!out) throw FileFormatError(path + ": write failed");
}

}  // namespace dscode
