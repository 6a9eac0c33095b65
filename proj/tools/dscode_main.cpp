#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "dscode/decoder.hpp"
#include "dscode/fuzz.hpp"
#include "dscode/io.hpp"
#include "dscode/oracle.hpp"

namespace {

// Exit codes: 0 success/decoded/is-codeword, 1 usage or format error,
// 2 no codeword within the radius / not a codeword.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;

void emit(const std::string& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc;
    } else {
        dscode::write_file(out_path, doc);
    }
}

int cmd_encode(const std::string& spec_path, const std::string& coeff_path,
               const std::string& out_path) {
    dscode::CodeSpec spec = dscode::load_spec_file(spec_path);
    auto coeffs = dscode::load_coeff_file(coeff_path, spec.grid().num_vars(), spec.grid().field());
    dscode::Word word = dscode::encode(spec, coeffs);
    emit(dscode::word_text(spec, word), out_path);
    return kExitOk;
}

int cmd_decode(const std::string& spec_path, const std::string& word_path, bool weighted,
               unsigned threads, const std::string& out_path) {
    dscode::CodeSpec spec = dscode::load_spec_file(spec_path);
    dscode::WordFile wf = dscode::load_word_file(word_path);
    dscode::check_word_matches(wf, spec, word_path);

    dscode::WeightedWord w;
    if (weighted) {
        if (!wf.weighted()) {
            throw dscode::FileFormatError(word_path +
                                          ": weighted decode needs 'value num/den' lines");
        }
        w.values = wf.values;
        w.weights = wf.weights;
    } else {
        if (wf.weighted()) {
            throw dscode::FileFormatError(word_path +
                                          ": word carries weights; pass --weighted to use them");
        }
        w = dscode::WeightedWord::hard(wf.values);
    }

    dscode::MultiPoly cand = dscode::weighted_downset_decode(spec, w, {}, threads);
    dscode::Rat dist = dscode::weighted_distance(w, dscode::evaluate_on_grid(cand, spec.grid()));
    dscode::Rat radius = dscode::half_min_distance(spec);
    if (dist < radius) {
        std::map<dscode::ExpVec, dscode::Fp> coeffs(cand.terms().begin(), cand.terms().end());
        emit(dscode::decoded_json(coeffs, dist), out_path);
        return kExitOk;
    }
    emit(dscode::no_codeword_json(radius), out_path);
    return kExitNegative;
}

int cmd_distance(const std::string& spec_path) {
    dscode::CodeSpec spec = dscode::load_spec_file(spec_path);
    auto [mu, alpha] = spec.min_distance_attained();
    std::cout << "mu: " << mu << "\n";
    std::cout << "alpha:";
    for (auto e : alpha) std::cout << " " << e;
    std::cout << "\n";
    return kExitOk;
}

int cmd_verify(const std::string& spec_path, const std::string& word_path) {
    dscode::CodeSpec spec = dscode::load_spec_file(spec_path);
    dscode::WordFile wf = dscode::load_word_file(word_path);
    dscode::check_word_matches(wf, spec, word_path);
    if (dscode::is_codeword(spec, wf.values)) {
        std::cout << "codeword\n";
        return kExitOk;
    }
    std::cout << "not_codeword\n";
    return kExitNegative;
}

int cmd_fuzz(const dscode::FuzzOptions& opt) {
    dscode::FuzzOutcome outcome = dscode::run_fuzz(opt);
    std::cout << outcome.report;
    return outcome.all_passed ? kExitOk : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"downset code encoder/decoder over prime-field grids"};
    app.require_subcommand(1);

    std::string spec_path, word_path, coeff_path, out_path;
    bool weighted = false;
    unsigned threads = 1;
    dscode::FuzzOptions fuzz_opt;

    auto* enc = app.add_subcommand("encode", "evaluate a coefficient table over the grid");
    enc->add_option("spec", spec_path, "code spec JSON file")->required();
    enc->add_option("coeffs", coeff_path, "coefficient JSON file")->required();
    enc->add_option("-o,--output", out_path, "word file (default: stdout)");

    auto* dec = app.add_subcommand("decode", "unique decoding of a received word");
    dec->add_option("spec", spec_path, "code spec JSON file")->required();
    dec->add_option("word", word_path, "received word file")->required();
    dec->add_flag("--weighted", weighted, "use the per-position weights in the word file");
    dec->add_option("--threads", threads, "worker threads for the column decodes (default 1)");
    dec->add_option("-o,--output", out_path, "result JSON (default: stdout)");

    auto* dist = app.add_subcommand("distance", "minimum distance and an attaining monomial");
    dist->add_option("spec", spec_path, "code spec JSON file")->required();

    auto* ver = app.add_subcommand("verify", "codeword membership test");
    ver->add_option("spec", spec_path, "code spec JSON file")->required();
    ver->add_option("word", word_path, "word file")->required();

    auto* fz = app.add_subcommand("fuzz", "randomized oracle-equivalence checks");
    fz->add_option("--seed", fuzz_opt.seed, "master seed");
    fz->add_option("--cases", fuzz_opt.cases, "number of cases");
    fz->add_option("--max-p", fuzz_opt.max_p, "largest prime to sample");
    fz->add_option("--max-m", fuzz_opt.max_m, "largest number of variables");
    fz->add_option("--max-grid", fuzz_opt.max_grid, "largest axis size");
    fz->add_option("--threads", fuzz_opt.threads, "worker threads (default 1)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(spec_path, coeff_path, out_path);
        if (dec->parsed()) return cmd_decode(spec_path, word_path, weighted, threads, out_path);
        if (dist->parsed()) return cmd_distance(spec_path);
        if (ver->parsed()) return cmd_verify(spec_path, word_path);
        if (fz->parsed()) return cmd_fuzz(fuzz_opt);
    } catch (const dscode::FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
