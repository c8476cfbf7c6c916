// textchi: word-order connectivity of texts via compressed volume under
// progressive word intermixing.

#include <fnmatch.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "textchi/chi_analysis.hpp"
#include "textchi/corpus.hpp"
#include "textchi/error.hpp"
#include "textchi/report_io.hpp"
#include "textchi/zipf_synth.hpp"

namespace fs = std::filesystem;
using namespace textchi;

namespace {

struct CommonOptions {
    std::uint64_t seed = 42;
    double threshold = 1.0;
    int plateau_start = 6;
    int max_k = 20;
    int swap_divisor = 10;
    std::string backend = "builtin";
    int gzip_level = 6;
    CompressorConfig lz;
    bool latin1 = false;
    unsigned threads = 0;

    AnalysisConfig analysis() const {
        AnalysisConfig cfg;
        cfg.backend.backend = backend_from_string(backend);
        cfg.backend.gzip_level = gzip_level;
        cfg.backend.lz = lz;
        cfg.max_k = max_k;
        cfg.swap_divisor = swap_divisor;
        cfg.plateau_start = plateau_start;
        cfg.threshold = threshold;
        cfg.threads = threads;
        return cfg;
    }

    Encoding encoding() const { return latin1 ? Encoding::Latin1 : Encoding::Utf8; }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
    cmd->add_option("--threshold", o.threshold, "chi above this is coherent text")->capture_default_str();
    cmd->add_option("--plateau-start", o.plateau_start, "first k averaged into the plateau")
        ->capture_default_str();
    cmd->add_option("--max-k", o.max_k, "largest intermixing coefficient")->capture_default_str();
    cmd->add_option("--swap-divisor", o.swap_divisor, "state k gets floor(k*N/divisor) swaps")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd->add_option("--backend", o.backend, "compressor")
        ->check(CLI::IsMember({"builtin", "gzip"}))
        ->capture_default_str();
    cmd->add_option("--gzip-level", o.gzip_level, "gzip compression level")
        ->check(CLI::Range(1, 9))
        ->capture_default_str();
    cmd->add_option("--window", o.lz.window_size, "builtin LZ window in bytes")->capture_default_str();
    cmd->add_option("--min-match", o.lz.min_match, "builtin LZ shortest match")->capture_default_str();
    cmd->add_option("--max-match", o.lz.max_match, "builtin LZ longest match")->capture_default_str();
    cmd->add_option("--literal-bits", o.lz.literal_cost, "cost of a literal token")->capture_default_str();
    cmd->add_option("--match-bits", o.lz.match_cost, "cost of a match token")->capture_default_str();
    cmd->add_flag("--latin1", o.latin1, "decode input as ISO-8859-1 instead of UTF-8");
    cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")->capture_default_str();
}

void write_or_print(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot write " + path);
    }
    out << text;
}

std::vector<std::size_t> parse_lengths(const std::string& list) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string item = list.substr(start, comma - start);
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(item, &used);
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
            out.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorCode::InvalidArgument, "bad fragment length '" + item + "'");
        }
        start = comma + 1;
    }
    return out;
}

int run_analyze(const std::string& file, const CommonOptions& o, const std::string& curve_csv) {
    const Document doc = load_document(file, o.encoding());
    const AnalysisConfig cfg = o.analysis();
    const VolumeCurve curve = volume_curve(doc, o.seed, cfg);
    const ChiReport report = chi(curve, cfg.plateau_start, cfg.threshold);

    nlohmann::ordered_json j;
    j["source_id"] = doc.source_id;
    j["seed"] = o.seed;
    j["words"] = curve.words;
    j["report"] = to_json(report);
    j["run_config"] = run_config_json(cfg);

    std::ostringstream csv;
    write_curve_csv(csv, curve);
    std::cout << j.dump(2) << '\n';
    if (curve_csv.empty()) {
        std::cout << '\n' << csv.str();
    } else {
        write_or_print(curve_csv, csv.str());
    }
    return 0;
}

int run_curve_by_length(const std::string& file, const std::string& lengths, const CommonOptions& o,
                        const std::string& out) {
    const Document doc = load_document(file, o.encoding());
    const auto parsed = parse_lengths(lengths);
    const auto series = chi_vs_length(doc, parsed, o.seed, o.analysis());
    std::ostringstream csv;
    write_length_csv(csv, series);
    write_or_print(out, csv.str());
    return 0;
}

struct GenerateOptions {
    std::size_t vocab_size = 1000;
    double exponent = 1.0;
    std::size_t symbols = 10000;
    std::uint64_t seed = 1;
    std::size_t count = 1;
    std::string out_dir;
};

int run_generate(const GenerateOptions& g) {
    fs::create_directories(g.out_dir);
    nlohmann::ordered_json manifest;
    manifest["generator"] = "iid zipf pseudowords";
    manifest["vocab_size"] = g.vocab_size;
    manifest["exponent"] = g.exponent;
    manifest["symbols"] = g.symbols;
    manifest["first_seed"] = g.seed;
    manifest["files"] = nlohmann::ordered_json::array();
    const ZipfTextParams params{g.vocab_size, g.exponent, g.symbols};
    for (std::size_t i = 0; i < g.count; ++i) {
        const std::uint64_t seed = g.seed + i;
        char name[32];
        std::snprintf(name, sizeof(name), "zipf_%04zu.txt", i + 1);
        const Document doc = generate_zipf_document(params, seed, name);
        write_or_print((fs::path(g.out_dir) / name).string(), doc.content);
        nlohmann::ordered_json f;
        f["file"] = name;
        f["seed"] = seed;
        f["vocab_size"] = g.vocab_size;
        f["exponent"] = g.exponent;
        f["target_symbols"] = g.symbols;
        f["symbols"] = symbol_count(doc);
        manifest["files"].push_back(std::move(f));
    }
    write_or_print((fs::path(g.out_dir) / "manifest.json").string(), manifest.dump(2) + "\n");
    std::cerr << "wrote " << g.count << " documents to " << g.out_dir << '\n';
    return 0;
}

int run_batch(const std::string& dir, const std::string& glob, const CommonOptions& o,
              const std::string& out, const std::string& csv_out) {
    if (!fs::is_directory(dir)) {
        throw Error(ErrorCode::Io, dir + " is not a directory");
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() &&
            fnmatch(glob.c_str(), entry.path().filename().c_str(), 0) == 0) {
            files.push_back(entry.path());
        }
    }
    // Ordinals follow file-name order so seeds do not depend on the filesystem.
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    if (files.empty()) {
        throw Error(ErrorCode::EmptyCorpus, "no files matching '" + glob + "' in " + dir);
    }
    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& f : files) {
        docs.push_back(load_document(f, o.encoding()));
    }
    const CorpusReport report = analyze_corpus(docs, o.seed, o.analysis());
    write_or_print(out, to_json(report).dump(2) + "\n");
    if (!csv_out.empty()) {
        std::ostringstream csv;
        write_corpus_csv(csv, report);
        write_or_print(csv_out, csv.str());
    }
    std::cerr << report.entries.size() << " documents, " << report.skipped << " skipped, pass fraction "
              << report.pass_fraction << '\n';
    return 0;
}

int run_compare(const std::string& real, const std::string& artificial, const std::string& out) {
    const auto comparison = compare_groups(read_corpus_report(real), read_corpus_report(artificial));
    write_or_print(out, to_json(comparison).dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Measure text connectivity from compressed volume under word intermixing"};
    app.require_subcommand(1);

    CommonOptions analyze_opts;
    std::string analyze_file;
    std::string curve_csv;
    auto* analyze = app.add_subcommand("analyze", "chi report (JSON) and volume curve (CSV) for one file");
    analyze->add_option("file", analyze_file, "text file")->required()->check(CLI::ExistingFile);
    analyze->add_option("--curve-csv", curve_csv, "write the curve CSV here instead of stdout");
    add_common(analyze, analyze_opts);

    CommonOptions length_opts;
    std::string length_file;
    std::string lengths;
    std::string length_out;
    auto* by_length = app.add_subcommand("curve-by-length", "chi of growing prefixes as CSV");
    by_length->add_option("file", length_file, "text file")->required()->check(CLI::ExistingFile);
    by_length->add_option("--lengths", lengths, "comma-separated prefix lengths in symbols")->required();
    by_length->add_option("--out", length_out, "output CSV (default stdout)");
    add_common(by_length, length_opts);

    GenerateOptions gen_opts;
    auto* generate = app.add_subcommand("generate", "write i.i.d. Zipf pseudoword texts and a manifest");
    generate->add_option("--vocab-size", gen_opts.vocab_size, "distinct pseudowords")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate->add_option("--exponent", gen_opts.exponent, "Zipf exponent s")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate->add_option("--symbols", gen_opts.symbols, "target document length")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    generate->add_option("--seed", gen_opts.seed, "seed of the first document; document i uses seed+i")
        ->capture_default_str();
    generate->add_option("--count", gen_opts.count, "number of documents")->capture_default_str();
    generate->add_option("--out-dir", gen_opts.out_dir, "output directory")->required();

    CommonOptions batch_opts;
    std::string batch_dir;
    std::string batch_glob = "*.txt";
    std::string batch_out;
    std::string batch_csv;
    auto* batch = app.add_subcommand("batch", "analyze every matching file of a directory");
    batch->add_option("dir", batch_dir, "corpus directory")->required();
    batch->add_option("--glob", batch_glob, "file-name pattern")->capture_default_str();
    batch->add_option("--out", batch_out, "report JSON (default stdout)");
    batch->add_option("--csv", batch_csv, "rank CSV");
    add_common(batch, batch_opts);

    std::string cmp_real;
    std::string cmp_art;
    std::string cmp_out;
    auto* compare = app.add_subcommand("compare", "summarize real against artificial corpus reports");
    compare->add_option("--real", cmp_real, "batch report of real texts")->required()->check(CLI::ExistingFile);
    compare->add_option("--artificial", cmp_art, "batch report of generated texts")
        ->required()
        ->check(CLI::ExistingFile);
    compare->add_option("--out", cmp_out, "output JSON (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) {
            return run_analyze(analyze_file, analyze_opts, curve_csv);
        }
        if (*by_length) {
            return run_curve_by_length(length_file, lengths, length_opts, length_out);
        }
        if (*generate) {
            return run_generate(gen_opts);
        }
        if (*batch) {
            return run_batch(batch_dir, batch_glob, batch_opts, batch_out, batch_csv);
        }
        if (*compare) {
            return run_compare(cmp_real, cmp_art, cmp_out);
        }
    } catch (const Error& e) {
        std::cerr << "textchi: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "textchi: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
