#include "textchi/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <string>

#include "textchi/error.hpp"

namespace textchi {
namespace {

std::string fixed(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out.push_back('"');
    return out;
}

} // namespace

nlohmann::ordered_json run_config_json(const AnalysisConfig& cfg) {
    nlohmann::ordered_json backend;
    backend["name"] = to_string(cfg.backend.backend);
    if (cfg.backend.backend == Backend::BuiltinLz) {
        const auto& lz = cfg.backend.lz;
        backend["window_size"] = lz.window_size;
        backend["min_match"] = lz.min_match;
        backend["max_match"] = lz.max_match;
        backend["literal_cost_bits"] = lz.literal_cost;
        backend["match_cost_bits"] = lz.match_cost;
        backend["parse"] = "greedy, nearest offset on ties";
    } else {
        backend["gzip_level"] = cfg.backend.gzip_level;
        backend["encoder"] = gzip_encoder_id();
    }

    nlohmann::ordered_json j;
    j["backend"] = backend;
    j["max_k"] = cfg.max_k;
    j["swap_divisor"] = cfg.swap_divisor;
    j["plateau_start"] = cfg.plateau_start;
    j["threshold"] = cfg.threshold;
    j["tokenization"] = "unicode whitespace split; punctuation and case preserved";
    j["serialization"] = "single ASCII space between tokens";
    j["intermixing"] = "cumulative states along one prng stream; n == m swaps allowed";
    j["prng"] = "xorshift64*";
    return j;
}

nlohmann::ordered_json to_json(const ChiReport& r) {
    nlohmann::ordered_json j;
    j["chi"] = r.chi;
    j["v0"] = r.v0;
    j["plateau_mean"] = r.plateau_mean;
    j["plateau_k_start"] = r.plateau_k_start;
    j["fluctuation_ratio"] = r.fluctuation_ratio;
    j["threshold"] = r.threshold;
    j["verdict"] = to_string(r.verdict);
    j["symbols"] = r.symbols;
    return j;
}

nlohmann::ordered_json to_json(const VolumeCurve& c) {
    nlohmann::ordered_json j;
    j["volumes"] = c.volumes;
    j["swaps"] = c.swaps;
    j["seed"] = c.seed;
    j["backend"] = to_string(c.backend);
    j["words"] = c.words;
    j["symbols"] = c.symbols;
    return j;
}

nlohmann::ordered_json to_json(const CorpusReport& report) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    std::size_t rank = 0;
    for (const auto& e : report.entries) {
        nlohmann::ordered_json je;
        je["rank"] = ++rank;
        je["source_id"] = e.source_id;
        je["chi"] = e.chi ? nlohmann::ordered_json(*e.chi) : nlohmann::ordered_json(nullptr);
        je["symbols"] = e.symbols;
        je["words"] = e.words;
        je["verdict"] = to_string(e.verdict);
        je["seed"] = e.seed;
        entries.push_back(std::move(je));
    }
    nlohmann::ordered_json j;
    j["total"] = report.entries.size();
    j["skipped"] = report.skipped;
    j["threshold"] = report.threshold;
    j["pass_fraction"] = report.pass_fraction;
    j["failing_mean_symbols"] = report.failing_mean_symbols
                                    ? nlohmann::ordered_json(*report.failing_mean_symbols)
                                    : nlohmann::ordered_json(nullptr);
    auto config = run_config_json(report.config);
    config["base_seed"] = report.base_seed;
    config["document_seed"] = "base_seed xor ordinal";
    j["run_config"] = std::move(config);
    j["entries"] = std::move(entries);
    return j;
}

nlohmann::ordered_json to_json(const GroupComparison& c) {
    auto group = [](const GroupSummary& g) {
        nlohmann::ordered_json j;
        j["count"] = g.count;
        j["min"] = g.min;
        j["mean"] = g.mean;
        j["max"] = g.max;
        return j;
    };
    nlohmann::ordered_json j;
    j["real"] = group(c.real);
    j["artificial"] = group(c.artificial);
    j["real_reference_min_symbols"] = kOverlapMinRealSymbols;
    j["real_reference_chi"] = c.real_reference_chi ? nlohmann::ordered_json(*c.real_reference_chi)
                                                   : nlohmann::ordered_json(nullptr);
    j["overlap"] = c.overlap;
    return j;
}

CorpusReport corpus_report_from_json(const nlohmann::json& j) {
    CorpusReport report;
    try {
        report.threshold = j.at("threshold").get<double>();
        if (j.contains("run_config") && j["run_config"].contains("base_seed")) {
            report.base_seed = j["run_config"]["base_seed"].get<std::uint64_t>();
        }
        report.config.threshold = report.threshold;
        for (const auto& je : j.at("entries")) {
            CorpusEntry e;
            e.source_id = je.at("source_id").get<std::string>();
            if (!je.at("chi").is_null()) {
                e.chi = je["chi"].get<double>();
            }
            e.symbols = je.at("symbols").get<std::size_t>();
            e.words = je.value("words", std::size_t{0});
            e.verdict = verdict_from_string(je.at("verdict").get<std::string>());
            e.seed = je.value("seed", std::uint64_t{0});
            report.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, std::string("malformed corpus report: ") + e.what());
    }
    finalize_report(report);
    return report;
}

CorpusReport read_corpus_report(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::InvalidArgument, path.string() + ": " + e.what());
    }
    return corpus_report_from_json(j);
}

void write_curve_csv(std::ostream& out, const VolumeCurve& curve) {
    out << "k,swaps,bytes\n";
    for (std::size_t k = 0; k < curve.volumes.size(); ++k) {
        out << k << ',' << curve.swaps.at(k) << ',' << curve.volumes[k] << '\n';
    }
}

void write_corpus_csv(std::ostream& out, const CorpusReport& report) {
    out << "rank,source_id,chi,symbols,verdict\n";
    std::size_t rank = 0;
    for (const auto& e : report.entries) {
        out << ++rank << ',' << csv_field(e.source_id) << ',' << (e.chi ? fixed(*e.chi) : "")
            << ',' << e.symbols << ',' << to_string(e.verdict) << '\n';
    }
}

void write_length_csv(std::ostream& out, std::span<const LengthPoint> series) {
    out << "length,symbols,words,chi\n";
    for (const auto& p : series) {
        out << p.length << ',' << p.symbols << ',' << p.words << ',' << fixed(p.chi) << '\n';
    }
}

} // namespace textchi
