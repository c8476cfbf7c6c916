#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "textchi/chi_analysis.hpp"
#include "textchi/corpus.hpp"

namespace textchi {

// Backend, schedule and fixed methodological choices, recorded in every report.
nlohmann::ordered_json run_config_json(const AnalysisConfig& cfg);

nlohmann::ordered_json to_json(const ChiReport& report);
nlohmann::ordered_json to_json(const VolumeCurve& curve);
nlohmann::ordered_json to_json(const CorpusReport& report);
nlohmann::ordered_json to_json(const GroupComparison& comparison);

// Reads what to_json(CorpusReport) wrote; only entries, threshold and
// base_seed are needed downstream.
CorpusReport corpus_report_from_json(const nlohmann::json& j);
CorpusReport read_corpus_report(const std::filesystem::path& path);

// Columns: k, swaps, bytes
void write_curve_csv(std::ostream& out, const VolumeCurve& curve);
// Columns: rank, source_id, chi, symbols, verdict
void write_corpus_csv(std::ostream& out, const CorpusReport& report);
// Columns: length, symbols, words, chi
void write_length_csv(std::ostream& out, std::span<const LengthPoint> series);

} // namespace textchi
