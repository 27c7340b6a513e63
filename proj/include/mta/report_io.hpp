#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mta/candidate_stream.hpp"
#include "mta/motif_memory.hpp"
#include "mta/oracle.hpp"
#include "mta/tracker_engine.hpp"

namespace mta {

/*
 * Report JSON layout (field names are part of the external interface):
 *
 *   { "params":  { "symbol_length", "alphabet_size", "threshold", "max_generations", "normalize" },
 *     "series":  { "name", "length" },
 *     "motifs": [ { "text", "span_points", "generation",
 *                   "starts_diff_coords", "starts_raw_coords",
 *                   "ed_matrix", "passing_pairs", ["starts_time"] } ] }
 *
 * "passing_pairs" holds [first, second, distance] triples. "starts_time" is
 * present only when the input carried a time column.
 */
nlohmann::ordered_json report_to_json(const MotifReport& report);
MotifReport report_from_json(const nlohmann::json& document);

/// Pretty-printed JSON with a trailing newline; byte-stable for equal reports.
std::string serialize_report(const MotifReport& report);
MotifReport parse_report(std::string_view text);

/// One CSV per motif: an `offset` column, then one column of raw values per occurrence.
std::vector<std::filesystem::path> write_plot_data(const MotifReport& report, const TimeSeries& series,
                                                   const std::filesystem::path& directory);

/// span,start_x,start_y,ed with a header row.
std::string oracle_csv(const oracle::MotifSet& set);

/// Debug dumps: "start,text" per line.
std::string symbols_text(const SymbolMatrix& matrix);
std::string candidates_text(const CandidateMatrix& matrix);

/// One JSON object per line.
std::string trace_record(const GenerationStats& stats);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace mta
