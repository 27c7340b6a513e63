#include "mta/report_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace mta {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string format_double(double value)
{
    std::ostringstream out;
    out << std::setprecision(17) << value;
    return out.str();
}

}  // namespace

ordered_json report_to_json(const MotifReport& report)
{
    ordered_json doc;
    const Params& p = report.params;
    doc["params"] = {
        {"symbol_length", p.symbol_length},
        {"alphabet_size", p.alphabet_size},
        {"threshold", p.threshold},
        {"max_generations", p.max_generations ? ordered_json(*p.max_generations) : ordered_json(nullptr)},
        {"normalize", p.normalize},
    };
    doc["series"] = {{"name", report.series.name}, {"length", report.series.length}};

    ordered_json motifs = ordered_json::array();
    for (std::size_t m = 0; m < report.motifs.size(); ++m) {
        const MemoryMotif& motif = report.motifs[m];
        ordered_json entry;
        entry["text"] = motif.text;
        entry["span_points"] = motif.span;
        entry["generation"] = motif.generation;
        entry["starts_diff_coords"] = motif.starts;
        // diff[i] = raw[i + 1] - raw[i], so a window starting at diff index i starts at raw index i.
        entry["starts_raw_coords"] = motif.starts;

        ordered_json matrix = ordered_json::array();
        for (Index i = 0; i < motif.ed_matrix.rows(); ++i) {
            ordered_json row = ordered_json::array();
            for (Index j = 0; j < motif.ed_matrix.cols(); ++j) {
                row.push_back(motif.ed_matrix(i, j));
            }
            matrix.push_back(std::move(row));
        }
        entry["ed_matrix"] = std::move(matrix);

        ordered_json pairs = ordered_json::array();
        for (const auto& pair : motif.passing_pairs) {
            pairs.push_back(ordered_json::array({pair.first, pair.second, pair.distance}));
        }
        entry["passing_pairs"] = std::move(pairs);

        if (m < report.start_labels.size()) {
            entry["starts_time"] = report.start_labels[m];
        }
        motifs.push_back(std::move(entry));
    }
    doc["motifs"] = std::move(motifs);
    return doc;
}

MotifReport report_from_json(const json& doc)
{
    try {
        MotifReport report;
        const json& p = doc.at("params");
        report.params.symbol_length = p.at("symbol_length").get<Index>();
        report.params.alphabet_size = p.at("alphabet_size").get<int>();
        report.params.threshold = p.at("threshold").get<double>();
        if (!p.at("max_generations").is_null()) {
            report.params.max_generations = p.at("max_generations").get<Index>();
        }
        report.params.normalize = p.at("normalize").get<bool>();

        report.series.name = doc.at("series").at("name").get<std::string>();
        report.series.length = doc.at("series").at("length").get<Index>();

        bool any_labels = false;
        for (const json& entry : doc.at("motifs")) {
            MemoryMotif motif;
            motif.text = entry.at("text").get<std::string>();
            motif.span = entry.at("span_points").get<Index>();
            motif.generation = entry.at("generation").get<Index>();
            motif.starts = entry.at("starts_diff_coords").get<std::vector<Index>>();

            const json& matrix = entry.at("ed_matrix");
            const auto rows = static_cast<Index>(matrix.size());
            motif.ed_matrix.resize(rows, rows);
            for (Index i = 0; i < rows; ++i) {
                const json& row = matrix.at(static_cast<std::size_t>(i));
                if (static_cast<Index>(row.size()) != rows) {
                    throw Error(ErrorCode::IOError, "ed_matrix of motif '" + motif.text + "' is not square");
                }
                for (Index j = 0; j < rows; ++j) {
                    motif.ed_matrix(i, j) = row.at(static_cast<std::size_t>(j)).get<double>();
                }
            }
            for (const json& pair : entry.at("passing_pairs")) {
                motif.passing_pairs.push_back({pair.at(0).get<Index>(), pair.at(1).get<Index>(), pair.at(2).get<double>()});
            }
            if (entry.contains("starts_time")) {
                any_labels = true;
                report.start_labels.push_back(entry.at("starts_time").get<std::vector<std::string>>());
            }
            report.motifs.push_back(std::move(motif));
        }
        if (any_labels && report.start_labels.size() != report.motifs.size()) {
            throw Error(ErrorCode::IOError, "starts_time present on some motifs only");
        }
        return report;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IOError, std::string("malformed report: ") + e.what());
    }
}

std::string serialize_report(const MotifReport& report)
{
    return report_to_json(report).dump(2) + "\n";
}

MotifReport parse_report(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::IOError, std::string("malformed report: ") + e.what());
    }
    return report_from_json(doc);
}

std::vector<std::filesystem::path> write_plot_data(const MotifReport& report, const TimeSeries& series,
                                                   const std::filesystem::path& directory)
{
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        throw Error(ErrorCode::IOError, "cannot create " + directory.string() + ": " + ec.message());
    }

    std::vector<std::filesystem::path> written;
    for (std::size_t m = 0; m < report.motifs.size(); ++m) {
        const MemoryMotif& motif = report.motifs[m];
        std::ostringstream out;
        out << "offset";
        for (const Index start : motif.starts) {
            out << ",occ_" << start;
        }
        out << '\n';
        for (Index offset = 0; offset <= motif.span; ++offset) {
            out << offset;
            for (const Index start : motif.starts) {
                out << ',' << format_double(series.raw[start + offset]);
            }
            out << '\n';
        }

        std::ostringstream name;
        name << "motif_" << std::setw(4) << std::setfill('0') << m << '_' << motif.text << ".csv";
        const auto path = directory / name.str();
        write_text_file(path, out.str());
        written.push_back(path);
    }
    return written;
}

std::string oracle_csv(const oracle::MotifSet& set)
{
    std::ostringstream out;
    out << "span,start_x,start_y,ed\n";
    for (const auto& e : set.entries) {
        out << e.span << ',' << e.start_x << ',' << e.start_y << ',' << format_double(e.distance) << '\n';
    }
    return out.str();
}

std::string symbols_text(const SymbolMatrix& matrix)
{
    std::ostringstream out;
    for (Index i = 0; i < matrix.size(); ++i) {
        out << i << ',' << matrix.symbols[static_cast<std::size_t>(i)] << '\n';
    }
    return out.str();
}

std::string candidates_text(const CandidateMatrix& matrix)
{
    std::ostringstream out;
    out << "# generation " << matrix.generation << '\n';
    for (const auto& word : matrix.words) {
        out << word.start << ',' << word.text << '\n';
    }
    return out.str();
}

std::string trace_record(const GenerationStats& stats)
{
    ordered_json record = {
        {"generation", stats.generation},   {"candidates", stats.candidates},
        {"population", stats.population},   {"matched", stats.matched},
        {"confirmed", stats.confirmed},     {"stimulations", stats.stimulations},
        {"pool_size", stats.pool_size},
    };
    return record.dump() + "\n";
}

void write_text_file(const std::filesystem::path& path, std::string_view content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::IOError, "cannot open " + path.string() + " for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) {
        throw Error(ErrorCode::IOError, "failed writing " + path.string());
    }
}

}  // namespace mta
