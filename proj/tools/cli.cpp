#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "mta/oracle.hpp"
#include "mta/report_io.hpp"
#include "mta/tracker_engine.hpp"

namespace mta::cli {

namespace {

struct RawOptions {
    std::string input;
    std::string output;
    Index symbol_length = 10;
    int alphabet = 6;
    double threshold = 0.5;
    Index max_generations = 0;
    bool no_normalize = false;
    bool emit_plot_data = false;
    std::string plot_dir;
    std::string preset;
    Index stride = 1;
    Index offset = 0;
    Index length = 0;
    int column = 0;
    std::string trace;
    std::string dump;
    Index max_span = 0;
    int verbosity = 0;
};

struct Handles {
    CLI::Option* output = nullptr;
    CLI::Option* max_generations = nullptr;
    CLI::Option* plot_dir = nullptr;
    CLI::Option* preset = nullptr;
    CLI::Option* stride = nullptr;
    CLI::Option* offset = nullptr;
    CLI::Option* length = nullptr;
    CLI::Option* column = nullptr;
    CLI::Option* trace = nullptr;
    CLI::Option* dump = nullptr;
    CLI::Option* max_span = nullptr;
};

Handles add_common(CLI::App& sub, RawOptions& o)
{
    Handles h;
    sub.add_option("-i,--input", o.input, "Input file, or a preset name (steamgen, powerdemand)")->required();
    h.output = sub.add_option("-o,--output", o.output, "Output file (stdout when omitted)");
    sub.add_option("-s,--symbol-length", o.symbol_length, "Data points per symbol")
        ->check(CLI::Range(Index{1}, std::numeric_limits<Index>::max()))
        ->capture_default_str();
    sub.add_option("-a,--alphabet", o.alphabet, "Alphabet size")
        ->check(CLI::Range(2, kMaxAlphabetSize))
        ->capture_default_str();
    sub.add_option("-r,--threshold", o.threshold, "Match threshold per data point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    h.max_generations = sub.add_option("--max-generations", o.max_generations, "Cap on tracker generations")
                            ->check(CLI::PositiveNumber);
    sub.add_flag("--no-normalize", o.no_normalize, "Run the distance test on unnormalized differences");
    sub.add_flag("--emit-plot-data", o.emit_plot_data, "Write one CSV of raw segments per motif");
    h.plot_dir = sub.add_option("--plot-dir", o.plot_dir, "Directory for --emit-plot-data");
    h.preset = sub.add_option("--preset", o.preset, "Apply a dataset preset's subsetting to --input")
                   ->check(CLI::IsMember({"steamgen", "powerdemand"}));
    h.stride = sub.add_option("--stride", o.stride, "Keep every n-th value");
    h.offset = sub.add_option("--offset", o.offset, "First value to keep (0-based)");
    h.length = sub.add_option("--length", o.length, "Number of values to keep");
    h.column = sub.add_option("--column", o.column, "0-based field holding the values")->check(CLI::NonNegativeNumber);
    h.trace = sub.add_option("--trace", o.trace, "Write per-generation records (JSON lines)");
    h.dump = sub.add_option("--dump-candidates", o.dump, "Write the symbol matrix and every candidate matrix");
    sub.add_flag("-v,--verbose", o.verbosity, "Per-generation progress on stderr");
    return h;
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::InvalidParams:
    case ErrorCode::InvalidAlphabet:
    case ErrorCode::OutOfRange:
    case ErrorCode::TooLarge:
    case ErrorCode::SubsetOutOfRange:
        return kUsage;
    default:
        return kIO;
    }
}

void emit(const RunConfig& config, const std::string& content, std::ostream& out)
{
    if (config.output) {
        write_text_file(*config.output, content);
    } else {
        out << content;
    }
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Variable-length motif discovery with an evolving tracker population", "mta"};
    app.require_subcommand(1);

    RawOptions o;
    auto* discover = app.add_subcommand("discover", "Find motifs and write a JSON report");
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force all passing grid-aligned pairs as CSV");
    auto* validate = app.add_subcommand("validate", "Run discovery and check it against the oracle");
    const Handles hd = add_common(*discover, o);
    Handles ho = add_common(*oracle_cmd, o);
    ho.max_span = oracle_cmd->add_option("--max-span", o.max_span, "Longest span to enumerate")
                      ->check(CLI::PositiveNumber);
    const Handles hv = add_common(*validate, o);

    std::vector<const char*> argv{"mta"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help(), kSuccess);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    const Handles* h = &hd;
    if (oracle_cmd->parsed()) {
        config.command = Command::Oracle;
        h = &ho;
    } else if (validate->parsed()) {
        config.command = Command::Validate;
        h = &hv;
    }

    config.input = o.input;
    if (h->output->count() > 0) config.output = o.output;
    config.params.symbol_length = o.symbol_length;
    config.params.alphabet_size = o.alphabet;
    config.params.threshold = o.threshold;
    if (h->max_generations->count() > 0) config.params.max_generations = o.max_generations;
    config.params.normalize = !o.no_normalize;
    config.emit_plot_data = o.emit_plot_data;
    if (h->plot_dir->count() > 0) config.plot_dir = o.plot_dir;
    if (h->preset->count() > 0) config.preset = o.preset;
    if (h->stride->count() > 0) config.stride = o.stride;
    if (h->offset->count() > 0) config.offset = o.offset;
    if (h->length->count() > 0) config.length = o.length;
    if (h->column->count() > 0) config.column = o.column;
    if (h->trace->count() > 0) config.trace_path = o.trace;
    if (h->dump->count() > 0) config.dump_candidates_path = o.dump;
    if (h->max_span && h->max_span->count() > 0) config.max_span = o.max_span;
    config.verbosity = o.verbosity;

    if (config.stride && *config.stride < 1) {
        throw UsageError("--stride: must be >= 1");
    }
    if (config.offset && *config.offset < 0) {
        throw UsageError("--offset: must be >= 0");
    }
    if (config.length && *config.length < 1) {
        throw UsageError("--length: must be >= 1");
    }
    return config;
}

DatasetRequest dataset_request(const RunConfig& config)
{
    DatasetRequest request;
    request.name_or_path = config.input;
    request.preset = config.preset;
    request.column = config.column;
    if (config.stride || config.offset || config.length) {
        Subset subset;
        if (config.preset) {
            subset = find_preset(*config.preset)->subset;
        } else if (const auto preset = find_preset(config.input)) {
            subset = preset->subset;
        }
        if (config.stride) subset.stride = *config.stride;
        if (config.offset) subset.offset = *config.offset;
        if (config.length) subset.length = *config.length;
        request.subset = subset;
    }
    return request;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto started = std::chrono::steady_clock::now();
    auto elapsed_ms = [&] {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    };

    try {
        const TimeSeries series = load_dataset(dataset_request(config));
        if (config.verbosity > 0) {
            err << "loaded " << series.name << ": " << series.raw_length() << " points\n";
        }

        if (config.command == Command::Oracle) {
            const Index max_span = config.max_span.value_or(series.length());
            const auto set = oracle::brute_force_motifs(series, config.params, max_span);
            emit(config, oracle_csv(set), out);
            err << "oracle pairs: " << set.entries.size() << "\n";
            err << "elapsed_ms: " << elapsed_ms() << "\n";
            return kSuccess;
        }

        std::ofstream trace;
        if (config.trace_path) {
            trace.open(*config.trace_path, std::ios::trunc);
            if (!trace) {
                throw Error(ErrorCode::IOError, "cannot open " + *config.trace_path);
            }
        }
        std::ofstream dump;
        if (config.dump_candidates_path) {
            dump.open(*config.dump_candidates_path, std::ios::trunc);
            if (!dump) {
                throw Error(ErrorCode::IOError, "cannot open " + *config.dump_candidates_path);
            }
        }

        RunObserver observer;
        if (dump.is_open()) {
            observer.on_symbols = [&](const SymbolMatrix& s) { dump << "# symbols\n" << symbols_text(s); };
            observer.on_candidates = [&](const CandidateMatrix& m) { dump << candidates_text(m); };
        }
        observer.on_generation = [&](const GenerationStats& stats) {
            if (trace.is_open()) {
                trace << trace_record(stats);
            }
            if (config.verbosity > 0) {
                err << "generation " << stats.generation << ": population " << stats.population << ", matched "
                    << stats.matched << ", confirmed " << stats.confirmed << ", memory " << stats.pool_size << "\n";
            }
        };

        const MotifReport report = run(series, config.params, observer);
        const double discovery_ms = elapsed_ms();

        if (config.command == Command::Discover || config.output) {
            const std::string json = serialize_report(report);
            if (config.command == Command::Discover) {
                emit(config, json, out);
            } else {
                write_text_file(*config.output, json);
            }
        }
        if (config.emit_plot_data) {
            std::filesystem::path dir = config.plot_dir.value_or("");
            if (dir.empty()) {
                dir = config.output
                          ? std::filesystem::path(std::filesystem::path(*config.output).replace_extension("").string() + "_plots")
                          : std::filesystem::path("plots");
            }
            const auto files = write_plot_data(report, series, dir);
            err << "plot data: " << files.size() << " files in " << dir.string() << "\n";
        }

        err << "motifs: " << report.motifs.size() << "\n";
        err << "elapsed_ms: " << discovery_ms << "\n";

        if (config.command == Command::Validate) {
            const auto verdict = oracle::validate_report(report, series, config.params);
            out << "soundness: " << (verdict.soundness ? "PASS" : "FAIL") << " (" << verdict.pairs_checked
                << " pairs, max distance error " << verdict.max_distance_error << ")\n";
            if (verdict.completeness_checked) {
                out << "completeness: " << (verdict.completeness ? "PASS" : "FAIL") << " (" << verdict.expected_pairs
                    << " expected, " << verdict.missed_pairs << " missed; " << verdict.unreachable_pairs
                    << " lineage-unreachable, " << verdict.unreachable_uncovered << " of them uncovered)\n";
            }
            for (const auto& failure : verdict.failures) {
                out << "  " << failure << "\n";
            }
            out << "verdict: " << (verdict.passed() ? "PASS" : "FAIL") << "\n";
            return verdict.passed() ? kSuccess : kValidationFailure;
        }
        return kSuccess;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIO;
    }
}

}  // namespace mta::cli
