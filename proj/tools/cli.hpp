#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mta/dataset.hpp"
#include "mta/preprocessing.hpp"

namespace mta::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kIO = 2,
    kValidationFailure = 3,
};

enum class Command { Discover, Oracle, Validate };

struct RunConfig {
    Command command = Command::Discover;
    std::string input;
    std::optional<std::string> output;
    Params params;
    std::optional<std::string> preset;
    std::optional<Index> stride;
    std::optional<Index> offset;
    std::optional<Index> length;
    std::optional<int> column;
    bool emit_plot_data = false;
    std::optional<std::string> plot_dir;
    std::optional<std::string> trace_path;
    std::optional<std::string> dump_candidates_path;
    std::optional<Index> max_span;  // oracle only
    int verbosity = 0;
};

/// Thrown for bad command lines; `exit_code` is 0 for --help.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& message, int exit_code = kUsage)
        : std::runtime_error(message), exit_code_(exit_code)
    {
    }
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

/// `args` excludes the program name.
RunConfig parse_args(const std::vector<std::string>& args);

DatasetRequest dataset_request(const RunConfig& config);

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mta::cli
