#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "mta/preprocessing.hpp"

namespace mta {

/// Environment variable naming the directory that holds fetched datasets.
inline constexpr const char* kDataDirEnv = "MTA_DATA_DIR";

struct SeriesFile {
    std::vector<double> values;
    std::vector<std::string> labels;  // empty unless the file had more than one column
};

/**
 * Reads one value per line, or delimited rows (comma, semicolon, tab or
 * spaces) whose first field is a time label. Without an explicit `column`,
 * single-field rows give the value and multi-field rows use field 1.
 * A non-numeric first row is taken as a header; blank lines and `#` comments
 * are skipped.
 */
SeriesFile read_series_file(const std::filesystem::path& path, std::optional<int> column = std::nullopt);

struct Subset {
    Index stride = 1;
    Index offset = 0;
    std::optional<Index> length;

    friend bool operator==(const Subset&, const Subset&) = default;
};

/// Every `stride`-th value from `offset`, optionally truncated to `length`.
std::vector<double> apply_subset(const std::vector<double>& values, const Subset& subset);

struct Preset {
    std::string name;
    std::string file_name;
    Subset subset;
};

/// `steamgen`: every tenth observation from the first; `powerdemand`: 5000 points from index 5000.
std::optional<Preset> find_preset(const std::string& name);

/// $MTA_DATA_DIR, or ./data when unset.
std::filesystem::path data_directory();

struct DatasetRequest {
    std::string name_or_path;
    std::optional<std::string> preset;  // apply a preset's subset to an explicit path
    std::optional<Subset> subset;       // explicit subset, overrides any preset
    std::optional<int> column;
};

/// Resolves preset names against data_directory(), applies subsetting, and loads the series.
TimeSeries load_dataset(const DatasetRequest& request);

}  // namespace mta
