#include "mta/dataset.hpp"

#include <cstdlib>
#include <fstream>

namespace mta {

namespace {

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::string current;
    bool in_field = false;
    bool comma_seen = false;
    for (const char c : line) {
        const bool hard = c == ',' || c == ';';
        const bool soft = c == ' ' || c == '\t' || c == '\r';
        if (hard) {
            fields.push_back(current);
            current.clear();
            in_field = false;
            comma_seen = true;
        } else if (soft) {
            if (in_field && !comma_seen) {
                fields.push_back(current);
                current.clear();
                in_field = false;
            }
        } else {
            current.push_back(c);
            in_field = true;
        }
    }
    if (in_field || comma_seen) {
        fields.push_back(current);
    }
    return fields;
}

std::optional<double> parse_number(const std::string& text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

SeriesFile read_series_file(const std::filesystem::path& path, std::optional<int> column)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IOError, "cannot open " + path.string());
    }

    SeriesFile file;
    std::string line;
    std::size_t line_no = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++line_no;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos || line[begin] == '#') {
            continue;
        }
        const auto fields = split_fields(line.substr(begin));
        const std::size_t index =
            column ? static_cast<std::size_t>(*column) : (fields.size() > 1 ? std::size_t{1} : std::size_t{0});
        if (index >= fields.size()) {
            throw Error(ErrorCode::IOError, path.string() + ":" + std::to_string(line_no) + ": no column " +
                                                std::to_string(index));
        }
        const auto value = parse_number(fields[index]);
        if (!value) {
            if (first_row) {
                first_row = false;
                continue;
            }
            throw Error(ErrorCode::IOError,
                        path.string() + ":" + std::to_string(line_no) + ": not a number: '" + fields[index] + "'");
        }
        first_row = false;
        file.values.push_back(*value);
        if (fields.size() > 1) {
            file.labels.push_back(fields[0]);
        }
    }
    if (!file.labels.empty() && file.labels.size() != file.values.size()) {
        file.labels.clear();
    }
    return file;
}

std::vector<double> apply_subset(const std::vector<double>& values, const Subset& subset)
{
    const auto size = static_cast<Index>(values.size());
    if (subset.stride < 1) {
        throw Error(ErrorCode::SubsetOutOfRange, "stride must be >= 1");
    }
    if (subset.offset < 0 || subset.offset >= size) {
        throw Error(ErrorCode::SubsetOutOfRange, "offset " + std::to_string(subset.offset) +
                                                     " outside series of length " + std::to_string(size));
    }
    const Index available = (size - subset.offset + subset.stride - 1) / subset.stride;
    if (subset.length && (*subset.length < 1 || *subset.length > available)) {
        throw Error(ErrorCode::SubsetOutOfRange, "length " + std::to_string(*subset.length) + " exceeds the " +
                                                     std::to_string(available) + " values available");
    }
    const Index count = subset.length.value_or(available);
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    for (Index i = 0; i < count; ++i) {
        out.push_back(values[static_cast<std::size_t>(subset.offset + i * subset.stride)]);
    }
    return out;
}

std::optional<Preset> find_preset(const std::string& name)
{
    if (name == "steamgen") {
        return Preset{"steamgen", "steamgen.txt", Subset{10, 0, std::nullopt}};
    }
    if (name == "powerdemand") {
        return Preset{"powerdemand", "powerdemand.txt", Subset{1, 5000, 5000}};
    }
    return std::nullopt;
}

std::filesystem::path data_directory()
{
    if (const char* dir = std::getenv(kDataDirEnv); dir != nullptr && *dir != '\0') {
        return dir;
    }
    return "data";
}

TimeSeries load_dataset(const DatasetRequest& request)
{
    std::filesystem::path path = request.name_or_path;
    std::optional<Preset> preset;
    if (request.preset) {
        preset = find_preset(*request.preset);
        if (!preset) {
            throw Error(ErrorCode::IOError, "unknown preset '" + *request.preset + "'");
        }
    } else if (!std::filesystem::exists(path)) {
        preset = find_preset(request.name_or_path);
        if (preset) {
            path = data_directory() / preset->file_name;
        }
    }
    if (!std::filesystem::exists(path)) {
        throw Error(ErrorCode::IOError, "input not found: " + path.string());
    }

    SeriesFile file = read_series_file(path, request.column);
    Subset subset;
    if (request.subset) {
        subset = *request.subset;
    } else if (preset) {
        subset = preset->subset;
    }

    std::vector<double> values = file.values;
    std::vector<std::string> labels;
    if (subset != Subset{}) {
        if (values.empty()) {
            throw Error(ErrorCode::TooShort, path.string() + " holds no values");
        }
        values = apply_subset(file.values, subset);
        if (!file.labels.empty()) {
            const Index count = static_cast<Index>(values.size());
            for (Index i = 0; i < count; ++i) {
                labels.push_back(file.labels[static_cast<std::size_t>(subset.offset + i * subset.stride)]);
            }
        }
    } else {
        labels = std::move(file.labels);
    }

    TimeSeries series = load_series(values, preset ? preset->name : path.filename().string());
    series.time_labels = std::move(labels);
    return series;
}

}  // namespace mta
