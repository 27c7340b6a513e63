#pragma once

#include <Eigen/Core>

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mta/error.hpp"

namespace mta {

using Index = Eigen::Index;
using Vector = Eigen::VectorXd;

/// A symbol is a lowercase letter; 'a' is the region under the lowest breakpoint.
using Symbol = char;
/// A word is a string of symbols, one per s data points.
using Word = std::string;

inline constexpr int kMaxAlphabetSize = 26;

constexpr Symbol symbol_for_region(int region) noexcept { return static_cast<Symbol>('a' + region); }
constexpr int region_of(Symbol symbol) noexcept { return symbol - 'a'; }

/**
 * A univariate series in its three forms.
 *
 * `diff` holds first-order differences of `raw`; `norm` is `diff` shifted and
 * scaled to zero mean and unit population standard deviation. Motif start
 * indices everywhere in the library are positions in `diff`/`norm`.
 */
struct TimeSeries {
    std::string name;
    Vector raw;
    Vector diff;
    Vector norm;
    double diff_mean = 0.0;
    double diff_std = 0.0;
    /// Optional per-point labels (e.g. the time column of a CSV), parallel to `raw`.
    std::vector<std::string> time_labels;

    Index raw_length() const noexcept { return raw.size(); }
    Index length() const noexcept { return norm.size(); }

    /// Values the distance test runs on: `norm`, or `diff` in original units.
    const Vector& distance_values(bool normalize) const noexcept { return normalize ? norm : diff; }
};

/// Equiprobable partition of the standard normal into `size` regions.
struct Alphabet {
    int size = 0;
    std::vector<double> breakpoints;  // size - 1 values, strictly increasing
};

struct Params {
    Index symbol_length = 10;  // s: data points per symbol
    int alphabet_size = 6;     // a
    double threshold = 0.5;    // r: allowed distance per data point
    std::optional<Index> max_generations;
    /// When false the distance test runs on the differenced series in original
    /// units; symbolization always uses the normalized series.
    bool normalize = true;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Throws InvalidParams / InvalidAlphabet on s < 1, a outside [2, 26], or r < 0.
void validate_params(const Params& params);

/// floor(n_norm / s), further capped by params.max_generations when set.
Index effective_max_generations(const Params& params, Index n_norm);

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> first_difference(const Eigen::MatrixBase<Derived>& x)
{
    const Index n = x.size();
    if (n < 2) {
        return {};
    }
    return x.tail(n - 1) - x.head(n - 1);
}

template <typename Derived>
typename Derived::Scalar population_std(const Eigen::MatrixBase<Derived>& x)
{
    using Scalar = typename Derived::Scalar;
    if (x.size() == 0) {
        return Scalar(0);
    }
    const Scalar mean = x.mean();
    return std::sqrt((x.array() - mean).square().sum() / Scalar(x.size()));
}

/// Global z-normalization; the caller guarantees a non-zero spread.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> z_normalize(const Eigen::MatrixBase<Derived>& x)
{
    const auto mean = x.mean();
    const auto sd = population_std(x);
    return ((x.array() - mean) / sd).matrix();
}

/// Builds raw/diff/norm from at least 3 finite values.
TimeSeries load_series(std::span<const double> values, std::string name = {});

double normal_cdf(double x);
/// Inverse of the standard normal CDF on (0, 1), accurate to ~1e-15.
double inverse_normal_cdf(double p);

Alphabet make_alphabet(int size);

/// Region lookup with half-open intervals: a value equal to a breakpoint maps upward.
Symbol symbolize_mean(double mean, const Alphabet& alphabet);

/// PAA symbol for norm[start, start + s).
template <typename Derived>
Symbol symbolize_window(const Eigen::MatrixBase<Derived>& norm, Index start, Index s, const Alphabet& alphabet)
{
    if (s < 1 || start < 0 || start + s > norm.size()) {
        throw Error(ErrorCode::OutOfRange, "window [" + std::to_string(start) + ", " +
                                               std::to_string(start + s) + ") exceeds series of length " +
                                               std::to_string(norm.size()));
    }
    return symbolize_mean(static_cast<double>(norm.segment(start, s).mean()), alphabet);
}

}  // namespace mta
