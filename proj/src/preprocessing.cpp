#include "mta/preprocessing.hpp"

#include <algorithm>
#include <cmath>

namespace mta {

void validate_params(const Params& params)
{
    if (params.symbol_length < 1) {
        throw Error(ErrorCode::InvalidParams, "symbol length must be >= 1");
    }
    if (params.alphabet_size < 2 || params.alphabet_size > kMaxAlphabetSize) {
        throw Error(ErrorCode::InvalidAlphabet,
                    "alphabet size must be in [2, " + std::to_string(kMaxAlphabetSize) + "], got " +
                        std::to_string(params.alphabet_size));
    }
    if (!std::isfinite(params.threshold) || params.threshold < 0.0) {
        throw Error(ErrorCode::InvalidParams, "match threshold must be finite and >= 0");
    }
    if (params.max_generations && *params.max_generations < 1) {
        throw Error(ErrorCode::InvalidParams, "max generations must be >= 1");
    }
}

Index effective_max_generations(const Params& params, Index n_norm)
{
    const Index cap = n_norm / params.symbol_length;
    return params.max_generations ? std::min(cap, *params.max_generations) : cap;
}

TimeSeries load_series(std::span<const double> values, std::string name)
{
    if (values.size() < 3) {
        throw Error(ErrorCode::TooShort, "need at least 3 values, got " + std::to_string(values.size()));
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw Error(ErrorCode::NonFinite, "value at index " + std::to_string(i) + " is not finite");
        }
    }

    TimeSeries series;
    series.name = std::move(name);
    series.raw = Eigen::Map<const Vector>(values.data(), static_cast<Index>(values.size()));
    series.diff = first_difference(series.raw);
    series.diff_mean = series.diff.mean();
    series.diff_std = population_std(series.diff);
    if (!(series.diff_std > 0.0)) {
        throw Error(ErrorCode::ZeroVariance, "first differences have zero variance");
    }
    series.norm = ((series.diff.array() - series.diff_mean) / series.diff_std).matrix();
    return series;
}

double normal_cdf(double x)
{
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double inverse_normal_cdf(double p)
{
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorCode::OutOfRange, "probability must lie in (0, 1)");
    }

    // Acklam's rational approximation (relative error ~1e-9) ...
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01,  -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // ... refined by Halley steps against the erfc-based CDF.
    constexpr double sqrt_2pi = 2.50662827463100050242;
    for (int iter = 0; iter < 2; ++iter) {
        const double e = normal_cdf(x) - p;
        const double u = e * sqrt_2pi * std::exp(0.5 * x * x);
        x -= u / (1.0 + 0.5 * x * u);
    }
    return x;
}

Alphabet make_alphabet(int size)
{
    if (size < 2 || size > kMaxAlphabetSize) {
        throw Error(ErrorCode::InvalidAlphabet,
                    "alphabet size must be in [2, " + std::to_string(kMaxAlphabetSize) + "], got " +
                        std::to_string(size));
    }
    Alphabet alphabet;
    alphabet.size = size;
    alphabet.breakpoints.reserve(static_cast<std::size_t>(size - 1));
    for (int k = 1; k < size; ++k) {
        alphabet.breakpoints.push_back(inverse_normal_cdf(static_cast<double>(k) / size));
    }
    // Exact symmetry and an exact zero at the median.
    for (int k = 0; k < (size - 1) / 2; ++k) {
        const double half = 0.5 * (alphabet.breakpoints[k] - alphabet.breakpoints[size - 2 - k]);
        alphabet.breakpoints[k] = half;
        alphabet.breakpoints[size - 2 - k] = -half;
    }
    if (size % 2 == 0) {
        alphabet.breakpoints[size / 2 - 1] = 0.0;
    }
    return alphabet;
}

Symbol symbolize_mean(double mean, const Alphabet& alphabet)
{
    const auto it = std::upper_bound(alphabet.breakpoints.begin(), alphabet.breakpoints.end(), mean);
    return symbol_for_region(static_cast<int>(it - alphabet.breakpoints.begin()));
}

}  // namespace mta
