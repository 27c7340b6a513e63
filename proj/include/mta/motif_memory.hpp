#pragma once

#include <map>
#include <string>
#include <vector>

#include "mta/preprocessing.hpp"

namespace mta {

struct Tracker;

/// A confirmed pair of occurrences and the distance that confirmed it.
struct OccurrencePair {
    Index first = 0;   // smaller start
    Index second = 0;  // larger start
    double distance = 0.0;

    friend bool operator==(const OccurrencePair&, const OccurrencePair&) = default;
};

struct MemoryMotif {
    Word text;
    std::vector<Index> starts;  // sorted, unique; differenced-series coordinates
    Index span = 0;             // text.size() * s
    Index generation = 0;
    std::vector<OccurrencePair> passing_pairs;  // sorted by (first, second)
    /// Distances between every pair of occurrences; filled when a report is assembled.
    Eigen::MatrixXd ed_matrix;

    friend bool operator==(const MemoryMotif& lhs, const MemoryMotif& rhs)
    {
        return lhs.text == rhs.text && lhs.starts == rhs.starts && lhs.span == rhs.span &&
               lhs.generation == rhs.generation && lhs.passing_pairs == rhs.passing_pairs &&
               lhs.ed_matrix.rows() == rhs.ed_matrix.rows() && lhs.ed_matrix.cols() == rhs.ed_matrix.cols() &&
               lhs.ed_matrix == rhs.ed_matrix;
    }
};

/// The working pool: one entry per symbol string.
using MemoryPool = std::map<Word, MemoryMotif>;

struct SeriesInfo {
    std::string name;
    Index length = 0;  // raw points

    friend bool operator==(const SeriesInfo&, const SeriesInfo&) = default;
};

struct MotifReport {
    Params params;
    SeriesInfo series;
    std::vector<MemoryMotif> motifs;
    /// Labels for each motif's starts, present when the input carried a time column.
    std::vector<std::vector<std::string>> start_labels;

    friend bool operator==(const MotifReport&, const MotifReport&) = default;
};

/// Euclidean distance between values[x, x + span) and values[y, y + span).
template <typename Derived>
double euclidean_distance(const Eigen::MatrixBase<Derived>& values, Index x, Index y, Index span)
{
    const Index n = values.size();
    if (span < 0 || x < 0 || y < 0 || x + span > n || y + span > n) {
        throw Error(ErrorCode::OutOfRange, "distance window of " + std::to_string(span) + " at " +
                                               std::to_string(x) + "/" + std::to_string(y) +
                                               " exceeds series of length " + std::to_string(n));
    }
    return static_cast<double>((values.segment(x, span) - values.segment(y, span)).norm());
}

/// Total distance allowed for a candidate covering `span` data points: r * span.
double threshold_for(Index span, const Params& params);

/// Symmetric matrix of distances between all listed occurrences.
Eigen::MatrixXd pairwise_distances(const Vector& values, const std::vector<Index>& starts, Index span);

/**
 * Distance test over every unordered pair of the tracker's matched starts.
 *
 * Each passing pair stimulates the tracker once and is merged into the pool
 * entry for the tracker's text. Returns the number of stimulations.
 */
int confirm_motifs(Tracker& tracker, const TimeSeries& series, const Params& params, Index generation,
                   MemoryPool& pool);

/**
 * Drops duplicates and motifs encapsulated by a single longer motif that has at
 * least as many occurrences, then orders by span descending, first start
 * ascending, text ascending.
 */
std::vector<MemoryMotif> streamline(const std::vector<MemoryMotif>& pool);
std::vector<MemoryMotif> streamline(const MemoryPool& pool);

/// True when every occurrence of `inner` lies inside some occurrence of `outer`.
bool encapsulated_by(const MemoryMotif& inner, const MemoryMotif& outer);

}  // namespace mta
