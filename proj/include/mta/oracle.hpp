#pragma once

#include <string>
#include <vector>

#include "mta/motif_memory.hpp"

namespace mta::oracle {

/// Brute force refuses normalized series longer than this unless told otherwise.
inline constexpr Index kDefaultSizeLimit = 2000;

/// Agreement required between recorded and recomputed distances.
inline constexpr double kDistanceTolerance = 1e-9;

struct Entry {
    Index span = 0;
    Index start_x = 0;
    Index start_y = 0;
    double distance = 0.0;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Every grid-aligned subsequence pair passing the distance test, ordered by (span, x, y).
struct MotifSet {
    std::vector<Entry> entries;
};

/**
 * Exhaustive search over spans s, 2s, ..., max_span and all start pairs x < y
 * with y - x >= s (pairs overlapping by more than span - s are trivial and
 * skipped). Shares nothing with the discovery pipeline.
 */
MotifSet brute_force_motifs(const TimeSeries& series, const Params& params, Index max_span,
                            Index size_limit = kDefaultSizeLimit);

struct Verdict {
    bool soundness = true;
    bool completeness = true;
    bool completeness_checked = false;

    Index pairs_checked = 0;
    double max_distance_error = 0.0;

    /// Pairs the tracker lineage must reach: symbol-identical, elimination-surviving
    /// and distance-passing at every prefix generation, built from template symbols.
    Index expected_pairs = 0;
    Index missed_pairs = 0;
    /// Symbol-identical, elimination-surviving, passing pairs whose shorter
    /// prefixes did not all pass; the tracker lineage cannot reach these.
    Index unreachable_pairs = 0;
    Index unreachable_uncovered = 0;

    std::vector<std::string> failures;

    bool passed() const noexcept { return soundness && completeness; }
};

/// Soundness checks only: distances recomputed independently, symbol grid, elimination.
Verdict check_soundness(const MotifReport& report, const TimeSeries& series, const Params& params);

/// Soundness plus symbol-level completeness (the latter skipped above size_limit).
Verdict validate_report(const MotifReport& report, const TimeSeries& series, const Params& params,
                        Index size_limit = kDefaultSizeLimit);

/// Per-position PAA symbols computed window by window.
Word reference_symbols(const TimeSeries& series, const Params& params);

/// Starts retained by trivial-match elimination at `generation`, as a per-start flag.
std::vector<bool> reference_retained(const Word& symbols, Index symbol_length, Index series_length,
                                     Index generation);

}  // namespace mta::oracle
