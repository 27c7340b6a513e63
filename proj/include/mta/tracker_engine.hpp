#pragma once

#include <functional>
#include <vector>

#include "mta/candidate_stream.hpp"
#include "mta/motif_memory.hpp"

namespace mta {

/// An evolving motif signature.
struct Tracker {
    Word text;
    int match_count = 0;
    std::vector<Index> matched_starts;  // increasing

    friend bool operator==(const Tracker&, const Tracker&) = default;
};

/// Kept sorted by text, unique by text.
using Population = std::vector<Tracker>;

/// Symbols allowed when extending trackers; fixed after generation 1.
struct MutationTemplate {
    Word symbols;  // sorted, unique
};

/// Per-generation counters, reported through RunObserver.
struct GenerationStats {
    Index generation = 0;
    Index candidates = 0;       // words in M
    Index population = 0;       // trackers presented to M
    Index matched = 0;          // after eliminate_unmatched
    Index confirmed = 0;        // after eliminate_unstimulated
    Index stimulations = 0;
    Index pool_size = 0;
};

struct RunObserver {
    std::function<void(const SymbolMatrix&)> on_symbols;
    std::function<void(const CandidateMatrix&)> on_candidates;
    std::function<void(const GenerationStats&)> on_generation;
};

Population init_population(const Alphabet& alphabet);

/// Counts exact text matches against M; throws GenerationMismatch when a tracker's length differs from M's generation.
void match_trackers(Population& population, const CandidateMatrix& candidates);

/// Keeps trackers with at least two matches and zeroes their counters.
void eliminate_unmatched(Population& population);

/// Keeps trackers stimulated at least once during confirmation.
void eliminate_unstimulated(Population& population);

MutationTemplate make_mutation_template(const Population& survivors);

/// Replaces each parent by |template| children, one per template symbol appended.
Population proliferate_and_mutate(const Population& population, const MutationTemplate& mutation_template);

/// Full discovery loop; returns the streamlined memory pool as a report.
MotifReport run(const TimeSeries& series, const Params& params, const RunObserver& observer = {});

}  // namespace mta
