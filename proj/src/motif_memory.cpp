#include "mta/motif_memory.hpp"

#include <algorithm>

#include "mta/tracker_engine.hpp"

namespace mta {

double threshold_for(Index span, const Params& params)
{
    return params.threshold * static_cast<double>(span);
}

Eigen::MatrixXd pairwise_distances(const Vector& values, const std::vector<Index>& starts, Index span)
{
    const auto k = static_cast<Index>(starts.size());
    Eigen::MatrixXd distances = Eigen::MatrixXd::Zero(k, k);
    for (Index i = 0; i < k; ++i) {
        for (Index j = i + 1; j < k; ++j) {
            const double d = euclidean_distance(values, starts[static_cast<std::size_t>(i)],
                                                starts[static_cast<std::size_t>(j)], span);
            distances(i, j) = d;
            distances(j, i) = d;
        }
    }
    return distances;
}

int confirm_motifs(Tracker& tracker, const TimeSeries& series, const Params& params, Index generation,
                   MemoryPool& pool)
{
    const auto& starts = tracker.matched_starts;
    if (starts.size() < 2) {
        return 0;
    }
    const Vector& values = series.distance_values(params.normalize);
    const Index span = static_cast<Index>(tracker.text.size()) * params.symbol_length;
    const double limit = threshold_for(span, params);

    std::vector<OccurrencePair> passing;
    for (std::size_t i = 0; i < starts.size(); ++i) {
        for (std::size_t j = i + 1; j < starts.size(); ++j) {
            const double d = euclidean_distance(values, starts[i], starts[j], span);
            if (d <= limit) {
                passing.push_back({std::min(starts[i], starts[j]), std::max(starts[i], starts[j]), d});
            }
        }
    }
    if (passing.empty()) {
        return 0;
    }
    tracker.match_count += static_cast<int>(passing.size());

    auto [it, inserted] = pool.try_emplace(tracker.text);
    MemoryMotif& motif = it->second;
    if (inserted) {
        motif.text = tracker.text;
        motif.span = span;
        motif.generation = generation;
    }
    for (const auto& pair : passing) {
        motif.starts.push_back(pair.first);
        motif.starts.push_back(pair.second);
        motif.passing_pairs.push_back(pair);
    }
    std::sort(motif.starts.begin(), motif.starts.end());
    motif.starts.erase(std::unique(motif.starts.begin(), motif.starts.end()), motif.starts.end());

    auto by_endpoints = [](const OccurrencePair& a, const OccurrencePair& b) {
        return std::tie(a.first, a.second) < std::tie(b.first, b.second);
    };
    std::sort(motif.passing_pairs.begin(), motif.passing_pairs.end(), by_endpoints);
    motif.passing_pairs.erase(std::unique(motif.passing_pairs.begin(), motif.passing_pairs.end(),
                                          [](const OccurrencePair& a, const OccurrencePair& b) {
                                              return a.first == b.first && a.second == b.second;
                                          }),
                              motif.passing_pairs.end());
    return static_cast<int>(passing.size());
}

bool encapsulated_by(const MemoryMotif& inner, const MemoryMotif& outer)
{
    return std::all_of(inner.starts.begin(), inner.starts.end(), [&](Index start) {
        return std::any_of(outer.starts.begin(), outer.starts.end(), [&](Index outer_start) {
            return outer_start <= start && start + inner.span <= outer_start + outer.span;
        });
    });
}

std::vector<MemoryMotif> streamline(const std::vector<MemoryMotif>& pool)
{
    std::vector<MemoryMotif> unique;
    for (const auto& motif : pool) {
        const bool duplicate = std::any_of(unique.begin(), unique.end(), [&](const MemoryMotif& kept) {
            return kept.text == motif.text && kept.starts == motif.starts;
        });
        if (!duplicate) {
            unique.push_back(motif);
        }
    }

    std::vector<MemoryMotif> result;
    for (const auto& motif : unique) {
        const bool swallowed = std::any_of(unique.begin(), unique.end(), [&](const MemoryMotif& other) {
            return other.span > motif.span && other.starts.size() >= motif.starts.size() &&
                   encapsulated_by(motif, other);
        });
        if (!swallowed) {
            result.push_back(motif);
        }
    }

    std::sort(result.begin(), result.end(), [](const MemoryMotif& a, const MemoryMotif& b) {
        if (a.span != b.span) {
            return a.span > b.span;
        }
        const Index a_first = a.starts.empty() ? 0 : a.starts.front();
        const Index b_first = b.starts.empty() ? 0 : b.starts.front();
        return std::tie(a_first, a.text) < std::tie(b_first, b.text);
    });
    return result;
}

std::vector<MemoryMotif> streamline(const MemoryPool& pool)
{
    std::vector<MemoryMotif> motifs;
    motifs.reserve(pool.size());
    for (const auto& [text, motif] : pool) {
        motifs.push_back(motif);
    }
    return streamline(motifs);
}

}  // namespace mta
