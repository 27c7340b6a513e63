#include "mta/tracker_engine.hpp"

#include <algorithm>
#include <unordered_map>

namespace mta {

Population init_population(const Alphabet& alphabet)
{
    Population population;
    population.reserve(static_cast<std::size_t>(alphabet.size));
    for (int region = 0; region < alphabet.size; ++region) {
        population.push_back({Word(1, symbol_for_region(region)), 0, {}});
    }
    return population;
}

void match_trackers(Population& population, const CandidateMatrix& candidates)
{
    std::unordered_map<Word, std::vector<Index>> index;
    for (const auto& word : candidates.words) {
        index[word.text].push_back(word.start);
    }
    for (auto& tracker : population) {
        if (static_cast<Index>(tracker.text.size()) != candidates.generation) {
            throw Error(ErrorCode::GenerationMismatch,
                        "tracker '" + tracker.text + "' presented to generation " +
                            std::to_string(candidates.generation));
        }
        const auto it = index.find(tracker.text);
        if (it == index.end()) {
            tracker.match_count = 0;
            tracker.matched_starts.clear();
        } else {
            tracker.match_count = static_cast<int>(it->second.size());
            tracker.matched_starts = it->second;
        }
    }
}

void eliminate_unmatched(Population& population)
{
    std::erase_if(population, [](const Tracker& t) { return t.match_count < 2; });
    for (auto& tracker : population) {
        tracker.match_count = 0;
    }
}

void eliminate_unstimulated(Population& population)
{
    std::erase_if(population, [](const Tracker& t) { return t.match_count == 0; });
}

MutationTemplate make_mutation_template(const Population& survivors)
{
    MutationTemplate result;
    for (const auto& tracker : survivors) {
        result.symbols += tracker.text;
    }
    std::sort(result.symbols.begin(), result.symbols.end());
    result.symbols.erase(std::unique(result.symbols.begin(), result.symbols.end()), result.symbols.end());
    return result;
}

Population proliferate_and_mutate(const Population& population, const MutationTemplate& mutation_template)
{
    Population children;
    children.reserve(population.size() * mutation_template.symbols.size());
    for (const auto& parent : population) {
        for (const Symbol symbol : mutation_template.symbols) {
            children.push_back({parent.text + symbol, 0, {}});
        }
    }
    std::sort(children.begin(), children.end(), [](const Tracker& a, const Tracker& b) { return a.text < b.text; });
    return children;
}

MotifReport run(const TimeSeries& series, const Params& params, const RunObserver& observer)
{
    validate_params(params);
    if (params.symbol_length > series.length()) {
        throw Error(ErrorCode::OutOfRange, "symbol length " + std::to_string(params.symbol_length) +
                                               " exceeds the differenced series length " +
                                               std::to_string(series.length()));
    }

    const Alphabet alphabet = make_alphabet(params.alphabet_size);
    const SymbolMatrix symbols = build_symbol_matrix(series, params, alphabet);
    if (observer.on_symbols) {
        observer.on_symbols(symbols);
    }

    const Index max_generations = effective_max_generations(params, series.length());
    Population population = init_population(alphabet);
    MutationTemplate mutation_template;
    MemoryPool pool;

    for (Index generation = 1; !population.empty() && generation <= max_generations; ++generation) {
        const CandidateMatrix candidates = build_candidate_matrix(symbols, generation);
        if (observer.on_candidates) {
            observer.on_candidates(candidates);
        }

        GenerationStats stats;
        stats.generation = generation;
        stats.candidates = static_cast<Index>(candidates.words.size());
        stats.population = static_cast<Index>(population.size());

        match_trackers(population, candidates);
        eliminate_unmatched(population);
        stats.matched = static_cast<Index>(population.size());

        for (auto& tracker : population) {
            stats.stimulations += confirm_motifs(tracker, series, params, generation, pool);
        }
        eliminate_unstimulated(population);
        stats.confirmed = static_cast<Index>(population.size());
        stats.pool_size = static_cast<Index>(pool.size());

        if (generation == 1) {
            mutation_template = make_mutation_template(population);
        }
        if (observer.on_generation) {
            observer.on_generation(stats);
        }
        if (generation < max_generations) {
            population = proliferate_and_mutate(population, mutation_template);
        }
    }

    MotifReport report;
    report.params = params;
    report.series = {series.name, series.raw_length()};
    report.motifs = streamline(pool);

    const Vector& values = series.distance_values(params.normalize);
    const bool labelled = static_cast<Index>(series.time_labels.size()) == series.raw_length();
    for (auto& motif : report.motifs) {
        motif.ed_matrix = pairwise_distances(values, motif.starts, motif.span);
        if (labelled) {
            std::vector<std::string> labels;
            for (const Index start : motif.starts) {
                labels.push_back(series.time_labels[static_cast<std::size_t>(start)]);
            }
            report.start_labels.push_back(std::move(labels));
        }
    }
    return report;
}

}  // namespace mta
