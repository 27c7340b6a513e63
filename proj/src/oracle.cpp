#include "mta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

namespace mta::oracle {

namespace {

std::vector<double> copy_values(const TimeSeries& series, const Params& params)
{
    const Vector& v = series.distance_values(params.normalize);
    return {v.data(), v.data() + v.size()};
}

double plain_distance(const std::vector<double>& values, Index x, Index y, Index span)
{
    double sum = 0.0;
    for (Index i = 0; i < span; ++i) {
        const double d = values[static_cast<std::size_t>(x + i)] - values[static_cast<std::size_t>(y + i)];
        sum += d * d;
    }
    return std::sqrt(sum);
}

bool within_tolerance(double value, double reference)
{
    return std::abs(value - reference) <= kDistanceTolerance * std::max(1.0, std::abs(reference));
}

bool same_word(const Word& symbols, Index x, Index y, Index generation, Index s)
{
    for (Index j = 0; j < generation; ++j) {
        if (symbols[static_cast<std::size_t>(x + j * s)] != symbols[static_cast<std::size_t>(y + j * s)]) {
            return false;
        }
    }
    return true;
}

template <typename... Args>
std::string concat(const Args&... args)
{
    std::ostringstream out;
    (out << ... << args);
    return out.str();
}

}  // namespace

Word reference_symbols(const TimeSeries& series, const Params& params)
{
    const Alphabet alphabet = make_alphabet(params.alphabet_size);
    const Index s = params.symbol_length;
    Word symbols;
    for (Index i = 0; i + s <= series.length(); ++i) {
        symbols.push_back(symbolize_window(series.norm, i, s, alphabet));
    }
    return symbols;
}

std::vector<bool> reference_retained(const Word& symbols, Index symbol_length, Index series_length,
                                     Index generation)
{
    std::vector<bool> retained(static_cast<std::size_t>(std::max<Index>(series_length, 0)), false);
    const Index last_start = series_length - generation * symbol_length;
    Index kept = -1;
    Index eliminated = 0;
    for (Index start = 0; start <= last_start; ++start) {
        if (kept < 0 || !same_word(symbols, start, kept, generation, symbol_length) || eliminated == symbol_length) {
            retained[static_cast<std::size_t>(start)] = true;
            kept = start;
            eliminated = 0;
        } else {
            ++eliminated;
        }
    }
    return retained;
}

MotifSet brute_force_motifs(const TimeSeries& series, const Params& params, Index max_span, Index size_limit)
{
    validate_params(params);
    const Index n = series.length();
    if (n > size_limit) {
        throw Error(ErrorCode::TooLarge, "brute force limited to " + std::to_string(size_limit) +
                                             " points, series has " + std::to_string(n));
    }
    const Index s = params.symbol_length;
    const Index max_k = std::min(max_span, n) / s;
    const auto values = copy_values(series, params);

    MotifSet result;
    for (Index x = 0; x < n; ++x) {
        for (Index y = x + s; y + s <= n; ++y) {
            double sum = 0.0;
            for (Index k = 1; k <= max_k && y + k * s <= n; ++k) {
                for (Index i = (k - 1) * s; i < k * s; ++i) {
                    const double d =
                        values[static_cast<std::size_t>(x + i)] - values[static_cast<std::size_t>(y + i)];
                    sum += d * d;
                }
                const double distance = std::sqrt(sum);
                if (distance <= params.threshold * static_cast<double>(k * s)) {
                    result.entries.push_back({k * s, x, y, distance});
                }
            }
        }
    }
    std::sort(result.entries.begin(), result.entries.end(), [](const Entry& a, const Entry& b) {
        return std::tie(a.span, a.start_x, a.start_y) < std::tie(b.span, b.start_x, b.start_y);
    });
    return result;
}

Verdict check_soundness(const MotifReport& report, const TimeSeries& series, const Params& params)
{
    Verdict verdict;
    const Index n = series.length();
    const Index s = params.symbol_length;
    const auto values = copy_values(series, params);
    const Word symbols = reference_symbols(series, params);
    std::unordered_map<Index, std::vector<bool>> retained_by_generation;

    auto fail = [&](std::string message) {
        verdict.soundness = false;
        verdict.failures.push_back("soundness: " + std::move(message));
    };

    for (const auto& motif : report.motifs) {
        const auto generation = static_cast<Index>(motif.text.size());
        const std::string tag = concat("motif '", motif.text, "'");
        if (generation == 0 || motif.span != generation * s) {
            fail(concat(tag, " has span ", motif.span, " inconsistent with s = ", s));
            continue;
        }
        if (motif.starts.size() < 2 || !std::is_sorted(motif.starts.begin(), motif.starts.end()) ||
            std::adjacent_find(motif.starts.begin(), motif.starts.end()) != motif.starts.end()) {
            fail(concat(tag, " needs at least two distinct sorted starts"));
            continue;
        }
        if (motif.starts.front() < 0 || motif.starts.back() + motif.span > n) {
            fail(concat(tag, " has an occurrence outside the series"));
            continue;
        }

        auto [it, inserted] = retained_by_generation.try_emplace(generation);
        if (inserted) {
            it->second = reference_retained(symbols, s, n, generation);
        }
        const auto& retained = it->second;

        std::vector<bool> paired(motif.starts.size(), false);
        for (const auto& pair : motif.passing_pairs) {
            ++verdict.pairs_checked;
            const auto xi = std::lower_bound(motif.starts.begin(), motif.starts.end(), pair.first);
            const auto yi = std::lower_bound(motif.starts.begin(), motif.starts.end(), pair.second);
            if (xi == motif.starts.end() || *xi != pair.first || yi == motif.starts.end() || *yi != pair.second) {
                fail(concat(tag, " pair (", pair.first, ", ", pair.second, ") refers to an unlisted start"));
                continue;
            }
            paired[static_cast<std::size_t>(xi - motif.starts.begin())] = true;
            paired[static_cast<std::size_t>(yi - motif.starts.begin())] = true;

            const double recomputed = plain_distance(values, pair.first, pair.second, motif.span);
            verdict.max_distance_error = std::max(verdict.max_distance_error, std::abs(recomputed - pair.distance));
            if (!within_tolerance(pair.distance, recomputed)) {
                fail(concat(tag, " pair (", pair.first, ", ", pair.second, ") recorded distance ", pair.distance,
                            " but recomputed ", recomputed));
            }
            const double limit = threshold_for(motif.span, params);
            if (recomputed > limit + kDistanceTolerance * std::max(1.0, limit)) {
                fail(concat(tag, " pair (", pair.first, ", ", pair.second, ") distance ", recomputed,
                            " exceeds threshold ", limit));
            }
        }

        for (std::size_t i = 0; i < motif.starts.size(); ++i) {
            const Index start = motif.starts[i];
            if (!paired[i]) {
                fail(concat(tag, " start ", start, " is not backed by a passing pair"));
            }
            for (Index j = 0; j < generation; ++j) {
                if (symbols[static_cast<std::size_t>(start + j * s)] != motif.text[static_cast<std::size_t>(j)]) {
                    fail(concat(tag, " start ", start, " does not carry that symbol string"));
                    break;
                }
            }
            if (!retained[static_cast<std::size_t>(start)]) {
                fail(concat(tag, " start ", start, " does not survive trivial-match elimination"));
            }
        }

        const auto k = static_cast<Index>(motif.starts.size());
        if (motif.ed_matrix.size() != 0) {
            if (motif.ed_matrix.rows() != k || motif.ed_matrix.cols() != k) {
                fail(concat(tag, " distance matrix has the wrong shape"));
            } else {
                for (Index i = 0; i < k; ++i) {
                    for (Index j = i + 1; j < k; ++j) {
                        const double recomputed = plain_distance(values, motif.starts[static_cast<std::size_t>(i)],
                                                                 motif.starts[static_cast<std::size_t>(j)], motif.span);
                        if (!within_tolerance(motif.ed_matrix(i, j), recomputed) ||
                            motif.ed_matrix(i, j) != motif.ed_matrix(j, i)) {
                            fail(concat(tag, " distance matrix entry (", i, ", ", j, ") disagrees with ", recomputed));
                        }
                    }
                }
            }
        }
    }
    return verdict;
}

namespace {

class CoverageIndex {
public:
    explicit CoverageIndex(const std::vector<MemoryMotif>& motifs) : motifs_(motifs)
    {
        for (const auto& motif : motifs_) {
            by_text_.emplace(motif.text, &motif);
        }
    }

    bool covers(const Word& text, Index x, Index y, Index span) const
    {
        const auto it = by_text_.find(text);
        if (it != by_text_.end()) {
            const auto& starts = it->second->starts;
            if (std::binary_search(starts.begin(), starts.end(), x) &&
                std::binary_search(starts.begin(), starts.end(), y)) {
                return true;
            }
        }
        return std::any_of(motifs_.begin(), motifs_.end(), [&](const MemoryMotif& m) {
            return m.span > span && contains(m, x, span) && contains(m, y, span);
        });
    }

private:
    static bool contains(const MemoryMotif& motif, Index start, Index span)
    {
        return std::any_of(motif.starts.begin(), motif.starts.end(), [&](Index occ) {
            return occ <= start && start + span <= occ + motif.span;
        });
    }

    const std::vector<MemoryMotif>& motifs_;
    std::unordered_map<Word, const MemoryMotif*> by_text_;
};

}  // namespace

Verdict validate_report(const MotifReport& report, const TimeSeries& series, const Params& params, Index size_limit)
{
    Verdict verdict = check_soundness(report, series, params);
    const Index n = series.length();
    if (n > size_limit) {
        verdict.failures.push_back(concat("completeness: skipped, series length ", n, " exceeds ", size_limit));
        return verdict;
    }
    verdict.completeness_checked = true;

    const Index s = params.symbol_length;
    const Index max_k = effective_max_generations(params, n);
    const auto values = copy_values(series, params);
    const Word symbols = reference_symbols(series, params);

    std::vector<std::vector<bool>> retained(static_cast<std::size_t>(max_k + 1));
    for (Index k = 1; k <= max_k; ++k) {
        retained[static_cast<std::size_t>(k)] = reference_retained(symbols, s, n, k);
    }
    auto kept = [&](Index k, Index start) { return retained[static_cast<std::size_t>(k)][static_cast<std::size_t>(start)]; };

    // Template: symbols of generation-1 pairs that survive elimination and pass.
    std::vector<bool> in_template(kMaxAlphabetSize, false);
    if (max_k >= 1) {
        for (Index x = 0; x + s <= n; ++x) {
            for (Index y = x + s; y + s <= n; ++y) {
                if (symbols[static_cast<std::size_t>(x)] == symbols[static_cast<std::size_t>(y)] && kept(1, x) &&
                    kept(1, y) && plain_distance(values, x, y, s) <= threshold_for(s, params)) {
                    in_template[static_cast<std::size_t>(region_of(symbols[static_cast<std::size_t>(x)]))] = true;
                }
            }
        }
    }

    const CoverageIndex coverage(report.motifs);
    constexpr std::size_t kMaxListedMisses = 20;
    for (Index x = 0; x < n; ++x) {
        for (Index y = x + s; y + s <= n; ++y) {
            double sum = 0.0;
            bool lineage = true;
            Word text;
            for (Index k = 1; k <= max_k && y + k * s <= n; ++k) {
                const auto sx = symbols[static_cast<std::size_t>(x + (k - 1) * s)];
                if (sx != symbols[static_cast<std::size_t>(y + (k - 1) * s)]) {
                    break;
                }
                text.push_back(sx);
                for (Index i = (k - 1) * s; i < k * s; ++i) {
                    const double d =
                        values[static_cast<std::size_t>(x + i)] - values[static_cast<std::size_t>(y + i)];
                    sum += d * d;
                }
                const bool passes = std::sqrt(sum) <= threshold_for(k * s, params);
                const bool eligible = kept(k, x) && kept(k, y) && passes;
                lineage = lineage && eligible && in_template[static_cast<std::size_t>(region_of(sx))];
                if (!eligible) {
                    continue;
                }

                const bool covered = coverage.covers(text, x, y, k * s);
                if (lineage) {
                    ++verdict.expected_pairs;
                    if (!covered) {
                        ++verdict.missed_pairs;
                        verdict.completeness = false;
                        if (verdict.missed_pairs <= static_cast<Index>(kMaxListedMisses)) {
                            verdict.failures.push_back(
                                concat("completeness: pair (", x, ", ", y, ") '", text, "' span ", k * s,
                                       " is not covered by the report"));
                        }
                    }
                } else {
                    ++verdict.unreachable_pairs;
                    if (!covered) {
                        ++verdict.unreachable_uncovered;
                    }
                }
            }
        }
    }
    return verdict;
}

}  // namespace mta::oracle
