#pragma once

#include <span>
#include <vector>

#include "mta/preprocessing.hpp"

namespace mta {

/// One single-symbol word per sliding-window start over the normalized series.
struct SymbolMatrix {
    Word symbols;           // symbols[i] covers norm[i, i + s)
    Index symbol_length = 0;
    Index series_length = 0;  // length of the normalized series it was built from

    Index size() const noexcept { return static_cast<Index>(symbols.size()); }
};

struct CandidateWord {
    Word text;
    Index start = 0;
    Index span = 0;  // text.size() * s data points

    friend bool operator==(const CandidateWord&, const CandidateWord&) = default;
};

struct CandidateMatrix {
    Index generation = 0;
    std::vector<CandidateWord> words;  // strictly increasing start
};

SymbolMatrix build_symbol_matrix(const TimeSeries& series, const Params& params, const Alphabet& alphabet);

/// Overload for an already-normalized value sequence.
SymbolMatrix build_symbol_matrix(const Vector& norm, Index symbol_length, const Alphabet& alphabet);

/// The g-symbol word at `start`: symbols[start], symbols[start + s], ..., symbols[start + (g-1)s].
Word word_at(const SymbolMatrix& matrix, Index start, Index generation);

/**
 * Trivial-match elimination over words in increasing start order.
 *
 * A word is kept when its text differs from the last kept word, or when more
 * than `symbol_length` start positions separate it from the last kept word.
 * On a gapless candidate stream the second clause is exactly "s consecutive
 * eliminations force a retention"; measuring it in positions makes the filter
 * idempotent.
 */
std::vector<CandidateWord> eliminate_trivial_matches(std::span<const CandidateWord> words, Index symbol_length);

/// All g-symbol words that fit the series, filtered by eliminate_trivial_matches.
/// Throws GenerationTooLong when no word of g symbols fits.
CandidateMatrix build_candidate_matrix(const SymbolMatrix& matrix, Index generation);

}  // namespace mta
