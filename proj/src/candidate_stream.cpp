#include "mta/candidate_stream.hpp"

namespace mta {

SymbolMatrix build_symbol_matrix(const Vector& norm, Index symbol_length, const Alphabet& alphabet)
{
    if (symbol_length < 1 || symbol_length > norm.size()) {
        throw Error(ErrorCode::OutOfRange, "symbol length " + std::to_string(symbol_length) +
                                               " does not fit a series of length " + std::to_string(norm.size()));
    }
    SymbolMatrix matrix;
    matrix.symbol_length = symbol_length;
    matrix.series_length = norm.size();

    const Index count = norm.size() - symbol_length + 1;
    matrix.symbols.resize(static_cast<std::size_t>(count));

    for (Index i = 0; i < count; ++i) {
        matrix.symbols[static_cast<std::size_t>(i)] = symbolize_window(norm, i, symbol_length, alphabet);
    }
    return matrix;
}

SymbolMatrix build_symbol_matrix(const TimeSeries& series, const Params& params, const Alphabet& alphabet)
{
    return build_symbol_matrix(series.norm, params.symbol_length, alphabet);
}

Word word_at(const SymbolMatrix& matrix, Index start, Index generation)
{
    const Index s = matrix.symbol_length;
    if (start < 0 || generation < 1 || start + (generation - 1) * s >= matrix.size()) {
        throw Error(ErrorCode::OutOfRange, "word of " + std::to_string(generation) + " symbols at " +
                                               std::to_string(start) + " exceeds the symbol matrix");
    }
    Word text(static_cast<std::size_t>(generation), '\0');
    for (Index j = 0; j < generation; ++j) {
        text[static_cast<std::size_t>(j)] = matrix.symbols[static_cast<std::size_t>(start + j * s)];
    }
    return text;
}

std::vector<CandidateWord> eliminate_trivial_matches(std::span<const CandidateWord> words, Index symbol_length)
{
    std::vector<CandidateWord> kept;
    const CandidateWord* last = nullptr;
    for (const auto& word : words) {
        if (last == nullptr || word.text != last->text || word.start - last->start > symbol_length) {
            kept.push_back(word);
            last = &word;
        }
    }
    return kept;
}

CandidateMatrix build_candidate_matrix(const SymbolMatrix& matrix, Index generation)
{
    const Index s = matrix.symbol_length;
    if (generation < 1 || generation * s > matrix.series_length) {
        throw Error(ErrorCode::GenerationTooLong, "no word of " + std::to_string(generation) +
                                                      " symbols fits a series of length " +
                                                      std::to_string(matrix.series_length));
    }

    // start + (g-1)s must be a valid symbol index, i.e. start + g*s <= n.
    const Index starts = matrix.series_length - generation * s + 1;
    std::vector<CandidateWord> all;
    all.reserve(static_cast<std::size_t>(starts));
    for (Index start = 0; start < starts; ++start) {
        all.push_back({word_at(matrix, start, generation), start, generation * s});
    }

    CandidateMatrix result;
    result.generation = generation;
    result.words = eliminate_trivial_matches(all, s);
    return result;
}

}  // namespace mta
