// Maps a document into a length time series (segment lengths in text order),
// a word frequency table, and a frequency time series (each token replaced
// by its whole-document frequency).

#ifndef PUNKT_SERIES_HPP
#define PUNKT_SERIES_HPP

#include "punkt/corpus.hpp"
#include "punkt/segmentation.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace punkt {

// (ordinal, value) with ordinals strictly increasing.
using SeriesValues = std::vector<std::pair<std::size_t, std::size_t>>;

struct LengthSeries {
    MarkClass cls;
    SeriesValues values; // (segment ordinal, length_chars)
};

struct WordStats {
    std::size_t frequency = 0;
    std::size_t first_ordinal = 0; // ordinal of the first token with this folded form
};

struct WordFrequencyTable {
    std::unordered_map<std::u32string, WordStats> entries; // keyed on folded form
    std::size_t total_tokens = 0;
};

struct FrequencySeries {
    SeriesValues values; // (token ordinal, whole-document frequency)
};

// Errors when the segment sequence is empty (ranking needs at least one value).
LengthSeries build_lts(const std::vector<Segment>& segments, MarkClass cls);

// Errors on an empty token sequence.
WordFrequencyTable build_word_frequency_table(const std::vector<Token>& tokens);

// Errors when a token's folded form is missing from the table (table/token
// mismatch).
FrequencySeries build_fts(const std::vector<Token>& tokens, const WordFrequencyTable& table);

// CSV dump: comment header naming source and class, then `ordinal,value`.
void write_series_csv(std::ostream& out, const std::string& source_id,
                      const std::string& series_name, const SeriesValues& values);

} // namespace punkt

#endif
