#include "punkt/series.hpp"
#include "punkt/error.hpp"
#include "punkt/unicode.hpp"

namespace punkt {

LengthSeries build_lts(const std::vector<Segment>& segments, MarkClass cls) {
    if (segments.empty())
        throw Error("build_lts",
                    std::string("no segments for class ") + std::string(class_name(cls)));
    LengthSeries series;
    series.cls = cls;
    series.values.reserve(segments.size());
    for (const Segment& seg : segments)
        series.values.emplace_back(seg.ordinal, seg.length_chars);
    return series;
}

WordFrequencyTable build_word_frequency_table(const std::vector<Token>& tokens) {
    if (tokens.empty())
        throw Error("build_word_frequency_table", "no tokens");
    WordFrequencyTable table;
    table.total_tokens = tokens.size();
    table.entries.reserve(tokens.size() / 2);
    for (const Token& tok : tokens) {
        auto [it, inserted] = table.entries.try_emplace(tok.folded, WordStats{0, tok.ordinal});
        ++it->second.frequency;
    }
    return table;
}

FrequencySeries build_fts(const std::vector<Token>& tokens, const WordFrequencyTable& table) {
    FrequencySeries series;
    series.values.reserve(tokens.size());
    for (const Token& tok : tokens) {
        auto it = table.entries.find(tok.folded);
        if (it == table.entries.end())
            throw Error("build_fts", "token '" + uni::encode_utf8(tok.folded) +
                                         "' missing from frequency table");
        series.values.emplace_back(tok.ordinal, it->second.frequency);
    }
    return series;
}

void write_series_csv(std::ostream& out, const std::string& source_id,
                      const std::string& series_name, const SeriesValues& values) {
    out << "# source=" << source_id << " series=" << series_name << '\n';
    out << "ordinal,value\n";
    for (const auto& [ordinal, value] : values) out << ordinal << ',' << value << '\n';
}

} // namespace punkt
