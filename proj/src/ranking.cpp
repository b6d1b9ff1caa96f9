#include "punkt/ranking.hpp"
#include "punkt/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace punkt {

namespace {

// Integral values print without a decimal point so dumps of counts stay
// exact and byte-stable; anything else gets round-trip precision.
void print_value(std::ostream& out, double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        out << static_cast<long long>(v);
    } else {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out << buf;
    }
}

} // namespace

RankedSeries rank_descending(const std::vector<std::pair<std::size_t, double>>& series,
                             std::string label) {
    if (series.empty())
        throw Error("rank_descending", "empty series" + (label.empty() ? "" : " (" + label + ")"));
    for (const auto& [ordinal, value] : series)
        if (!(value > 0.0))
            throw Error("rank_descending", "non-positive value " + std::to_string(value) +
                                               " at ordinal " + std::to_string(ordinal));

    RankedSeries out;
    out.label = std::move(label);
    out.items.reserve(series.size());
    for (const auto& [ordinal, value] : series)
        out.items.push_back({0, value, ordinal});

    std::sort(out.items.begin(), out.items.end(), [](const RankedItem& a, const RankedItem& b) {
        if (a.value != b.value) return a.value > b.value;
        return a.origin_ordinal < b.origin_ordinal;
    });
    for (std::size_t i = 0; i < out.items.size(); ++i) out.items[i].rank = i + 1;
    return out;
}

RankedSeries rank_lengths(const LengthSeries& series, std::string label) {
    std::vector<std::pair<std::size_t, double>> values;
    values.reserve(series.values.size());
    for (const auto& [ordinal, length] : series.values)
        values.emplace_back(ordinal, static_cast<double>(length));
    return rank_descending(values, std::move(label));
}

RankedSeries zipf_rank(const WordFrequencyTable& table, std::string label) {
    std::vector<std::pair<std::size_t, double>> values;
    values.reserve(table.entries.size());
    for (const auto& [word, stats] : table.entries)
        values.emplace_back(stats.first_ordinal, static_cast<double>(stats.frequency));
    return rank_descending(values, std::move(label));
}

void write_ranks_csv(std::ostream& out, const RankedSeries& series) {
    out << "rank,value,origin\n";
    for (const RankedItem& item : series.items) {
        out << item.rank << ',';
        print_value(out, item.value);
        out << ',' << item.origin_ordinal << '\n';
    }
}

void write_loglog_data(std::ostream& out, const RankedSeries& series) {
    char buf[80];
    for (const RankedItem& item : series.items) {
        std::snprintf(buf, sizeof(buf), "%.12g %.12g\n",
                      std::log10(static_cast<double>(item.rank)), std::log10(item.value));
        out << buf;
    }
}

} // namespace punkt
