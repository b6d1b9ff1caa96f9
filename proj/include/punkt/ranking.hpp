// Rank-size conversion: sort values descending into ranks 1..n with
// deterministic chronological tie-breaking (earlier origin ordinal first).

#ifndef PUNKT_RANKING_HPP
#define PUNKT_RANKING_HPP

#include "punkt/series.hpp"

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace punkt {

struct RankedItem {
    std::size_t rank = 0; // 1-based
    double value = 0.0;   // positive
    std::size_t origin_ordinal = 0;
};

struct RankedSeries {
    std::vector<RankedItem> items; // non-increasing in value
    std::string label;             // source and class, e.g. "AWL_eng/dot"
};

// Errors: empty input; non-positive value (log-log analysis needs positives).
RankedSeries rank_descending(const std::vector<std::pair<std::size_t, double>>& series,
                             std::string label);

RankedSeries rank_lengths(const LengthSeries& series, std::string label);

// Most frequent word at rank 1; frequency ties broken by first occurrence.
RankedSeries zipf_rank(const WordFrequencyTable& table, std::string label);

// CSV dump `rank,value,origin`.
void write_ranks_csv(std::ostream& out, const RankedSeries& series);

// Two-column whitespace-separated log10(rank) log10(value) plot data.
void write_loglog_data(std::ostream& out, const RankedSeries& series);

} // namespace punkt

#endif
