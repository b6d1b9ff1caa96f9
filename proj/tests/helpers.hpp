// Shared test utilities: document builders, an independent reference
// segmenter used as an oracle against split_by_mark, the exact partition
// check, random input generators and a scratch-directory guard.

#ifndef PUNKT_TESTS_HELPERS_HPP
#define PUNKT_TESTS_HELPERS_HPP

#include "punkt/corpus.hpp"
#include "punkt/ranking.hpp"
#include "punkt/segmentation.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace punkt::test {

inline CleanDocument make_doc(std::u32string content, std::string source_id = "test") {
    CleanDocument doc;
    doc.source_id = std::move(source_id);
    doc.content = std::move(content);
    return doc;
}

// Reference segmenter, kept independent of split_by_mark: first collects
// terminator positions (collapsing dot runs for dot-bearing classes), then
// cuts and trims the spans between them.
inline std::vector<Segment> reference_segments(const std::u32string& text, MarkClass cls) {
    const std::u32string terms{terminator_set(cls)};
    const bool dots = terms.find(U'.') != std::u32string::npos;

    std::vector<std::size_t> positions;
    std::size_t pos = 0;
    while ((pos = text.find_first_of(terms, pos)) != std::u32string::npos) {
        positions.push_back(pos);
        ++pos;
        if (dots && text[positions.back()] == U'.')
            while (pos < text.size() && text[pos] == U'.') ++pos;
    }

    std::vector<Segment> out;
    auto add_span = [&](std::size_t b, std::size_t e, std::optional<char32_t> term) {
        std::size_t lead = b;
        while (lead < e && text[lead] == U' ') ++lead;
        std::size_t trail = e;
        while (trail > lead && text[trail - 1] == U' ') --trail;
        if (lead == trail) return;
        Segment seg;
        seg.ordinal = out.size();
        seg.start = lead;
        seg.end = trail;
        seg.terminator = term;
        seg.length_chars = trail - lead;
        out.push_back(seg);
    };

    std::size_t begin = 0;
    for (std::size_t p : positions) {
        add_span(begin, p, text[p]);
        begin = p + 1;
        if (dots && text[p] == U'.')
            while (begin < text.size() && text[begin] == U'.') ++begin;
    }
    add_span(begin, text.size(), std::nullopt);
    return out;
}

inline bool segments_equal(const std::vector<Segment>& a, const std::vector<Segment>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].ordinal != b[i].ordinal || a[i].start != b[i].start || a[i].end != b[i].end ||
            a[i].terminator != b[i].terminator || a[i].length_chars != b[i].length_chars)
            return false;
    }
    return true;
}

// Exact partition identity: every scalar is either interior to an emitted
// segment, a terminator-set scalar (each dot of an ellipsis run counts), or
// a blank outside every emitted segment.
inline bool partition_holds(const std::u32string& text, MarkClass cls,
                            const std::vector<Segment>& segments) {
    const std::u32string terms{terminator_set(cls)};
    std::size_t seg_total = 0;
    std::size_t blanks_inside = 0;
    for (const Segment& seg : segments) {
        seg_total += seg.length_chars;
        for (std::size_t i = seg.start; i < seg.end; ++i)
            if (text[i] == U' ') ++blanks_inside;
    }
    std::size_t term_scalars = 0;
    std::size_t blanks_total = 0;
    for (char32_t c : text) {
        if (terms.find(c) != std::u32string::npos) ++term_scalars;
        if (c == U' ') ++blanks_total;
    }
    return seg_total + term_scalars + (blanks_total - blanks_inside) == text.size();
}

inline std::u32string random_marked_string(std::mt19937& rng, std::size_t max_len = 200) {
    static const std::u32string alphabet = U"ab caé .,:;!?  .";
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    const std::size_t len = len_dist(rng);
    std::u32string s;
    s.reserve(len);
    for (std::size_t i = 0; i < len; ++i) s.push_back(alphabet[pick(rng)]);
    return s;
}

// rank,value,origin rows from a dumped rank CSV.
inline RankedSeries parse_ranks_csv(const std::filesystem::path& path, std::string label) {
    std::ifstream in(path);
    RankedSeries series;
    series.label = std::move(label);
    std::string line;
    std::getline(in, line); // header
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string rank, value, origin;
        std::getline(row, rank, ',');
        std::getline(row, value, ',');
        std::getline(row, origin, ',');
        series.items.push_back({std::stoull(rank), std::stod(value), std::stoull(origin)});
    }
    return series;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    out << bytes;
}

class ScratchDir {
public:
    explicit ScratchDir(const std::string& tag) {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("punkt_" + tag + "_" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~ScratchDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

} // namespace punkt::test

#endif
