// Punctuation-delimited segmentation. Each mark class splits a clean
// document on its own terminator set only; segment lengths count Unicode
// scalar values including interior blanks, after trimming exterior blanks
// and excluding the terminator.

#ifndef PUNKT_SEGMENTATION_HPP
#define PUNKT_SEGMENTATION_HPP

#include "punkt/corpus.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace punkt {

enum class MarkClass {
    Dot,
    Comma,
    Colon,
    Semicolon,
    Exclamation,
    Question,
    UnitOfThought, // dot, semicolon, exclamation and question together
};

inline constexpr std::array<MarkClass, 7> kAllMarkClasses = {
    MarkClass::Dot,       MarkClass::Comma,       MarkClass::Colon,    MarkClass::Semicolon,
    MarkClass::Exclamation, MarkClass::Question, MarkClass::UnitOfThought,
};

inline constexpr std::array<MarkClass, 6> kSingleMarkClasses = {
    MarkClass::Dot,         MarkClass::Comma,    MarkClass::Colon,
    MarkClass::Semicolon,   MarkClass::Exclamation, MarkClass::Question,
};

std::u32string_view terminator_set(MarkClass cls);
std::string_view class_name(MarkClass cls); // dot, comma, colon, semicolon, exclam, question, unit
std::optional<MarkClass> class_from_name(std::string_view name);

struct Segment {
    std::size_t ordinal = 0; // position among this class's segments
    std::size_t start = 0;   // scalar offset of trimmed span
    std::size_t end = 0;     // scalar offset one past trimmed span
    std::optional<char32_t> terminator; // absent for a trailing unterminated segment
    std::size_t length_chars = 0;       // == end - start, >= 1
};

// Single scan: each terminator occurrence closes the current segment;
// segments are trimmed of exterior blanks and dropped when empty; for
// classes containing the dot, a run of consecutive dots closes exactly one
// segment. A document with no terminators yields one segment.
std::vector<Segment> split_by_mark(const CleanDocument& doc, MarkClass cls);

inline std::size_t segment_length(const Segment& seg) { return seg.length_chars; }

// Terminator occurrence counts per class; an ellipsis run counts as one Dot
// occurrence; UnitOfThought is the sum of Dot, Semicolon, Exclamation and
// Question counts.
std::map<MarkClass, std::size_t> count_marks(const CleanDocument& doc);

// CSV dump: header `ordinal,start,end,terminator,length`, terminator column
// empty for the trailing segment.
void write_segments_csv(std::ostream& out, const std::vector<Segment>& segments);

} // namespace punkt

#endif
