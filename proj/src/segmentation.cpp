#include "punkt/segmentation.hpp"
#include "punkt/error.hpp"
#include "punkt/unicode.hpp"

namespace punkt {

namespace {

constexpr char32_t kBlank = U' ';
constexpr char32_t kDot = U'.';

bool contains(std::u32string_view set, char32_t c) {
    return set.find(c) != std::u32string_view::npos;
}

} // namespace

std::u32string_view terminator_set(MarkClass cls) {
    switch (cls) {
        case MarkClass::Dot: return U".";
        case MarkClass::Comma: return U",";
        case MarkClass::Colon: return U":";
        case MarkClass::Semicolon: return U";";
        case MarkClass::Exclamation: return U"!";
        case MarkClass::Question: return U"?";
        case MarkClass::UnitOfThought: return U".;!?";
    }
    return {};
}

std::string_view class_name(MarkClass cls) {
    switch (cls) {
        case MarkClass::Dot: return "dot";
        case MarkClass::Comma: return "comma";
        case MarkClass::Colon: return "colon";
        case MarkClass::Semicolon: return "semicolon";
        case MarkClass::Exclamation: return "exclam";
        case MarkClass::Question: return "question";
        case MarkClass::UnitOfThought: return "unit";
    }
    return {};
}

std::optional<MarkClass> class_from_name(std::string_view name) {
    for (MarkClass cls : kAllMarkClasses)
        if (name == class_name(cls)) return cls;
    return std::nullopt;
}

std::vector<Segment> split_by_mark(const CleanDocument& doc, MarkClass cls) {
    const std::u32string_view terms = terminator_set(cls);
    const std::u32string& text = doc.content;
    const std::size_t n = text.size();
    const bool dot_class = contains(terms, kDot);

    std::vector<Segment> segments;
    auto emit = [&](std::size_t begin, std::size_t end, std::optional<char32_t> term) {
        while (begin < end && text[begin] == kBlank) ++begin;
        while (end > begin && text[end - 1] == kBlank) --end;
        if (begin == end) return; // empty after trimming: dropped
        Segment seg;
        seg.ordinal = segments.size();
        seg.start = begin;
        seg.end = end;
        seg.terminator = term;
        seg.length_chars = end - begin;
        segments.push_back(seg);
    };

    std::size_t span_start = 0;
    std::size_t i = 0;
    while (i < n) {
        const char32_t c = text[i];
        if (!contains(terms, c)) {
            ++i;
            continue;
        }
        emit(span_start, i, c);
        ++i;
        if (dot_class && c == kDot)
            while (i < n && text[i] == kDot) ++i; // ellipsis run closes one segment
        span_start = i;
    }
    emit(span_start, n, std::nullopt);
    return segments;
}

std::map<MarkClass, std::size_t> count_marks(const CleanDocument& doc) {
    std::map<MarkClass, std::size_t> counts;
    for (MarkClass cls : kAllMarkClasses) counts[cls] = 0;

    const std::u32string& text = doc.content;
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case kDot:
                if (i == 0 || text[i - 1] != kDot) ++counts[MarkClass::Dot];
                break;
            case U',': ++counts[MarkClass::Comma]; break;
            case U':': ++counts[MarkClass::Colon]; break;
            case U';': ++counts[MarkClass::Semicolon]; break;
            case U'!': ++counts[MarkClass::Exclamation]; break;
            case U'?': ++counts[MarkClass::Question]; break;
            default: break;
        }
    }
    counts[MarkClass::UnitOfThought] = counts[MarkClass::Dot] + counts[MarkClass::Semicolon] +
                                       counts[MarkClass::Exclamation] +
                                       counts[MarkClass::Question];
    return counts;
}

void write_segments_csv(std::ostream& out, const std::vector<Segment>& segments) {
    out << "ordinal,start,end,terminator,length\n";
    for (const Segment& seg : segments) {
        out << seg.ordinal << ',' << seg.start << ',' << seg.end << ',';
        if (seg.terminator) {
            // A comma terminator must be quoted to keep the row parseable.
            if (*seg.terminator == U',')
                out << "\",\"";
            else
                out << uni::encode_utf8(std::u32string(1, *seg.terminator));
        }
        out << ',' << seg.length_chars << '\n';
    }
}

} // namespace punkt
