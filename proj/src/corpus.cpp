#include "punkt/corpus.hpp"
#include "punkt/error.hpp"
#include "punkt/unicode.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace punkt {

namespace {

constexpr char32_t kBlank = U' ';
constexpr char32_t kNewline = U'\n';
constexpr char32_t kCarriageReturn = U'\r';

std::regex compile_pattern(const std::string& pattern, const char* stage) {
    try {
        return std::regex(pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
        throw Error(stage, "invalid pattern '" + pattern + "': " + e.what());
    }
}

// Calls fn(line_begin, line_end, next_begin) for each line; line_end excludes
// the newline, next_begin is the offset past it. Handles a missing final
// newline.
template <typename Fn>
void for_each_line(const std::u32string& content, Fn&& fn) {
    std::size_t pos = 0;
    const std::size_t n = content.size();
    while (pos < n) {
        std::size_t eol = content.find(kNewline, pos);
        std::size_t next = eol == std::u32string::npos ? n : eol + 1;
        if (eol == std::u32string::npos) eol = n;
        fn(pos, eol, next);
        pos = next;
    }
}

// Line text for matching: UTF-8, trailing CR dropped (Gutenberg files are
// CRLF-terminated and patterns should not have to care).
std::string match_text(const std::u32string& content, std::size_t begin, std::size_t end) {
    if (end > begin && content[end - 1] == kCarriageReturn) --end;
    return uni::encode_utf8(std::u32string_view(content).substr(begin, end - begin));
}

} // namespace

std::string NormalizationLog::summary() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out << "; ";
        out << entries[i].transform << "=" << entries[i].count;
        if (!entries[i].note.empty()) out << " (" << entries[i].note << ")";
    }
    return out.str();
}

MarkerConfig default_marker_config() {
    return {R"(^\s*\*{3} ?START OF (THE|THIS) PROJECT GUTENBERG.*$)",
            R"(^\s*\*{3} ?END OF (THE|THIS) PROJECT GUTENBERG.*$)"};
}

std::vector<std::string> default_heading_patterns() {
    return {R"(^\s*CHAPTER\s+([IVXLCDM]+|[0-9]+)\.?(\s.*)?$)",
            R"(^\s*(ĈAPITRO|Ĉapitro)\s+\S.*$)"};
}

RawDocument load_document(std::string_view bytes, std::string source_id) {
    if (bytes.empty())
        throw Error("load_document", "empty input: a zero-length document is not analyzable");
    RawDocument doc;
    doc.source_id = std::move(source_id);
    doc.content = uni::decode_utf8(bytes);
    doc.byte_length = bytes.size();
    return doc;
}

RawDocument load_document_file(const std::filesystem::path& path, std::string source_id) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("load_document", "cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw Error("load_document", "read failure: " + path.string());
    return load_document(buf.str(), std::move(source_id));
}

RawDocument strip_boilerplate(const RawDocument& doc, const MarkerConfig& markers,
                              NormalizationLog& log) {
    const std::regex start_re = compile_pattern(markers.start_pattern, "strip_boilerplate");
    const std::regex end_re = compile_pattern(markers.end_pattern, "strip_boilerplate");

    // Scalar offsets of the body region: just past the start-marker line,
    // up to the beginning of the first subsequent end-marker line. A stray
    // end marker with no start (or the reverse) still counts as present so
    // the unbalanced case errors instead of passing through.
    bool have_start = false, have_end = false, saw_end_anywhere = false;
    std::size_t body_begin = 0, body_end = doc.content.size();
    for_each_line(doc.content, [&](std::size_t b, std::size_t e, std::size_t next) {
        const std::string line = match_text(doc.content, b, e);
        if (!have_start) {
            if (std::regex_match(line, start_re)) {
                have_start = true;
                body_begin = next;
                return;
            }
            if (std::regex_match(line, end_re)) saw_end_anywhere = true;
        } else if (!have_end) {
            if (std::regex_match(line, end_re)) {
                have_end = true;
                body_end = b;
            }
        }
    });
    if (!have_start && saw_end_anywhere) have_end = true;

    if (!have_start && !have_end) {
        log.add("strip_boilerplate", 0, "no markers");
        return doc;
    }
    if (have_start != have_end)
        throw Error("strip_boilerplate",
                    std::string("unbalanced markers: ") +
                        (have_start ? "start marker without end marker"
                                    : "end marker without start marker"));

    RawDocument out;
    out.source_id = doc.source_id;
    out.content = doc.content.substr(body_begin, body_end - body_begin);
    out.byte_length = uni::utf8_length(out.content);
    log.add("strip_boilerplate", doc.content.size() - out.content.size(), "markers found");
    return out;
}

CleanDocument strip_chapter_heads(const RawDocument& doc,
                                  const std::vector<std::string>& heading_patterns,
                                  NormalizationLog log) {
    if (heading_patterns.empty())
        throw Error("strip_chapter_heads", "heading pattern list is empty");
    std::vector<std::regex> patterns;
    patterns.reserve(heading_patterns.size());
    for (const auto& p : heading_patterns)
        patterns.push_back(compile_pattern(p, "strip_chapter_heads"));

    std::u32string kept;
    kept.reserve(doc.content.size());
    std::size_t removed = 0;
    for_each_line(doc.content, [&](std::size_t b, std::size_t e, std::size_t next) {
        const std::string line = match_text(doc.content, b, e);
        for (const auto& re : patterns) {
            if (std::regex_match(line, re)) {
                ++removed;
                return;
            }
        }
        kept.append(doc.content, b, next - b);
    });

    CleanDocument out;
    out.source_id = doc.source_id;
    out.content = std::move(kept);
    out.normalization_log = std::move(log);
    out.normalization_log.add("strip_chapter_heads", removed,
                              removed ? "" : "no heading lines matched");
    return out;
}

CleanDocument normalize_text(const CleanDocument& doc, const NormalizeOptions& options) {
    CleanDocument out;
    out.source_id = doc.source_id;
    out.normalization_log = doc.normalization_log;
    std::u32string text = doc.content;

    if (options.compose) {
        std::size_t replaced = 0;
        text = uni::compose_nfc(text, &replaced);
        out.normalization_log.add("compose_nfc", replaced);
    }
    if (options.strip_cr) {
        std::size_t before = text.size();
        std::erase(text, kCarriageReturn);
        out.normalization_log.add("strip_cr", before - text.size());
    }
    if (options.newline_to_blank) {
        std::size_t converted = 0;
        for (char32_t& c : text) {
            if (c == kNewline) {
                c = kBlank;
                ++converted;
            }
        }
        out.normalization_log.add("newline_to_blank", converted);
    }
    if (options.collapse_blanks) {
        std::u32string collapsed;
        collapsed.reserve(text.size());
        bool prev_blank = false;
        for (char32_t c : text) {
            if (c == kBlank && prev_blank) continue;
            prev_blank = c == kBlank;
            collapsed.push_back(c);
        }
        out.normalization_log.add("collapse_blanks", text.size() - collapsed.size());
        text = std::move(collapsed);
    }

    // X-system Esperanto writes ĉ ĝ ĥ ĵ ŝ ŭ as cx gx hx jx sx ux; such input
    // is analyzed as-is but flagged, because the digraphs inflate counts.
    std::size_t digraphs = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        const char32_t c = text[i];
        const char32_t x = text[i + 1];
        const bool base = c == U'c' || c == U'g' || c == U'h' || c == U'j' || c == U's' ||
                          c == U'u' || c == U'C' || c == U'G' || c == U'H' || c == U'J' ||
                          c == U'S' || c == U'U';
        if (base && (x == U'x' || x == U'X')) ++digraphs;
    }
    if (digraphs > 0)
        out.normalization_log.add("x_system_digraphs", digraphs,
                                  "warning: cx-style digraphs detected, character counts "
                                  "may be inflated relative to Unicode diacritics");

    out.content = std::move(text);
    return out;
}

std::vector<Token> tokenize_words(const CleanDocument& doc) {
    const std::u32string& text = doc.content;
    const std::size_t n = text.size();
    std::vector<Token> tokens;

    auto is_word_char = [](char32_t c) { return uni::is_letter(c) || uni::is_digit(c); };
    auto is_apostrophe = [](char32_t c) { return c == U'\'' || c == U'’'; };

    std::size_t i = 0;
    while (i < n) {
        if (!is_word_char(text[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < n) {
            if (is_word_char(text[i])) {
                ++i;
            } else if (is_apostrophe(text[i]) && i > start && uni::is_letter(text[i - 1]) &&
                       i + 1 < n && uni::is_letter(text[i + 1])) {
                ++i; // internal apostrophe binds
            } else {
                break;
            }
        }
        Token tok;
        tok.surface = text.substr(start, i - start);
        tok.folded = uni::case_fold(tok.surface);
        tok.ordinal = tokens.size();
        tokens.push_back(std::move(tok));
    }
    return tokens;
}

} // namespace punkt
