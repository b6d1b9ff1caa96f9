// Corpus loading and cleaning: UTF-8 decoding, Project Gutenberg style
// boilerplate stripping, chapter-heading removal, text normalization and
// word tokenization. Documents hold Unicode scalar values so every length
// downstream is a scalar-value count.

#ifndef PUNKT_CORPUS_HPP
#define PUNKT_CORPUS_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace punkt {

struct RawDocument {
    std::string source_id;
    std::u32string content;      // decoded scalar values, unmodified
    std::size_t byte_length = 0; // UTF-8 encoded size of content
};

struct LogEntry {
    std::string transform;
    std::size_t count = 0;
    std::string note;
};

// Ordered record of every transform applied to a document, so a
// CleanDocument is reproducible from its RawDocument.
struct NormalizationLog {
    std::vector<LogEntry> entries;

    void add(std::string transform, std::size_t count, std::string note = {}) {
        entries.push_back({std::move(transform), count, std::move(note)});
    }
    std::string summary() const;
};

struct CleanDocument {
    std::string source_id;
    std::u32string content;
    NormalizationLog normalization_log;
};

struct Token {
    std::u32string surface;
    std::u32string folded; // full case folding of surface
    std::size_t ordinal = 0;
};

// Line-level regex patterns (matched against each line with any trailing CR
// removed) bounding the text body. Defaults target Project Gutenberg
// header/footer marker lines.
struct MarkerConfig {
    std::string start_pattern;
    std::string end_pattern;
};

struct NormalizeOptions {
    bool compose = true;          // canonical composition (NFC)
    bool strip_cr = true;         // remove carriage returns
    bool newline_to_blank = true; // convert newlines to blanks
    bool collapse_blanks = true;  // collapse blank runs to a single blank
};

MarkerConfig default_marker_config();
std::vector<std::string> default_heading_patterns();

// Strict UTF-8 decode. Errors: invalid byte sequence (names the byte offset
// of the first bad sequence), empty input.
RawDocument load_document(std::string_view bytes, std::string source_id);
RawDocument load_document_file(const std::filesystem::path& path, std::string source_id);

// Keeps only the region strictly between the first start-marker line and the
// first subsequent end-marker line (both marker lines excluded). With no
// markers the input passes through unchanged and the log records that fact;
// a lone marker is an error, since truncating one side biases every
// downstream statistic.
RawDocument strip_boilerplate(const RawDocument& doc, const MarkerConfig& markers,
                              NormalizationLog& log);

// Removes every line matching an enabled heading pattern, including its
// terminating newline. Zero matches is valid and logged.
CleanDocument strip_chapter_heads(const RawDocument& doc,
                                  const std::vector<std::string>& heading_patterns,
                                  NormalizationLog log = {});

// Applies the enabled transforms in declaration order, one log entry per
// enabled transform with its replacement count. Also logs a warning when
// x-system digraphs (cx gx hx jx sx ux) are detected, since those inflate
// character counts relative to Unicode diacritics.
CleanDocument normalize_text(const CleanDocument& doc, const NormalizeOptions& options);

// A word is a maximal run of letters and digits plus internal apostrophes
// (U+0027 or U+2019 with a letter on both sides). Everything else separates.
std::vector<Token> tokenize_words(const CleanDocument& doc);

} // namespace punkt

#endif
