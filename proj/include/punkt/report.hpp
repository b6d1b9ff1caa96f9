// Pipeline orchestration and reporting: runs load -> strip -> normalize ->
// per-class segmentation/ranking/fitting plus the word pipeline, aggregates
// an AnalysisReport, and implements the analyze/compare/zipf commands with
// their file outputs.

#ifndef PUNKT_REPORT_HPP
#define PUNKT_REPORT_HPP

#include "punkt/config.hpp"
#include "punkt/corpus.hpp"
#include "punkt/fitting.hpp"
#include "punkt/ranking.hpp"
#include "punkt/segmentation.hpp"
#include "punkt/series.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace punkt {

struct AnalyzeOptions {
    Config config;
    std::vector<MarkClass> classes; // empty selects all classes
    bool with_stretched = false;
    bool with_breaks = false;
    bool dump_segments = false;
    bool dump_series = false;
    std::optional<std::size_t> fit_min; // global window overrides (flags)
    std::optional<std::size_t> fit_max;
};

struct ClassAnalysis {
    MarkClass cls = MarkClass::Dot;
    std::size_t segment_count = 0;
    std::size_t mark_count = 0;
    std::size_t min_length = 0;
    std::size_t max_length = 0;
    std::size_t total_length = 0;
    std::size_t rank1_length = 0;
    std::optional<PowerLawFit> power_law;
    std::string fit_note; // why power_law is absent
    std::optional<StretchedExponentialFit> stretched;
    std::optional<BreakEstimate> break_estimate;
};

struct WordAnalysis {
    std::size_t token_count = 0;
    std::size_t vocabulary = 0;
    std::optional<PowerLawFit> zipf;
    std::string fit_note;
    std::vector<std::string> top_words; // folded forms of the top ranks
};

struct AnalysisReport {
    std::string source_id;
    std::vector<LogEntry> preprocessing;
    std::vector<ClassAnalysis> classes;
    WordAnalysis words;
};

// Report plus the intermediate products needed for CSV dumps.
struct AnalysisBundle {
    AnalysisReport report;
    std::vector<std::vector<Segment>> segments;      // parallel to report.classes
    std::vector<std::optional<RankedSeries>> ranked; // parallel to report.classes
    std::vector<Token> tokens;
    std::optional<RankedSeries> zipf_ranked;
};

// load -> strip_boilerplate -> strip_chapter_heads -> normalize, as enabled.
// source_id is the input filename stem.
CleanDocument prepare_document(const std::filesystem::path& input, const Config& config);

AnalysisBundle analyze_bundle(const CleanDocument& doc, const AnalyzeOptions& options);
AnalysisReport analyze_document(const CleanDocument& doc, const AnalyzeOptions& options);

nlohmann::ordered_json fit_record(const std::string& label, const PowerLawFit& fit);
nlohmann::ordered_json fit_record(const std::string& label, const StretchedExponentialFit& fit);
nlohmann::ordered_json report_to_json(const AnalysisReport& report);

void print_report_table(std::ostream& out, const AnalysisReport& report);

// Writes rank CSVs, log-log plot data, marks.csv and report.json under
// out_dir/<source_id>/, prints a summary table to status, and removes any
// partially written outputs on failure.
AnalysisReport run_analyze(const std::filesystem::path& input,
                           const std::filesystem::path& out_dir, const AnalyzeOptions& options,
                           std::ostream& status);

// analyze per input, then a side-by-side table of exponents, rank-1 lengths
// and mark counts per class with pairwise exponent differences; also writes
// comparison.json. One input's failure aborts the comparison.
void run_compare(const std::vector<std::filesystem::path>& inputs,
                 const std::filesystem::path& out_dir, const AnalyzeOptions& options,
                 std::ostream& status);

struct ZipfResult {
    std::string source_id;
    std::size_t token_count = 0;
    std::size_t vocabulary = 0;
    PowerLawFit fit;
    std::vector<std::string> top_words;
};

// Word-only pipeline; errors (including an infeasible fit window) propagate.
ZipfResult run_zipf(const std::filesystem::path& input, const std::filesystem::path& out_dir,
                    const AnalyzeOptions& options, std::ostream& status);

} // namespace punkt

#endif
