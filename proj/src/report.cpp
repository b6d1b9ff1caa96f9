#include "punkt/report.hpp"
#include "punkt/error.hpp"
#include "punkt/unicode.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

namespace punkt {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Default windows are capped at the series maximum rank; the floor keeps the
// window well-formed on tiny series so those fail with the honest
// "fewer than 3 in-window points" instead of a malformed-window error.
FitWindow effective_window(FitWindow base, const std::optional<std::size_t>& fit_min,
                           const std::optional<std::size_t>& fit_max, std::size_t max_rank) {
    if (fit_min) base.r_min = *fit_min;
    if (fit_max) base.r_max = *fit_max;
    base.r_max = std::min(base.r_max, std::max(max_rank, base.r_min + 2));
    return base;
}

void append_note(std::string& note, const std::string& addition) {
    if (!note.empty()) note += "; ";
    note += addition;
}

// Removes everything it wrote unless commit() was called, so a failed
// command leaves no partial outputs behind.
class OutputTracker {
public:
    ~OutputTracker() {
        if (committed_) return;
        std::error_code ec;
        for (auto it = written_.rbegin(); it != written_.rend(); ++it) fs::remove(*it, ec);
    }

    void write(const fs::path& path, const std::function<void(std::ostream&)>& emit) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw Error("write_output", "cannot open for writing: " + path.string());
        written_.push_back(path);
        emit(out);
        out.flush();
        if (!out) throw Error("write_output", "write failed: " + path.string());
    }

    void commit() { committed_ = true; }

private:
    std::vector<fs::path> written_;
    bool committed_ = false;
};

ordered_json window_json(const FitWindow& w) {
    ordered_json j;
    j["r_min"] = w.r_min;
    j["r_max"] = w.r_max;
    return j;
}

ordered_json break_json(const BreakEstimate& b) {
    ordered_json j;
    j["break_rank"] = b.break_rank;
    j["break_length"] = b.break_length;
    j["slope_before"] = b.slope_before;
    j["slope_after"] = b.slope_after;
    j["material"] = b.material;
    j["residual_improvement"] = b.residual_improvement;
    return j;
}

std::string class_label(const std::string& source_id, MarkClass cls) {
    return source_id + "/" + std::string(class_name(cls));
}

void write_marks_csv(std::ostream& out, const std::map<MarkClass, std::size_t>& marks) {
    out << "class,count\n";
    for (MarkClass cls : kAllMarkClasses) out << class_name(cls) << ',' << marks.at(cls) << '\n';
}

} // namespace

CleanDocument prepare_document(const fs::path& input, const Config& config) {
    RawDocument raw = load_document_file(input, input.stem().string());
    NormalizationLog log;
    if (config.strip_boilerplate) raw = strip_boilerplate(raw, config.markers, log);

    CleanDocument clean;
    if (config.strip_heads) {
        clean = strip_chapter_heads(raw, config.heading_patterns, std::move(log));
    } else {
        clean.source_id = raw.source_id;
        clean.content = std::move(raw.content);
        clean.normalization_log = std::move(log);
    }
    return normalize_text(clean, config.normalize);
}

AnalysisBundle analyze_bundle(const CleanDocument& doc, const AnalyzeOptions& options) {
    AnalysisBundle bundle;
    AnalysisReport& report = bundle.report;
    report.source_id = doc.source_id;
    report.preprocessing = doc.normalization_log.entries;

    const auto marks = count_marks(doc);
    std::vector<MarkClass> classes = options.classes;
    if (classes.empty()) classes.assign(kAllMarkClasses.begin(), kAllMarkClasses.end());

    for (MarkClass cls : classes) {
        ClassAnalysis ca;
        ca.cls = cls;
        ca.mark_count = marks.at(cls);

        std::vector<Segment> segments = split_by_mark(doc, cls);
        ca.segment_count = segments.size();
        std::optional<RankedSeries> ranked;
        if (segments.empty()) {
            ca.fit_note = "no segments";
        } else {
            const LengthSeries lts = build_lts(segments, cls);
            ca.min_length = ca.max_length = lts.values.front().second;
            for (const auto& [ordinal, length] : lts.values) {
                ca.min_length = std::min(ca.min_length, length);
                ca.max_length = std::max(ca.max_length, length);
                ca.total_length += length;
            }
            ranked = rank_lengths(lts, class_label(report.source_id, cls));
            ca.rank1_length = static_cast<std::size_t>(ranked->items.front().value);

            const FitWindow window =
                effective_window(options.config.class_windows.at(cls), options.fit_min,
                                 options.fit_max, ranked->items.size());
            try {
                ca.power_law = fit_power_law(*ranked, window);
            } catch (const Error& e) {
                append_note(ca.fit_note, e.what());
            }
            if (options.with_stretched) {
                try {
                    ca.stretched = fit_stretched_exponential(*ranked, window);
                } catch (const Error& e) {
                    append_note(ca.fit_note, std::string("stretched: ") + e.what());
                }
            }
            if (options.with_breaks) {
                try {
                    ca.break_estimate = detect_break(*ranked, options.config.break_min_rank);
                } catch (const Error& e) {
                    append_note(ca.fit_note, std::string("break: ") + e.what());
                }
            }
        }
        report.classes.push_back(std::move(ca));
        bundle.segments.push_back(std::move(segments));
        bundle.ranked.push_back(std::move(ranked));
    }

    bundle.tokens = tokenize_words(doc);
    WordAnalysis& words = report.words;
    words.token_count = bundle.tokens.size();
    if (bundle.tokens.empty()) {
        words.fit_note = "no tokens";
    } else {
        const WordFrequencyTable table = build_word_frequency_table(bundle.tokens);
        words.vocabulary = table.entries.size();
        bundle.zipf_ranked = zipf_rank(table, report.source_id + "/zipf");
        const FitWindow window = effective_window(options.config.zipf_window, std::nullopt,
                                                  std::nullopt, words.vocabulary);
        try {
            words.zipf = fit_power_law(*bundle.zipf_ranked, window);
        } catch (const Error& e) {
            append_note(words.fit_note, e.what());
        }
        const std::size_t top = std::min<std::size_t>(5, bundle.zipf_ranked->items.size());
        for (std::size_t i = 0; i < top; ++i) {
            const std::size_t ordinal = bundle.zipf_ranked->items[i].origin_ordinal;
            words.top_words.push_back(uni::encode_utf8(bundle.tokens[ordinal].folded));
        }
    }
    return bundle;
}

AnalysisReport analyze_document(const CleanDocument& doc, const AnalyzeOptions& options) {
    return analyze_bundle(doc, options).report;
}

ordered_json fit_record(const std::string& label, const PowerLawFit& fit) {
    ordered_json j;
    j["label"] = label;
    j["model"] = "power_law";
    ordered_json params;
    params["exponent"] = fit.exponent;
    params["amplitude"] = fit.amplitude;
    j["params"] = params;
    j["window"] = window_json(fit.window);
    j["r_squared"] = fit.r_squared;
    j["n_points"] = fit.n_points;
    return j;
}

ordered_json fit_record(const std::string& label, const StretchedExponentialFit& fit) {
    ordered_json j;
    j["label"] = label;
    j["model"] = "stretched_exponential";
    ordered_json params;
    params["amplitude"] = fit.amplitude;
    params["rate"] = fit.rate;
    params["stretch_exponent"] = fit.stretch_exponent;
    j["params"] = params;
    j["window"] = window_json(fit.window);
    j["residual_sum"] = fit.residual_sum;
    j["n_points"] = fit.n_points;
    return j;
}

ordered_json report_to_json(const AnalysisReport& report) {
    ordered_json j;
    j["source_id"] = report.source_id;

    ordered_json pre = ordered_json::array();
    for (const LogEntry& entry : report.preprocessing) {
        ordered_json je;
        je["transform"] = entry.transform;
        je["count"] = entry.count;
        if (!entry.note.empty()) je["note"] = entry.note;
        pre.push_back(je);
    }
    j["preprocessing"] = pre;

    ordered_json classes = ordered_json::array();
    for (const ClassAnalysis& ca : report.classes) {
        ordered_json jc;
        jc["class"] = std::string(class_name(ca.cls));
        jc["segment_count"] = ca.segment_count;
        jc["mark_count"] = ca.mark_count;
        jc["min_length"] = ca.min_length;
        jc["max_length"] = ca.max_length;
        jc["total_length"] = ca.total_length;
        jc["rank1_length"] = ca.rank1_length;
        const std::string label = class_label(report.source_id, ca.cls);
        jc["power_law"] = ca.power_law ? fit_record(label, *ca.power_law) : ordered_json();
        if (!ca.fit_note.empty()) jc["fit_note"] = ca.fit_note;
        if (ca.stretched) jc["stretched"] = fit_record(label, *ca.stretched);
        if (ca.break_estimate) jc["break"] = break_json(*ca.break_estimate);
        classes.push_back(jc);
    }
    j["classes"] = classes;

    ordered_json jw;
    jw["token_count"] = report.words.token_count;
    jw["vocabulary"] = report.words.vocabulary;
    jw["zipf"] = report.words.zipf
                     ? fit_record(report.source_id + "/zipf", *report.words.zipf)
                     : ordered_json();
    if (!report.words.fit_note.empty()) jw["fit_note"] = report.words.fit_note;
    jw["top_words"] = report.words.top_words;
    j["words"] = jw;
    return j;
}

void print_report_table(std::ostream& out, const AnalysisReport& report) {
    out << "source: " << report.source_id << '\n';
    NormalizationLog log;
    log.entries = report.preprocessing;
    out << "preprocessing: " << log.summary() << '\n';

    out << std::left << std::setw(10) << "class" << std::right << std::setw(10) << "segments"
        << std::setw(9) << "marks" << std::setw(10) << "max_len" << std::setw(12) << "total_len"
        << std::setw(10) << "eta" << std::setw(9) << "R2" << '\n';
    for (const ClassAnalysis& ca : report.classes) {
        out << std::left << std::setw(10) << class_name(ca.cls) << std::right << std::setw(10)
            << ca.segment_count << std::setw(9) << ca.mark_count << std::setw(10)
            << ca.max_length << std::setw(12) << ca.total_length;
        if (ca.power_law) {
            out << std::setw(10) << std::fixed << std::setprecision(3) << ca.power_law->exponent
                << std::setw(9) << ca.power_law->r_squared;
            out.unsetf(std::ios::fixed);
            out << std::setprecision(6);
        } else {
            out << std::setw(10) << "-" << std::setw(9) << "-";
        }
        out << '\n';
    }
    for (const ClassAnalysis& ca : report.classes) {
        if (!ca.fit_note.empty())
            out << "note [" << class_name(ca.cls) << "]: " << ca.fit_note << '\n';
        if (ca.stretched) {
            const auto& s = *ca.stretched;
            out << "stretched [" << class_name(ca.cls) << "]: amplitude=" << s.amplitude
                << " rate=" << s.rate << " stretch=" << s.stretch_exponent
                << " residual=" << s.residual_sum << '\n';
        }
        if (ca.break_estimate) {
            const auto& b = *ca.break_estimate;
            out << "break [" << class_name(ca.cls) << "]: rank=" << b.break_rank
                << " length=" << b.break_length << " slope " << b.slope_before << " -> "
                << b.slope_after << (b.material ? " (material)" : " (no material break)")
                << '\n';
        }
    }

    out << "words: tokens=" << report.words.token_count
        << " vocabulary=" << report.words.vocabulary;
    if (report.words.zipf)
        out << " zeta=" << std::fixed << std::setprecision(3) << report.words.zipf->exponent
            << " R2=" << report.words.zipf->r_squared;
    out.unsetf(std::ios::fixed);
    out << std::setprecision(6);
    if (!report.words.fit_note.empty()) out << " note: " << report.words.fit_note;
    if (!report.words.top_words.empty()) {
        out << " top:";
        for (const auto& w : report.words.top_words) out << ' ' << w;
    }
    out << '\n';
}

AnalysisReport run_analyze(const fs::path& input, const fs::path& out_dir,
                           const AnalyzeOptions& options, std::ostream& status) {
    const CleanDocument doc = prepare_document(input, options.config);
    const AnalysisBundle bundle = analyze_bundle(doc, options);

    const fs::path dir = out_dir / bundle.report.source_id;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("write_output", "cannot create " + dir.string() + ": " + ec.message());

    OutputTracker tracker;
    for (std::size_t i = 0; i < bundle.report.classes.size(); ++i) {
        const ClassAnalysis& ca = bundle.report.classes[i];
        const std::string name(class_name(ca.cls));
        if (bundle.ranked[i]) {
            tracker.write(dir / (name + ".csv"),
                          [&](std::ostream& o) { write_ranks_csv(o, *bundle.ranked[i]); });
            tracker.write(dir / (name + ".loglog.dat"),
                          [&](std::ostream& o) { write_loglog_data(o, *bundle.ranked[i]); });
        }
        if (options.dump_segments)
            tracker.write(dir / (name + ".segments.csv"),
                          [&](std::ostream& o) { write_segments_csv(o, bundle.segments[i]); });
        if (options.dump_series && !bundle.segments[i].empty()) {
            SeriesValues values;
            values.reserve(bundle.segments[i].size());
            for (const Segment& seg : bundle.segments[i])
                values.emplace_back(seg.ordinal, seg.length_chars);
            tracker.write(dir / (name + ".lts.csv"), [&](std::ostream& o) {
                write_series_csv(o, bundle.report.source_id, name + "/lts", values);
            });
        }
    }

    if (bundle.zipf_ranked) {
        tracker.write(dir / "zipf.csv",
                      [&](std::ostream& o) { write_ranks_csv(o, *bundle.zipf_ranked); });
        tracker.write(dir / "zipf.loglog.dat",
                      [&](std::ostream& o) { write_loglog_data(o, *bundle.zipf_ranked); });
        if (options.dump_series) {
            const WordFrequencyTable table = build_word_frequency_table(bundle.tokens);
            const FrequencySeries fts = build_fts(bundle.tokens, table);
            tracker.write(dir / "fts.csv", [&](std::ostream& o) {
                write_series_csv(o, bundle.report.source_id, "fts", fts.values);
            });
        }
    }

    tracker.write(dir / "marks.csv",
                  [&](std::ostream& o) { write_marks_csv(o, count_marks(doc)); });
    tracker.write(dir / "report.json", [&](std::ostream& o) {
        o << report_to_json(bundle.report).dump(2) << '\n';
    });

    tracker.commit();
    print_report_table(status, bundle.report);
    return bundle.report;
}

void run_compare(const std::vector<fs::path>& inputs, const fs::path& out_dir,
                 const AnalyzeOptions& options, std::ostream& status) {
    if (inputs.size() < 2) throw Error("compare", "need at least 2 input files");

    std::vector<AnalysisReport> reports;
    reports.reserve(inputs.size());
    for (const fs::path& input : inputs) {
        std::ostringstream sink; // per-file tables are not part of the comparison output
        reports.push_back(run_analyze(input, out_dir, options, sink));
    }

    const auto& classes = reports.front().classes;
    auto exponent_of = [](const AnalysisReport& r, std::size_t i) -> std::optional<double> {
        if (r.classes[i].power_law) return r.classes[i].power_law->exponent;
        return std::nullopt;
    };

    status << std::left << std::setw(11) << "class";
    for (const auto& r : reports) status << std::right << std::setw(14) << r.source_id;
    status << '\n';
    auto row = [&](const char* what, const std::function<std::string(std::size_t, std::size_t)>& cell) {
        for (std::size_t i = 0; i < classes.size(); ++i) {
            status << std::left << std::setw(11)
                   << (std::string(class_name(classes[i].cls)) + " " + what);
            for (std::size_t k = 0; k < reports.size(); ++k)
                status << std::right << std::setw(14) << cell(i, k);
            status << '\n';
        }
    };
    row("eta", [&](std::size_t i, std::size_t k) {
        const auto e = exponent_of(reports[k], i);
        if (!e) return std::string("-");
        std::ostringstream s;
        s << std::fixed << std::setprecision(4) << *e;
        return s.str();
    });
    row("rank1", [&](std::size_t i, std::size_t k) {
        return std::to_string(reports[k].classes[i].rank1_length);
    });
    row("marks", [&](std::size_t i, std::size_t k) {
        return std::to_string(reports[k].classes[i].mark_count);
    });

    ordered_json jc;
    ordered_json sources = ordered_json::array();
    for (const auto& r : reports) sources.push_back(r.source_id);
    jc["sources"] = sources;
    ordered_json jclasses = ordered_json::array();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        ordered_json jrow;
        jrow["class"] = std::string(class_name(classes[i].cls));
        ordered_json je, jr, jm, jd;
        for (std::size_t k = 0; k < reports.size(); ++k) {
            const auto e = exponent_of(reports[k], i);
            je[reports[k].source_id] = e ? ordered_json(*e) : ordered_json();
            jr[reports[k].source_id] = reports[k].classes[i].rank1_length;
            jm[reports[k].source_id] = reports[k].classes[i].mark_count;
        }
        for (std::size_t a = 0; a < reports.size(); ++a) {
            for (std::size_t b = a + 1; b < reports.size(); ++b) {
                const auto ea = exponent_of(reports[a], i);
                const auto eb = exponent_of(reports[b], i);
                const std::string key = reports[a].source_id + "-" + reports[b].source_id;
                jd[key] = (ea && eb) ? ordered_json(*ea - *eb) : ordered_json();
            }
        }
        jrow["exponent"] = je;
        jrow["rank1_length"] = jr;
        jrow["mark_count"] = jm;
        jrow["exponent_diff"] = jd;
        jclasses.push_back(jrow);
    }
    jc["classes"] = jclasses;

    status << "pairwise exponent differences:\n";
    for (std::size_t i = 0; i < classes.size(); ++i) {
        status << "  " << class_name(classes[i].cls) << ":";
        for (std::size_t a = 0; a < reports.size(); ++a) {
            for (std::size_t b = a + 1; b < reports.size(); ++b) {
                const auto ea = exponent_of(reports[a], i);
                const auto eb = exponent_of(reports[b], i);
                status << ' ' << reports[a].source_id << '-' << reports[b].source_id << '=';
                if (ea && eb)
                    status << std::fixed << std::setprecision(4) << (*ea - *eb);
                else
                    status << '-';
            }
        }
        status << '\n';
    }
    status.unsetf(std::ios::fixed);
    status << std::setprecision(6);

    std::error_code ec;
    fs::create_directories(out_dir, ec);
    OutputTracker tracker;
    tracker.write(out_dir / "comparison.json",
                  [&](std::ostream& o) { o << jc.dump(2) << '\n'; });
    tracker.commit();
}

ZipfResult run_zipf(const fs::path& input, const fs::path& out_dir,
                    const AnalyzeOptions& options, std::ostream& status) {
    const CleanDocument doc = prepare_document(input, options.config);
    const std::vector<Token> tokens = tokenize_words(doc);
    const WordFrequencyTable table = build_word_frequency_table(tokens);
    const RankedSeries ranked = zipf_rank(table, doc.source_id + "/zipf");

    FitWindow window = options.config.zipf_window;
    if (options.fit_min) window.r_min = *options.fit_min;
    if (options.fit_max) window.r_max = *options.fit_max;
    window.r_max = std::min(window.r_max, std::max(ranked.items.size(), window.r_min + 2));

    ZipfResult result;
    result.source_id = doc.source_id;
    result.token_count = tokens.size();
    result.vocabulary = table.entries.size();
    result.fit = fit_power_law(ranked, window);
    const std::size_t top = std::min<std::size_t>(5, ranked.items.size());
    for (std::size_t i = 0; i < top; ++i)
        result.top_words.push_back(
            uni::encode_utf8(tokens[ranked.items[i].origin_ordinal].folded));

    const fs::path dir = out_dir / result.source_id;
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("write_output", "cannot create " + dir.string() + ": " + ec.message());

    OutputTracker tracker;
    tracker.write(dir / "zipf.csv", [&](std::ostream& o) { write_ranks_csv(o, ranked); });
    tracker.write(dir / "zipf.loglog.dat",
                  [&](std::ostream& o) { write_loglog_data(o, ranked); });
    tracker.write(dir / "zipf_fit.json", [&](std::ostream& o) {
        ordered_json j;
        j["source_id"] = result.source_id;
        j["token_count"] = result.token_count;
        j["vocabulary"] = result.vocabulary;
        j["fit"] = fit_record(result.source_id + "/zipf", result.fit);
        j["top_words"] = result.top_words;
        o << j.dump(2) << '\n';
    });
    tracker.commit();

    status << "source: " << result.source_id << " tokens=" << result.token_count
           << " vocabulary=" << result.vocabulary << " zeta=" << std::fixed
           << std::setprecision(3) << result.fit.exponent << " R2=" << result.fit.r_squared
           << " window=[" << result.fit.window.r_min << ", " << result.fit.window.r_max << "]";
    status.unsetf(std::ios::fixed);
    status << std::setprecision(6);
    if (!result.top_words.empty()) {
        status << " top:";
        for (const auto& w : result.top_words) status << ' ' << w;
    }
    status << '\n';
    return result;
}

} // namespace punkt
