// punkt - punctuation statistics for plain-text corpora.
//
// Subcommands: analyze (full per-class segmentation, ranking and fitting
// report), compare (side-by-side report over several files), zipf (word
// frequency-rank analysis only).

#include "punkt/report.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

struct CommonOpts {
    std::string config_file;
    std::vector<std::string> heading_patterns;
    std::string start_marker;
    std::string end_marker;
    bool no_strip_heads = false;
    bool no_boilerplate = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_file,
                    "config file (key = value); defaults to $PUNKT_CONFIG when set");
    cmd->add_option("--heading-pattern", opts.heading_patterns,
                    "chapter heading line pattern (regex); repeatable, replaces defaults");
    cmd->add_option("--start-marker", opts.start_marker, "boilerplate start marker pattern");
    cmd->add_option("--end-marker", opts.end_marker, "boilerplate end marker pattern");
    cmd->add_flag("--no-strip-heads", opts.no_strip_heads, "keep chapter heading lines");
    cmd->add_flag("--no-boilerplate", opts.no_boilerplate, "skip boilerplate stripping");
}

punkt::Config build_config(const CommonOpts& opts) {
    punkt::Config cfg = punkt::default_config();
    std::string file = opts.config_file;
    if (file.empty()) {
        if (const char* env = std::getenv("PUNKT_CONFIG")) file = env;
    }
    if (!file.empty()) punkt::apply_config_file(cfg, file);
    if (!opts.heading_patterns.empty()) cfg.heading_patterns = opts.heading_patterns;
    if (!opts.start_marker.empty()) cfg.markers.start_pattern = opts.start_marker;
    if (!opts.end_marker.empty()) cfg.markers.end_pattern = opts.end_marker;
    if (opts.no_strip_heads) cfg.strip_heads = false;
    if (opts.no_boilerplate) cfg.strip_boilerplate = false;
    return cfg;
}

std::vector<punkt::MarkClass> parse_classes(const std::vector<std::string>& names) {
    std::vector<punkt::MarkClass> classes;
    for (const std::string& name : names) {
        if (name == "all") return {};
        const auto cls = punkt::class_from_name(name);
        if (!cls)
            throw punkt::Error("cli", "unknown mark class '" + name +
                                          "' (expected dot|comma|colon|semicolon|exclam|"
                                          "question|unit|all)");
        classes.push_back(*cls);
    }
    return classes;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"punkt - punctuation statistics for plain-text corpora"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string input;
    std::vector<std::string> inputs;
    std::string out_dir = "punkt_out";
    std::vector<std::string> class_names;
    unsigned long long fit_min = 0, fit_max = 0;
    bool stretched = false, breaks = false, show_config = false;
    bool dump_segments = false, dump_series = false;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze one text file");
    analyze->add_option("file", input, "UTF-8 plain-text input");
    analyze->add_option("--out", out_dir, "output directory")->capture_default_str();
    analyze->add_option("--class", class_names, "mark class to analyze (repeatable, default all)");
    analyze->add_option("--fit-min", fit_min, "override fit window minimum rank");
    analyze->add_option("--fit-max", fit_max, "override fit window maximum rank");
    analyze->add_flag("--stretched", stretched, "also fit a stretched exponential per class");
    analyze->add_flag("--breaks", breaks, "also locate the large-rank slope break per class");
    analyze->add_flag("--dump-segments", dump_segments, "write per-class segment CSVs");
    analyze->add_flag("--dump-series", dump_series, "write length/frequency series CSVs");
    analyze->add_flag("--show-config", show_config, "print the effective configuration and exit");
    add_common(analyze, common);

    CLI::App* compare = app.add_subcommand("compare", "analyze several files side by side");
    compare->add_option("files", inputs, "UTF-8 plain-text inputs")->expected(-1);
    compare->add_option("--out", out_dir, "output directory")->capture_default_str();
    compare->add_option("--class", class_names, "mark class to analyze (repeatable, default all)");
    compare->add_option("--fit-min", fit_min, "override fit window minimum rank");
    compare->add_option("--fit-max", fit_max, "override fit window maximum rank");
    compare->add_flag("--stretched", stretched, "also fit a stretched exponential per class");
    compare->add_flag("--breaks", breaks, "also locate the large-rank slope break per class");
    add_common(compare, common);

    CLI::App* zipf = app.add_subcommand("zipf", "word frequency-rank analysis of one file");
    zipf->add_option("file", input, "UTF-8 plain-text input");
    zipf->add_option("--out", out_dir, "output directory")->capture_default_str();
    zipf->add_option("--fit-min", fit_min, "override Zipf fit window minimum rank");
    zipf->add_option("--fit-max", fit_max, "override Zipf fit window maximum rank");
    add_common(zipf, common);

    CLI11_PARSE(app, argc, argv);

    try {
        punkt::AnalyzeOptions options;
        options.config = build_config(common);
        options.classes = parse_classes(class_names);
        options.with_stretched = stretched;
        options.with_breaks = breaks;
        options.dump_segments = dump_segments;
        options.dump_series = dump_series;
        if (fit_min > 0) options.fit_min = fit_min;
        if (fit_max > 0) options.fit_max = fit_max;

        if (analyze->parsed()) {
            if (show_config) {
                punkt::print_config(std::cout, options.config);
                return 0;
            }
            if (input.empty()) throw punkt::Error("cli", "no input file given");
            punkt::run_analyze(input, out_dir, options, std::cout);
        } else if (compare->parsed()) {
            punkt::run_compare({inputs.begin(), inputs.end()}, out_dir, options, std::cout);
        } else if (zipf->parsed()) {
            if (input.empty()) throw punkt::Error("cli", "no input file given");
            punkt::run_zipf(input, out_dir, options, std::cout);
        }
        return 0;
    } catch (const punkt::Error& e) {
        std::cerr << "punkt: " << e.stage() << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "punkt: " << e.what() << '\n';
        return 1;
    }
}
