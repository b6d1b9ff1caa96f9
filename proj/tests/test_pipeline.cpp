#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "punkt/report.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>

using namespace punkt;
namespace fs = std::filesystem;

namespace {

AnalyzeOptions default_options() {
    AnalyzeOptions options;
    options.config = default_config();
    return options;
}

// Deterministic synthetic corpus with a skewed vocabulary and varied
// sentence lengths, big enough for every default fit window.
std::string synthetic_corpus() {
    static const char* words[] = {
        "alpha", "beta",  "gamma", "delta", "epsilon", "zeta",  "theta", "iota",
        "kappa", "lam",   "mu",    "nu",    "xi",      "omi",   "pi",    "rho",
        "sigma", "tau",   "upsi",  "phi",   "chi",     "psi",   "omega", "one",
        "two",   "three", "four",  "five",  "six",     "seven", "eight", "nine",
        "ten",   "red",   "blue",  "green", "gold",    "grey",  "pink",  "teal"};
    constexpr std::size_t kVocab = sizeof(words) / sizeof(words[0]);
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::ostringstream out;
    const char terminators[] = {'.', '.', '.', '!', '?', ';', ':'};
    for (int sentence = 0; sentence < 400; ++sentence) {
        const int len = 2 + static_cast<int>(30.0 * std::pow(uni(rng), 2.5));
        for (int w = 0; w < len; ++w) {
            const auto pick =
                static_cast<std::size_t>(static_cast<double>(kVocab) * std::pow(uni(rng), 3.0));
            out << words[std::min(pick, kVocab - 1)];
            if (w + 1 < len)
                out << (uni(rng) < 0.12 ? ", " : " ");
        }
        out << terminators[sentence % 7] << (sentence % 9 == 8 ? "\n" : " ");
    }
    out << "\n";
    return out.str();
}

} // namespace

TEST_CASE("config file parsing and precedence") {
    test::ScratchDir scratch("config");
    const fs::path file = scratch.path() / "punkt.conf";
    test::write_file(file, "# comment\n"
                           "strip_heads = false\n"
                           "window_dot = 3:200\n"
                           "zipf_window = 8:400\n"
                           "heading_pattern = ^PART .*$\n"
                           "heading_pattern = ^BOOK .*$\n");
    Config cfg = default_config();
    apply_config_file(cfg, file);
    CHECK(!cfg.strip_heads);
    CHECK(cfg.class_windows.at(MarkClass::Dot).r_min == 3);
    CHECK(cfg.class_windows.at(MarkClass::Dot).r_max == 200);
    CHECK(cfg.class_windows.at(MarkClass::Comma).r_max == 500); // untouched default
    CHECK(cfg.zipf_window.r_min == 8);
    REQUIRE(cfg.heading_patterns.size() == 2); // first key replaces the defaults
    CHECK(cfg.heading_patterns[0] == "^PART .*$");

    const fs::path bad = scratch.path() / "bad.conf";
    test::write_file(bad, "no_such_key = 1\n");
    Config cfg2 = default_config();
    CHECK_THROWS_AS(apply_config_file(cfg2, bad), Error);

    // print_config output is itself loadable
    std::ostringstream printed;
    print_config(printed, cfg);
    const fs::path round = scratch.path() / "round.conf";
    test::write_file(round, printed.str());
    Config cfg3 = default_config();
    CHECK_NOTHROW(apply_config_file(cfg3, round));
    CHECK(cfg3.class_windows.at(MarkClass::Dot).r_max == 200);
}

TEST_CASE("prepare_document runs the full cleaning pipeline") {
    test::ScratchDir scratch("prep");
    const fs::path input = scratch.path() / "example.txt";
    test::write_file(input,
                     "The Project Gutenberg eBook of Example\r\n"
                     "*** START OF THE PROJECT GUTENBERG EBOOK EXAMPLE ***\r\n"
                     "CHAPTER I. The Start\r\n"
                     "Alice was here.  She left.\r\n"
                     "\r\n"
                     "CHAPTER II.\r\n"
                     "The end came.\r\n"
                     "*** END OF THE PROJECT GUTENBERG EBOOK EXAMPLE ***\r\n"
                     "donate\r\n");
    const CleanDocument doc = prepare_document(input, default_config());
    CHECK(doc.source_id == "example");
    CHECK(doc.content == U"Alice was here. She left. The end came. ");

    const auto segs = split_by_mark(doc, MarkClass::Dot);
    REQUIRE(segs.size() == 3);
    CHECK(segs[0].length_chars == 14);
    CHECK(segs[1].length_chars == 8);
    CHECK(segs[2].length_chars == 12);

    std::size_t heads_removed = 0;
    for (const auto& entry : doc.normalization_log.entries)
        if (entry.transform == "strip_chapter_heads") heads_removed = entry.count;
    CHECK(heads_removed == 2);
}

TEST_CASE("analyze of a three-word file reports counts without fits") {
    test::ScratchDir scratch("mini");
    const fs::path input = scratch.path() / "mini.txt";
    test::write_file(input, "Hi. Bye. Hi.");
    std::ostringstream sink;
    const AnalysisReport report =
        run_analyze(input, scratch.path() / "out", default_options(), sink);

    const ClassAnalysis* dot = nullptr;
    for (const auto& ca : report.classes)
        if (ca.cls == MarkClass::Dot) dot = &ca;
    REQUIRE(dot != nullptr);
    CHECK(dot->segment_count == 3);
    CHECK(dot->mark_count == 3);
    CHECK(!dot->power_law.has_value());
    CHECK(report.words.token_count == 3);
    CHECK(report.words.vocabulary == 2);
    CHECK(fs::exists(scratch.path() / "out" / "mini" / "report.json"));
    CHECK(fs::exists(scratch.path() / "out" / "mini" / "marks.csv"));
}

TEST_CASE("analyze end to end on a synthetic corpus") {
    test::ScratchDir scratch("synth");
    const fs::path input = scratch.path() / "synth.txt";
    test::write_file(input, synthetic_corpus());

    AnalyzeOptions options = default_options();
    options.with_stretched = true;
    options.with_breaks = true;
    options.dump_segments = true;
    options.dump_series = true;

    std::ostringstream sink;
    const fs::path out = scratch.path() / "out";
    const AnalysisReport report = run_analyze(input, out, options, sink);
    const fs::path dir = out / "synth";

    for (const auto& ca : report.classes) {
        INFO("class ", class_name(ca.cls));
        CHECK(ca.segment_count > 0);
        CHECK(ca.rank1_length == ca.max_length);
        REQUIRE(ca.power_law.has_value());
        CHECK(ca.power_law->exponent > 0.0);
        CHECK(ca.power_law->r_squared > 0.5);
        const std::string name(class_name(ca.cls));
        CHECK(fs::exists(dir / (name + ".csv")));
        CHECK(fs::exists(dir / (name + ".loglog.dat")));
        CHECK(fs::exists(dir / (name + ".segments.csv")));
        CHECK(fs::exists(dir / (name + ".lts.csv")));
    }
    CHECK(report.words.zipf.has_value());
    CHECK(fs::exists(dir / "zipf.csv"));
    CHECK(fs::exists(dir / "fts.csv"));

    SUBCASE("re-fitting from the dumped rank CSV reproduces the exponent") {
        for (const auto& ca : report.classes) {
            REQUIRE(ca.power_law.has_value());
            const std::string name(class_name(ca.cls));
            const RankedSeries reloaded = test::parse_ranks_csv(dir / (name + ".csv"), name);
            const PowerLawFit refit = fit_power_law(reloaded, ca.power_law->window);
            CHECK(std::abs(refit.exponent - ca.power_law->exponent) <= 1e-12);
        }
    }

    SUBCASE("report JSON round-trips through parse and serialize") {
        const std::string dumped = report_to_json(report).dump(2);
        CHECK(nlohmann::ordered_json::parse(dumped).dump(2) == dumped);
        const std::string on_disk = test::read_file(dir / "report.json");
        CHECK(on_disk == dumped + "\n");
    }

    SUBCASE("two runs produce byte-identical outputs") {
        std::ostringstream sink2;
        const fs::path out2 = scratch.path() / "out2";
        run_analyze(input, out2, options, sink2);
        std::size_t compared = 0;
        for (const auto& entry : fs::directory_iterator(dir)) {
            const fs::path other = out2 / "synth" / entry.path().filename();
            REQUIRE(fs::exists(other));
            CHECK(test::read_file(entry.path()) == test::read_file(other));
            ++compared;
        }
        CHECK(compared > 10);
    }
}

TEST_CASE("analyze with a class subset only reports and dumps that class") {
    test::ScratchDir scratch("subset");
    const fs::path input = scratch.path() / "synth.txt";
    test::write_file(input, synthetic_corpus());
    AnalyzeOptions options = default_options();
    options.classes = {MarkClass::Dot, MarkClass::Comma};
    std::ostringstream sink;
    const AnalysisReport report = run_analyze(input, scratch.path() / "out", options, sink);
    REQUIRE(report.classes.size() == 2);
    CHECK(report.classes[0].cls == MarkClass::Dot);
    CHECK(report.classes[1].cls == MarkClass::Comma);
    const fs::path dir = scratch.path() / "out" / "synth";
    CHECK(fs::exists(dir / "dot.csv"));
    CHECK(fs::exists(dir / "comma.csv"));
    CHECK(!fs::exists(dir / "colon.csv"));
}

TEST_CASE("a failed analyze leaves no partial outputs behind") {
    test::ScratchDir scratch("partial");
    const fs::path input = scratch.path() / "synth.txt";
    test::write_file(input, synthetic_corpus());
    const fs::path out = scratch.path() / "out";
    // comma.csv as a directory makes the second class's dump fail after the
    // dot files were already written
    fs::create_directories(out / "synth" / "comma.csv");
    std::ostringstream sink;
    CHECK_THROWS_AS(run_analyze(input, out, default_options(), sink), Error);
    CHECK(!fs::exists(out / "synth" / "dot.csv"));
    CHECK(!fs::exists(out / "synth" / "dot.loglog.dat"));
    CHECK(!fs::exists(out / "synth" / "report.json"));
}

TEST_CASE("compare of a file with itself has all-zero exponent differences") {
    test::ScratchDir scratch("cmp");
    const fs::path input = scratch.path() / "synth.txt";
    test::write_file(input, synthetic_corpus());
    std::ostringstream table;
    run_compare({input, input}, scratch.path() / "out", default_options(), table);
    CHECK(table.str().find("synth") != std::string::npos);

    const auto jc =
        nlohmann::ordered_json::parse(test::read_file(scratch.path() / "out" / "comparison.json"));
    REQUIRE(jc["classes"].is_array());
    CHECK(jc["classes"].size() == 7);
    for (const auto& row : jc["classes"]) {
        for (const auto& [key, diff] : row["exponent_diff"].items()) {
            REQUIRE(!diff.is_null());
            CHECK(diff.get<double>() == 0.0);
        }
    }
}

TEST_CASE("compare requires two inputs and aborts on a bad file") {
    test::ScratchDir scratch("cmp2");
    const fs::path good = scratch.path() / "good.txt";
    test::write_file(good, synthetic_corpus());
    std::ostringstream sink;
    CHECK_THROWS_AS(run_compare({good}, scratch.path() / "out", default_options(), sink), Error);
    CHECK_THROWS_AS(run_compare({good, scratch.path() / "missing.txt"}, scratch.path() / "out",
                                default_options(), sink),
                    Error);
}

TEST_CASE("zipf command on a rich file and on degenerate input") {
    test::ScratchDir scratch("zipf");
    const fs::path input = scratch.path() / "synth.txt";
    test::write_file(input, synthetic_corpus());
    std::ostringstream sink;
    const ZipfResult result = run_zipf(input, scratch.path() / "out", default_options(), sink);
    CHECK(result.vocabulary == 40);
    CHECK(result.fit.exponent > 0.0);
    CHECK(fs::exists(scratch.path() / "out" / "synth" / "zipf.csv"));
    CHECK(fs::exists(scratch.path() / "out" / "synth" / "zipf_fit.json"));

    const fs::path degenerate = scratch.path() / "one.txt";
    test::write_file(degenerate, "word word word word.");
    try {
        run_zipf(degenerate, scratch.path() / "out", default_options(), sink);
        FAIL("expected degenerate zipf to refuse");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("fewer than 3 in-window points") != std::string::npos);
        CHECK(!fs::exists(scratch.path() / "out" / "one" / "zipf.csv"));
    }
}

#ifdef PUNKT_BIN
namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cmd(const std::string& args, const fs::path& scratch) {
    const fs::path capture = scratch / "cmd_output.txt";
    const std::string cmd =
        std::string(PUNKT_BIN) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CmdResult result;
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    result.output = test::read_file(capture);
    return result;
}

} // namespace

TEST_CASE("binary exit discipline and diagnostics") {
    test::ScratchDir scratch("bin");
    const fs::path input = scratch.path() / "synth.txt";
    test::write_file(input, synthetic_corpus());
    const fs::path out = scratch.path() / "out";

    const CmdResult ok = run_cmd("analyze " + input.string() + " --out " + out.string(),
                                 scratch.path());
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("words:") != std::string::npos);

    const CmdResult missing =
        run_cmd("analyze " + (scratch.path() / "nope.txt").string(), scratch.path());
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("load_document") != std::string::npos);

    const fs::path degenerate = scratch.path() / "one.txt";
    test::write_file(degenerate, "word word word word.");
    const CmdResult zipf_bad = run_cmd("zipf " + degenerate.string() + " --out " + out.string(),
                                       scratch.path());
    CHECK(zipf_bad.exit_code == 1);
    CHECK(zipf_bad.output.find("fit_power_law") != std::string::npos);

    const CmdResult show = run_cmd("analyze --show-config", scratch.path());
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("window_dot = 5:500") != std::string::npos);

    const CmdResult bad_class = run_cmd(
        "analyze " + input.string() + " --class nope --out " + out.string(), scratch.path());
    CHECK(bad_class.exit_code == 1);
    CHECK(bad_class.output.find("unknown mark class") != std::string::npos);
}

TEST_CASE("PUNKT_CONFIG names a default config file") {
    test::ScratchDir scratch("env");
    const fs::path conf = scratch.path() / "punkt.conf";
    test::write_file(conf, "window_dot = 2:100\n");
    setenv("PUNKT_CONFIG", conf.string().c_str(), 1);
    const CmdResult show = run_cmd("analyze --show-config", scratch.path());
    unsetenv("PUNKT_CONFIG");
    CHECK(show.exit_code == 0);
    CHECK(show.output.find("window_dot = 2:100") != std::string::npos);
}
#endif
