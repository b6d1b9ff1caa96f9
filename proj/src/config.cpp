#include "punkt/config.hpp"
#include "punkt/error.hpp"

#include <fstream>

namespace punkt {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw Error("config", "expected a boolean for '" + key + "', got '" + value + "'");
}

FitWindow parse_window(const std::string& value, const std::string& key) {
    const std::size_t colon = value.find(':');
    if (colon == std::string::npos)
        throw Error("config", "expected min:max for '" + key + "', got '" + value + "'");
    try {
        FitWindow w;
        w.r_min = std::stoull(trim(value.substr(0, colon)));
        w.r_max = std::stoull(trim(value.substr(colon + 1)));
        return w;
    } catch (const std::exception&) {
        throw Error("config", "bad window '" + value + "' for '" + key + "'");
    }
}

} // namespace

Config default_config() {
    Config cfg;
    cfg.markers = default_marker_config();
    cfg.heading_patterns = default_heading_patterns();
    cfg.class_windows = {
        {MarkClass::Dot, {5, 500}},         {MarkClass::Comma, {5, 500}},
        {MarkClass::Colon, {5, 50}},        {MarkClass::Semicolon, {5, 50}},
        {MarkClass::Exclamation, {5, 100}}, {MarkClass::Question, {5, 100}},
        {MarkClass::UnitOfThought, {5, 500}},
    };
    return cfg;
}

void apply_config_file(Config& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("config", "cannot open config file: " + path.string());

    bool heading_patterns_reset = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("config", path.string() + ":" + std::to_string(lineno) +
                                      ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "strip_boilerplate") config.strip_boilerplate = parse_bool(value, key);
        else if (key == "strip_heads") config.strip_heads = parse_bool(value, key);
        else if (key == "compose") config.normalize.compose = parse_bool(value, key);
        else if (key == "strip_cr") config.normalize.strip_cr = parse_bool(value, key);
        else if (key == "newline_to_blank") config.normalize.newline_to_blank = parse_bool(value, key);
        else if (key == "collapse_blanks") config.normalize.collapse_blanks = parse_bool(value, key);
        else if (key == "start_marker") config.markers.start_pattern = value;
        else if (key == "end_marker") config.markers.end_pattern = value;
        else if (key == "heading_pattern") {
            if (!heading_patterns_reset) {
                config.heading_patterns.clear();
                heading_patterns_reset = true;
            }
            config.heading_patterns.push_back(value);
        } else if (key == "zipf_window") {
            config.zipf_window = parse_window(value, key);
        } else if (key == "break_min_rank") {
            try {
                config.break_min_rank = std::stoull(value);
            } catch (const std::exception&) {
                throw Error("config", "bad value '" + value + "' for '" + key + "'");
            }
        } else if (key.rfind("window_", 0) == 0) {
            const auto cls = class_from_name(key.substr(7));
            if (!cls) throw Error("config", "unknown mark class in key '" + key + "'");
            config.class_windows[*cls] = parse_window(value, key);
        } else {
            throw Error("config", path.string() + ":" + std::to_string(lineno) +
                                      ": unknown key '" + key + "'");
        }
    }
}

void print_config(std::ostream& out, const Config& config) {
    auto b = [](bool v) { return v ? "true" : "false"; };
    out << "strip_boilerplate = " << b(config.strip_boilerplate) << '\n';
    out << "strip_heads = " << b(config.strip_heads) << '\n';
    out << "compose = " << b(config.normalize.compose) << '\n';
    out << "strip_cr = " << b(config.normalize.strip_cr) << '\n';
    out << "newline_to_blank = " << b(config.normalize.newline_to_blank) << '\n';
    out << "collapse_blanks = " << b(config.normalize.collapse_blanks) << '\n';
    out << "start_marker = " << config.markers.start_pattern << '\n';
    out << "end_marker = " << config.markers.end_pattern << '\n';
    for (const auto& p : config.heading_patterns) out << "heading_pattern = " << p << '\n';
    for (const auto& [cls, window] : config.class_windows)
        out << "window_" << class_name(cls) << " = " << window.r_min << ':' << window.r_max
            << '\n';
    out << "zipf_window = " << config.zipf_window.r_min << ':' << config.zipf_window.r_max
        << '\n';
    out << "break_min_rank = " << config.break_min_rank << '\n';
}

} // namespace punkt
