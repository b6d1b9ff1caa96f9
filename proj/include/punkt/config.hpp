// Toolkit configuration: preprocessing toggles, marker and heading patterns,
// and per-class fit windows. Values come from built-in defaults, then an
// optional key=value config file, then CLI flags (flags win).

#ifndef PUNKT_CONFIG_HPP
#define PUNKT_CONFIG_HPP

#include "punkt/corpus.hpp"
#include "punkt/fitting.hpp"
#include "punkt/segmentation.hpp"

#include <filesystem>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace punkt {

struct Config {
    bool strip_boilerplate = true;
    bool strip_heads = true;
    NormalizeOptions normalize;
    MarkerConfig markers;
    std::vector<std::string> heading_patterns;
    std::map<MarkClass, FitWindow> class_windows;
    FitWindow zipf_window{10, 1000};
    std::size_t break_min_rank = 5;
};

Config default_config();

// Parses `key = value` lines ('#' starts a comment). The first
// heading_pattern key replaces the defaults; repeated keys append.
// Throws punkt::Error("config", ...) on unreadable files or bad keys.
void apply_config_file(Config& config, const std::filesystem::path& path);

// Prints the configuration in the config-file format, so the output of
// --show-config is itself a loadable config file.
void print_config(std::ostream& out, const Config& config);

} // namespace punkt

#endif
