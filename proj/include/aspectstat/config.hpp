#pragma once

#include <aspectstat/entropy.hpp>
#include <aspectstat/granger.hpp>
#include <aspectstat/ingest.hpp>
#include <aspectstat/labeler.hpp>
#include <aspectstat/pearson.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace aspectstat {

struct TickerFile {
    std::string ticker;
    std::filesystem::path path;
};

/// Every knob of the pipeline. Defaults reproduce the reference analysis:
/// one-trading-day lag, |r| > 0.4, Granger at 5% with lag 1, k = 3, top 20
/// aspects.
struct PipelineConfig {
    // [input]
    std::optional<std::filesystem::path> tweets;
    std::optional<std::filesystem::path> labels;  // external labels; skips the labeler
    std::optional<std::filesystem::path> aspects;
    std::optional<std::filesystem::path> positive_terms;
    std::optional<std::filesystem::path> negative_terms;
    std::optional<std::filesystem::path> calendar;  // default: union of price dates
    double max_malformed_fraction = kDefaultMalformedCap;
    // [prices] ticker = path, in column order
    std::vector<TickerFile> prices;
    // [keywords]
    std::size_t keyword_min_count = 100;
    // [label]
    int label_window = kDefaultLabelWindow;
    // [score]
    bool absent_as_zero = false;
    std::size_t top_n = 20;
    // [analyze]
    int lag = 1;
    double pearson_threshold = kDefaultPearsonThreshold;
    double granger_alpha = kDefaultGrangerAlpha;
    int granger_lag = 1;
    bool granger_difference = false;
    bool granger_reverse = false;
    int entropy_k = kDefaultEntropyK;
    double entropy_min_denominator = kMinEntropyDenominator;
    unsigned threads = 0;  // 0 = hardware concurrency
    // [output]
    std::filesystem::path output_dir = "out";
    // [run]
    std::uint64_t seed = 20221003;
};

/// Reads an INI file (sections and keys as documented by config_help()).
/// Relative paths are resolved against the file's directory. Unknown
/// sections or keys are a ConfigError.
PipelineConfig load_config(const std::filesystem::path& path);

/// Applies one `section.key=value` override, e.g. `analyze.lag=2` or
/// `prices.NEE=nee.csv`. Paths are taken relative to the working directory.
void apply_override(PipelineConfig& cfg, const std::string& assignment);

/// Checks numeric ranges. With `need_inputs`, also requires tweets or labels
/// and at least one price file, and that every referenced file exists.
/// Throws ConfigError naming the offending key or path.
void validate(const PipelineConfig& cfg, bool need_inputs = true);

/// Human-readable list of every config key with its default.
std::string config_help();

/// Ordered key/value echo of the configuration, used in the run manifest.
std::vector<std::pair<std::string, std::string>> config_echo(const PipelineConfig& cfg);

}  // namespace aspectstat
