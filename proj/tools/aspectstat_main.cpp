// aspectstat: aspect sentiment vs. stock price dependence statistics.
//
// Stages compose through files in the output directory:
//   label   -> labels.csv
//   score   -> counts.csv, scores.csv
//   analyze -> cells.csv
//   report  -> heatmap_*.csv, granger.csv
// `run` performs all four and adds run_manifest.json.
//
// Exit codes: 0 success (warnings go to stderr), 1 configuration error,
// 2 fatal input error.

#include <aspectstat/config.hpp>
#include <aspectstat/fixture.hpp>
#include <aspectstat/ingest.hpp>
#include <aspectstat/pipeline.hpp>
#include <aspectstat/report.hpp>
#include <aspectstat/scores.hpp>

#include "../src/csv.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace aspectstat;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitInput = 2;

struct CommonOptions {
    std::string config_file;
    std::vector<std::string> overrides;
    std::string output_dir;
};

void add_common(CLI::App* cmd, CommonOptions& common) {
    cmd->add_option("-c,--config", common.config_file, "INI config file (keys listed below)");
    cmd->add_option("--set", common.overrides, "override a config key: section.key=value (repeatable)");
    cmd->add_option("-o,--out-dir", common.output_dir, "output directory (output.dir)");
}

PipelineConfig build_config(const CommonOptions& common) {
    PipelineConfig cfg = common.config_file.empty() ? PipelineConfig{} : load_config(common.config_file);
    for (const auto& o : common.overrides) apply_override(cfg, o);
    if (!common.output_dir.empty()) cfg.output_dir = common.output_dir;
    return cfg;
}

void print_warnings(const Warnings& warnings) {
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
}

fs::path prepare_output(const PipelineConfig& cfg) {
    fs::create_directories(cfg.output_dir);
    return cfg.output_dir;
}

template <typename Body>
void write_file(const fs::path& path, Body&& body) {
    auto out = detail::open_output(path);
    body(out);
    if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
    std::cerr << "wrote " << path.generic_string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aspectstat - aspect sentiment vs. stock price dependence statistics"};
    app.footer(config_help());
    app.require_subcommand(1);

    CommonOptions common;

    auto* keywords = app.add_subcommand("keywords", "count once-per-tweet keyword frequencies (keyword hopping)");
    std::string kw_tweets, kw_out;
    std::optional<std::size_t> kw_min;
    add_common(keywords, common);
    keywords->add_option("--tweets", kw_tweets, "tweet file (input.tweets)");
    keywords->add_option("--min-count", kw_min, "minimum tweet count (keywords.min_count, default 100)");
    keywords->add_option("--out", kw_out, "output CSV (default <out-dir>/keywords.csv)");

    auto* label = app.add_subcommand("label", "label aspect mentions in tweets -> labels.csv");
    add_common(label, common);

    auto* score = app.add_subcommand("score", "aggregate labels into daily scores -> counts.csv, scores.csv");
    std::string score_labels;
    add_common(score, common);
    score->add_option("--labels", score_labels, "labels CSV (default <out-dir>/labels.csv)");

    auto* analyze_cmd = app.add_subcommand("analyze", "correlation, Granger and uncertainty per cell -> cells.csv");
    std::string analyze_counts;
    add_common(analyze_cmd, common);
    analyze_cmd->add_option("--counts", analyze_counts, "counts CSV (default <out-dir>/counts.csv)");

    auto* report = app.add_subcommand("report", "heatmaps and Granger table from cells.csv");
    std::string report_cells;
    add_common(report, common);
    report->add_option("--cells", report_cells, "cells CSV (default <out-dir>/cells.csv)");

    auto* run = app.add_subcommand("run", "all stages plus run_manifest.json");
    add_common(run, common);

    auto* fixture = app.add_subcommand("fixture", "write the synthetic planted-dependence corpus");
    std::string fixture_dir = "fixture";
    std::uint64_t fixture_seed = FixtureOptions{}.seed;
    fixture->add_option("--dir", fixture_dir, "destination directory");
    fixture->add_option("--seed", fixture_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (fixture->parsed()) {
            FixtureOptions opts;
            opts.seed = fixture_seed;
            const auto info = generate_fixture(fixture_dir, opts);
            std::cerr << "fixture written; run with: aspectstat run -c " << info.config.generic_string() << '\n';
            return 0;
        }

        PipelineConfig cfg = build_config(common);

        if (keywords->parsed()) {
            if (!kw_tweets.empty()) cfg.tweets = kw_tweets;
            if (kw_min) cfg.keyword_min_count = *kw_min;
            if (!cfg.tweets) throw Error(ErrorCode::ConfigError, "keywords needs --tweets or input.tweets");
            validate(cfg, false);
            Warnings warnings;
            const auto tweets = parse_tweets(*cfg.tweets, cfg.max_malformed_fraction, nullptr, &warnings);
            print_warnings(warnings);
            const fs::path out = kw_out.empty() ? prepare_output(cfg) / "keywords.csv" : fs::path(kw_out);
            write_file(out, [&](std::ostream& os) {
                os << "keyword,tweet_count\n";
                for (const auto& k : keyword_frequencies(tweets, cfg.keyword_min_count)) {
                    os << detail::csv_escape(k.keyword) << ',' << k.tweet_count << '\n';
                }
            });
            return 0;
        }

        if (label->parsed()) {
            validate(cfg, false);
            Warnings warnings;
            const auto labels = label_stage(cfg, warnings);
            print_warnings(warnings);
            write_file(prepare_output(cfg) / "labels.csv", [&](std::ostream& os) { write_labeled(os, labels); });
            return 0;
        }

        if (score->parsed()) {
            validate(cfg, false);
            const fs::path in = score_labels.empty() ? cfg.output_dir / "labels.csv" : fs::path(score_labels);
            const auto counts = aggregate_daily(parse_labeled(in));
            const auto dir = prepare_output(cfg);
            write_file(dir / "counts.csv", [&](std::ostream& os) { write_counts(os, counts); });
            write_file(dir / "scores.csv", [&](std::ostream& os) { write_scores(os, counts); });
            return 0;
        }

        if (analyze_cmd->parsed()) {
            validate(cfg, false);
            if (cfg.prices.empty()) throw Error(ErrorCode::ConfigError, "[prices] needs at least one ticker");
            const fs::path in = analyze_counts.empty() ? cfg.output_dir / "counts.csv" : fs::path(analyze_counts);
            Warnings warnings;
            const auto cells = analyze_stage(parse_counts(in), cfg, warnings);
            print_warnings(warnings);
            write_file(prepare_output(cfg) / "cells.csv", [&](std::ostream& os) { write_cells(os, cells); });
            return 0;
        }

        if (report->parsed()) {
            const fs::path in = report_cells.empty() ? cfg.output_dir / "cells.csv" : fs::path(report_cells);
            for (const auto& p : emit_reports(parse_cells(in), prepare_output(cfg))) {
                std::cerr << "wrote " << p.generic_string() << '\n';
            }
            return 0;
        }

        if (run->parsed()) {
            const auto outcome = run_pipeline(cfg);
            print_warnings(outcome.warnings);
            std::size_t significant = 0, causal = 0;
            for (const auto& c : outcome.cells) {
                significant += c.r_significant;
                causal += c.granger_causal;
            }
            std::cout << outcome.cells.size() << " cells, " << significant << " with |r| > " << cfg.pearson_threshold
                      << ", " << causal << " Granger-causal at alpha " << cfg.granger_alpha << '\n';
            for (const auto& p : outcome.artifacts) std::cerr << "wrote " << p.generic_string() << '\n';
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ConfigError ? kExitConfig : kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}
