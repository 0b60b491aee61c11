#pragma once

#include <aspectstat/config.hpp>
#include <aspectstat/core.hpp>
#include <aspectstat/ingest.hpp>
#include <aspectstat/scores.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace aspectstat {

/// All statistics for one (aspect, kind, ticker). A statistic that could not
/// be computed is empty and carries a reason code (an ErrorCode name, or
/// DenominatorNearZero for an unreliable u).
struct DependenceCell {
    std::string aspect;
    ScoreKind kind = ScoreKind::AbsPositive;
    std::string ticker;
    std::size_t n = 0;  // lagged pairs

    std::optional<double> r;
    bool r_significant = false;
    std::string r_reason;

    std::optional<double> granger_f;
    std::optional<double> granger_p;
    bool granger_causal = false;
    bool granger_perfect_fit = false;
    std::size_t granger_n = 0;
    std::string granger_reason;

    // Price -> sentiment direction, only when requested.
    std::optional<double> granger_rev_f;
    std::optional<double> granger_rev_p;
    bool granger_rev_causal = false;
    std::string granger_rev_reason;

    std::optional<double> u;
    bool u_valid = false;
    std::optional<double> h_y;
    std::optional<double> h_y_given_x;
    std::optional<double> mutual_information;
    std::string u_reason;

    friend bool operator==(const DependenceCell&, const DependenceCell&) = default;
};

inline constexpr const char* kReasonDenominatorNearZero = "DenominatorNearZero";

/// Computes one cell. Never throws for statistical failures; they become
/// reason codes.
DependenceCell compute_cell(const std::string& aspect, ScoreKind kind, const std::vector<AspectDayCount>& counts,
                            const PriceSeries& prices, const TradingCalendar& cal, const PipelineConfig& cfg);

/// Every (aspect x kind x ticker) cell, ordered by aspect (as given), kind
/// (fp, fn, nfp, nfn), then ticker (as given). Cells run on cfg.threads
/// workers; the order does not depend on scheduling.
std::vector<DependenceCell> analyze(const std::vector<std::string>& aspects,
                                    const std::vector<AspectDayCount>& counts,
                                    const std::vector<PriceSeries>& prices, const TradingCalendar& cal,
                                    const PipelineConfig& cfg);

/// Lexicons named in the config, or the bundled defaults.
AspectLexicon resolve_aspect_lexicon(const PipelineConfig& cfg);
PolarityLexicon resolve_polarity_lexicon(const PipelineConfig& cfg);

/// Labels from input.labels when set, otherwise from the tweets through the
/// lexicon-window labeler.
std::vector<LabeledMention> label_stage(const PipelineConfig& cfg, Warnings& warnings);

std::vector<PriceSeries> load_prices(const PipelineConfig& cfg, Warnings& warnings);
TradingCalendar resolve_calendar(const PipelineConfig& cfg, const std::vector<PriceSeries>& prices);

/// Count records restricted to trading days, top-N selection, then analyze().
std::vector<DependenceCell> analyze_stage(const std::vector<AspectDayCount>& counts, const PipelineConfig& cfg,
                                          Warnings& warnings);

struct PipelineOutcome {
    std::vector<DependenceCell> cells;
    Warnings warnings;
    std::vector<std::filesystem::path> artifacts;
};

/// Full run: label (or import), aggregate, score, analyze, report. Writes
/// labels.csv, counts.csv, scores.csv, cells.csv, the eight heatmaps,
/// granger.csv and run_manifest.json into cfg.output_dir.
/// Throws ConfigError for an invalid config; ingest errors propagate.
PipelineOutcome run_pipeline(const PipelineConfig& cfg);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace aspectstat
