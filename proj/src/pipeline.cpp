#include <aspectstat/pipeline.hpp>
#include <aspectstat/entropy.hpp>
#include <aspectstat/granger.hpp>
#include <aspectstat/labeler.hpp>
#include <aspectstat/pearson.hpp>
#include <aspectstat/report.hpp>

#include "csv.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <set>
#include <thread>

namespace aspectstat {

namespace fs = std::filesystem;

namespace {

std::string reason(const Error& e) {
    // An empty alignment means there was nothing to compute on.
    if (e.code() == ErrorCode::EmptyAlignment) return std::string(to_string(ErrorCode::InsufficientData));
    return std::string(to_string(e.code()));
}

std::vector<double> shift_forward(const std::vector<double>& v, std::size_t by) {
    std::vector<double> out(v.size(), std::numeric_limits<double>::quiet_NaN());
    for (std::size_t i = by; i < v.size(); ++i) out[i] = v[i - by];
    return out;
}

}  // namespace

DependenceCell compute_cell(const std::string& aspect, ScoreKind kind, const std::vector<AspectDayCount>& counts,
                            const PriceSeries& prices, const TradingCalendar& cal, const PipelineConfig& cfg) {
    DependenceCell cell;
    cell.aspect = aspect;
    cell.kind = kind;
    cell.ticker = prices.ticker();

    SentimentSeries series = score_series(counts, aspect, kind);
    if (cfg.absent_as_zero && !is_normalized(kind)) series = fill_absent_with_zero(series, cal);

    std::optional<AlignedPairs> pairs;
    try {
        pairs = align_lagged(series, prices, cal, cfg.lag);
        cell.n = pairs->n();
    } catch (const Error& e) {
        cell.r_reason = reason(e);
        cell.u_reason = reason(e);
    }

    if (pairs) {
        try {
            const auto corr = correlate(*pairs, cfg.pearson_threshold);
            cell.r = corr.r;
            cell.r_significant = corr.significant;
        } catch (const Error& e) {
            cell.r_reason = reason(e);
        }
        try {
            const auto uc = uncertainty_coefficient(*pairs, cfg.entropy_k, cfg.entropy_min_denominator);
            cell.h_y = uc.h_y;
            cell.h_y_given_x = uc.h_y_given_x;
            cell.mutual_information = uc.mutual_information;
            if (std::isfinite(uc.u)) cell.u = uc.u;
            cell.u_valid = uc.valid;
            if (!uc.valid) cell.u_reason = kReasonDenominatorNearZero;
        } catch (const Error& e) {
            cell.u_reason = reason(e);
        }
    }

    // The Granger lag polynomial supplies the sentiment lag: its first term
    // is the sentiment `cfg.lag` trading days before the price.
    std::vector<double> x_dense = dense_on_calendar(series.values(), cal);
    std::vector<double> y_dense = dense_on_calendar(prices.values(), cal);
    std::vector<double> cause = shift_forward(x_dense, static_cast<std::size_t>(cfg.lag - 1));
    if (cfg.granger_difference) {
        cause = first_difference(cause);
        x_dense = first_difference(x_dense);
        y_dense = first_difference(y_dense);
    }
    try {
        const auto g = granger_causes(cause, y_dense, cfg.granger_lag, cfg.granger_alpha);
        cell.granger_f = g.f_stat;
        cell.granger_p = g.p_value;
        cell.granger_causal = g.causal;
        cell.granger_perfect_fit = g.perfect_fit;
        cell.granger_n = g.n_eff;
    } catch (const Error& e) {
        cell.granger_reason = reason(e);
    }
    if (cfg.granger_reverse) {
        try {
            const auto g = granger_causes(y_dense, x_dense, cfg.granger_lag, cfg.granger_alpha);
            cell.granger_rev_f = g.f_stat;
            cell.granger_rev_p = g.p_value;
            cell.granger_rev_causal = g.causal;
        } catch (const Error& e) {
            cell.granger_rev_reason = reason(e);
        }
    }
    return cell;
}

std::vector<DependenceCell> analyze(const std::vector<std::string>& aspects,
                                    const std::vector<AspectDayCount>& counts,
                                    const std::vector<PriceSeries>& prices, const TradingCalendar& cal,
                                    const PipelineConfig& cfg) {
    struct Task {
        const std::string* aspect;
        ScoreKind kind;
        const PriceSeries* prices;
    };
    std::vector<Task> tasks;
    for (const auto& a : aspects) {
        for (ScoreKind k : kAllScoreKinds) {
            for (const auto& p : prices) tasks.push_back({&a, k, &p});
        }
    }

    std::vector<DependenceCell> cells(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            cells[i] = compute_cell(*tasks[i].aspect, tasks[i].kind, counts, *tasks[i].prices, cal, cfg);
        }
    };
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, tasks.size())));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return cells;
}

AspectLexicon resolve_aspect_lexicon(const PipelineConfig& cfg) {
    return cfg.aspects ? load_aspect_lexicon(*cfg.aspects) : default_aspect_lexicon();
}

PolarityLexicon resolve_polarity_lexicon(const PipelineConfig& cfg) {
    if (cfg.positive_terms.has_value() != cfg.negative_terms.has_value()) {
        throw Error(ErrorCode::ConfigError, "input.positive_terms and input.negative_terms must be set together");
    }
    if (cfg.positive_terms) return load_polarity_lexicon(*cfg.positive_terms, *cfg.negative_terms);
    return default_polarity_lexicon();
}

std::vector<LabeledMention> label_stage(const PipelineConfig& cfg, Warnings& warnings) {
    if (cfg.labels) return parse_labeled(*cfg.labels);
    if (!cfg.tweets) throw Error(ErrorCode::ConfigError, "input.tweets or input.labels is required");
    const auto lexicon = resolve_aspect_lexicon(cfg);
    const LexiconWindowLabeler labeler(resolve_polarity_lexicon(cfg), cfg.label_window);
    TweetParseStats stats;
    const auto tweets = parse_tweets(*cfg.tweets, cfg.max_malformed_fraction, &stats, &warnings);
    if (stats.other_language > 0) {
        warnings.push_back("dropped " + std::to_string(stats.other_language) + " non-English tweet(s)");
    }
    return label_corpus(tweets, labeler, lexicon);
}

std::vector<PriceSeries> load_prices(const PipelineConfig& cfg, Warnings& warnings) {
    std::vector<PriceSeries> out;
    for (const auto& tf : cfg.prices) out.push_back(parse_prices(tf.path, tf.ticker, &warnings));
    return out;
}

TradingCalendar resolve_calendar(const PipelineConfig& cfg, const std::vector<PriceSeries>& prices) {
    if (!cfg.calendar) return calendar_from_prices(prices);
    auto cal = load_calendar(*cfg.calendar);
    for (const auto& p : prices) {
        for (const auto& [date, v] : p.values()) {
            if (!cal.contains(date)) {
                throw Error(ErrorCode::NotTradingDay,
                            p.ticker() + " has a price on " + date.to_string() + ", which the calendar lacks");
            }
        }
    }
    return cal;
}

std::vector<DependenceCell> analyze_stage(const std::vector<AspectDayCount>& counts, const PipelineConfig& cfg,
                                          Warnings& warnings) {
    const auto prices = load_prices(cfg, warnings);
    const auto cal = resolve_calendar(cfg, prices);
    const auto lexicon = resolve_aspect_lexicon(cfg);
    const auto trading = drop_non_trading_days(counts, cal);
    if (trading.size() < counts.size()) {
        warnings.push_back("dropped " + std::to_string(counts.size() - trading.size()) +
                           " aspect-day record(s) dated on non-trading days");
    }
    std::uint64_t mentions = 0;
    for (const auto& c : trading) {
        if (lexicon.contains(c.aspect)) mentions += c.total();
    }
    if (mentions == 0) warnings.push_back("no aspect mentions on trading days; every cell will be empty");
    const auto aspects = top_aspects(counts, lexicon, cfg.top_n);
    return analyze(aspects, trading, prices, cal, cfg);
}

PipelineOutcome run_pipeline(const PipelineConfig& cfg) {
    validate(cfg, true);
    PipelineOutcome outcome;
    std::error_code ec;
    fs::create_directories(cfg.output_dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create " + cfg.output_dir.string() + ": " + ec.message());

    auto write = [&](const std::string& name, auto&& body) {
        const auto path = cfg.output_dir / name;
        auto out = detail::open_output(path);
        body(out);
        if (!out) throw Error(ErrorCode::IoError, "failed writing " + path.string());
        outcome.artifacts.push_back(path);
    };

    const auto labels = label_stage(cfg, outcome.warnings);
    write("labels.csv", [&](std::ostream& os) { write_labeled(os, labels); });
    const auto counts = aggregate_daily(labels);
    write("counts.csv", [&](std::ostream& os) { write_counts(os, counts); });
    write("scores.csv", [&](std::ostream& os) { write_scores(os, counts); });

    outcome.cells = analyze_stage(counts, cfg, outcome.warnings);
    write("cells.csv", [&](std::ostream& os) { write_cells(os, outcome.cells); });
    for (auto& p : emit_reports(outcome.cells, cfg.output_dir)) outcome.artifacts.push_back(std::move(p));

    const auto manifest = cfg.output_dir / "run_manifest.json";
    write_manifest(manifest, cfg, outcome.warnings);
    outcome.artifacts.push_back(manifest);
    return outcome;
}

}  // namespace aspectstat
