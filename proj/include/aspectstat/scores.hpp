#pragma once

#include <aspectstat/core.hpp>
#include <aspectstat/ingest.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace aspectstat {

/// Label counts for one aspect on one day. The day's total (pos + neg + neu)
/// is the denominator for normalised scores.
struct AspectDayCount {
    std::string aspect;
    CalendarDate date;
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
    std::uint64_t neu = 0;

    std::uint64_t total() const { return pos + neg + neu; }
    friend bool operator==(const AspectDayCount&, const AspectDayCount&) = default;
};

/// One record per (aspect, date) that has at least one label, sorted by
/// aspect then date.
std::vector<AspectDayCount> aggregate_daily(const std::vector<LabeledMention>& labels);

/// Builds the daily series for one aspect and kind. Dates without a count
/// record are absent. A zero total leaves normalised kinds missing on that
/// date.
SentimentSeries score_series(const std::vector<AspectDayCount>& counts, const std::string& aspect, ScoreKind kind);

/// Imputes 0 on every calendar day without a value. Only valid for the
/// absolute kinds; throws DomainError for normalised ones.
SentimentSeries fill_absent_with_zero(const SentimentSeries& series, const TradingCalendar& cal);

/// Keeps only records dated on a trading day.
std::vector<AspectDayCount> drop_non_trading_days(const std::vector<AspectDayCount>& counts,
                                                  const TradingCalendar& cal);

/// The `n` aspects with the most labels overall, ties broken
/// lexicographically. Aspects with no labels still qualify (count 0) so the
/// result always has min(n, lexicon size) entries. Returned in lexicon order.
std::vector<std::string> top_aspects(const std::vector<AspectDayCount>& counts, const AspectLexicon& lexicon,
                                     std::size_t n);

/// `aspect,date,positive,negative,neutral`
void write_counts(std::ostream& out, const std::vector<AspectDayCount>& counts);
std::vector<AspectDayCount> parse_counts(std::istream& in);
std::vector<AspectDayCount> parse_counts(const std::filesystem::path& path);

/// Audit export `aspect,date,kind,value` for every aspect in `counts` and all
/// four kinds.
void write_scores(std::ostream& out, const std::vector<AspectDayCount>& counts);

}  // namespace aspectstat
