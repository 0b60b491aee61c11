#pragma once

#include <aspectstat/error.hpp>

#include <array>
#include <chrono>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aspectstat {

/// Gregorian calendar date, interpreted in UTC.
class CalendarDate {
public:
    CalendarDate() = default;
    /// Throws DomainError for dates that do not exist (e.g. 2022-02-30).
    CalendarDate(int year, unsigned month, unsigned day);
    explicit CalendarDate(std::chrono::sys_days days);

    /// Strict `YYYY-MM-DD`.
    static CalendarDate parse(std::string_view text);
    static std::optional<CalendarDate> try_parse(std::string_view text);

    int year() const { return static_cast<int>(ymd_.year()); }
    unsigned month() const { return static_cast<unsigned>(ymd_.month()); }
    unsigned day() const { return static_cast<unsigned>(ymd_.day()); }

    std::chrono::sys_days sys_days() const { return std::chrono::sys_days{ymd_}; }
    std::chrono::weekday weekday() const { return std::chrono::weekday{sys_days()}; }
    CalendarDate plus_days(int n) const { return CalendarDate{sys_days() + std::chrono::days{n}}; }

    std::string to_string() const;

    friend bool operator==(const CalendarDate& a, const CalendarDate& b) { return a.ymd_ == b.ymd_; }
    friend std::strong_ordering operator<=>(const CalendarDate& a, const CalendarDate& b) {
        return a.sys_days().time_since_epoch().count() <=> b.sys_days().time_since_epoch().count();
    }

private:
    std::chrono::year_month_day ymd_{std::chrono::year{1970}, std::chrono::January, std::chrono::day{1}};
};

/// Ordered set of trading days. Strictly increasing and non-empty.
class TradingCalendar {
public:
    /// Sorts and de-duplicates; throws EmptySeries when `days` is empty.
    explicit TradingCalendar(std::vector<CalendarDate> days);

    std::size_t size() const { return days_.size(); }
    const CalendarDate& operator[](std::size_t i) const { return days_[i]; }
    const std::vector<CalendarDate>& days() const { return days_; }

    bool contains(const CalendarDate& d) const { return index_of(d).has_value(); }
    std::optional<std::size_t> index_of(const CalendarDate& d) const;

private:
    std::vector<CalendarDate> days_;
};

enum class PolarityLabel { Positive, Neutral, Negative };

std::string_view to_string(PolarityLabel p);
/// Accepts `positive`, `neutral`, `negative` (case-sensitive).
std::optional<PolarityLabel> parse_polarity(std::string_view text);

/// Daily aspect score kinds: absolute counts and counts normalised by the
/// day's total label count for the aspect.
enum class ScoreKind { AbsPositive, AbsNegative, NormPositive, NormNegative };

inline constexpr std::array<ScoreKind, 4> kAllScoreKinds{
    ScoreKind::AbsPositive, ScoreKind::AbsNegative, ScoreKind::NormPositive, ScoreKind::NormNegative};

/// Short tags used in file names and CSV columns: fp, fn, nfp, nfn.
std::string_view to_string(ScoreKind k);
std::optional<ScoreKind> parse_score_kind(std::string_view text);
inline bool is_normalized(ScoreKind k) {
    return k == ScoreKind::NormPositive || k == ScoreKind::NormNegative;
}

/// Date-indexed score series for one (aspect, kind). Dates without an entry
/// are missing, which is distinct from zero.
class SentimentSeries {
public:
    /// Throws DomainError if a value breaks the kind's range: absolute kinds
    /// hold non-negative integers, normalised kinds lie in [0, 1].
    SentimentSeries(std::string aspect, ScoreKind kind, std::map<CalendarDate, double> values);

    const std::string& aspect() const { return aspect_; }
    ScoreKind kind() const { return kind_; }
    const std::map<CalendarDate, double>& values() const { return values_; }
    std::optional<double> at(const CalendarDate& d) const;

private:
    std::string aspect_;
    ScoreKind kind_;
    std::map<CalendarDate, double> values_;
};

/// Closing prices for one ticker. All values are strictly positive.
class PriceSeries {
public:
    PriceSeries(std::string ticker, std::map<CalendarDate, double> values);

    const std::string& ticker() const { return ticker_; }
    const std::map<CalendarDate, double>& values() const { return values_; }
    std::optional<double> at(const CalendarDate& d) const;

private:
    std::string ticker_;
    std::map<CalendarDate, double> values_;
};

/// Lag-aligned (sentiment, price) observations. `x[i]` is the sentiment on
/// the trading day `lag_days` positions before `dates[i]`, `y[i]` the price
/// on `dates[i]`.
struct AlignedPairs {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<CalendarDate> dates;
    int lag_days = 1;

    std::size_t n() const { return x.size(); }
};

/// k-th trading day strictly before `d`.
/// Throws NotTradingDay if `d` is not in the calendar and InsufficientHistory
/// if fewer than `k` earlier trading days exist.
CalendarDate previous_trading_day(const TradingCalendar& cal, const CalendarDate& d, int k);

/// Pairs x[t - lag] with y[t] over trading days, skipping any day where either
/// side is missing. Throws EmptyAlignment when nothing pairs up and
/// NotTradingDay when a price date is outside the calendar.
AlignedPairs align_lagged(const SentimentSeries& x, const PriceSeries& y, const TradingCalendar& cal,
                          int lag);

/// Projects date-keyed values onto the calendar; missing days become NaN.
std::vector<double> dense_on_calendar(const std::map<CalendarDate, double>& values,
                                      const TradingCalendar& cal);

}  // namespace aspectstat
