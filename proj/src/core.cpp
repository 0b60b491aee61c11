#include <aspectstat/core.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace aspectstat {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotTradingDay: return "NotTradingDay";
        case ErrorCode::InsufficientHistory: return "InsufficientHistory";
        case ErrorCode::EmptyAlignment: return "EmptyAlignment";
        case ErrorCode::FileNotFound: return "FileNotFound";
        case ErrorCode::FormatError: return "FormatError";
        case ErrorCode::HeaderMismatch: return "HeaderMismatch";
        case ErrorCode::EmptySeries: return "EmptySeries";
        case ErrorCode::DegenerateSeries: return "DegenerateSeries";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::DegenerateSample: return "DegenerateSample";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ConfigError: return "ConfigError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// CalendarDate

CalendarDate::CalendarDate(int year, unsigned month, unsigned day)
    : ymd_{std::chrono::year{year}, std::chrono::month{month}, std::chrono::day{day}} {
    if (!ymd_.ok()) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "invalid calendar date %04d-%02u-%02u", year, month, day);
        throw Error(ErrorCode::DomainError, buf);
    }
}

CalendarDate::CalendarDate(std::chrono::sys_days days) : ymd_{days} {}

std::optional<CalendarDate> CalendarDate::try_parse(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    auto field = [&](std::size_t pos, std::size_t len, int& out) {
        for (std::size_t i = pos; i < pos + len; ++i) {
            if (text[i] < '0' || text[i] > '9') return false;
        }
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + pos + len, out);
        return ec == std::errc{} && ptr == text.data() + pos + len;
    };
    int y = 0, m = 0, d = 0;
    if (!field(0, 4, y) || !field(5, 2, m) || !field(8, 2, d)) return std::nullopt;
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                    std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) return std::nullopt;
    return CalendarDate{y, static_cast<unsigned>(m), static_cast<unsigned>(d)};
}

CalendarDate CalendarDate::parse(std::string_view text) {
    auto d = try_parse(text);
    if (!d) throw Error(ErrorCode::FormatError, "expected YYYY-MM-DD date, got '" + std::string(text) + "'");
    return *d;
}

std::string CalendarDate::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year(), month(), day());
    return buf;
}

// ---------------------------------------------------------------------------
// TradingCalendar

TradingCalendar::TradingCalendar(std::vector<CalendarDate> days) : days_(std::move(days)) {
    if (days_.empty()) throw Error(ErrorCode::EmptySeries, "trading calendar has no days");
    std::sort(days_.begin(), days_.end());
    days_.erase(std::unique(days_.begin(), days_.end()), days_.end());
}

std::optional<std::size_t> TradingCalendar::index_of(const CalendarDate& d) const {
    auto it = std::lower_bound(days_.begin(), days_.end(), d);
    if (it == days_.end() || *it != d) return std::nullopt;
    return static_cast<std::size_t>(it - days_.begin());
}

// ---------------------------------------------------------------------------
// Enumerations

std::string_view to_string(PolarityLabel p) {
    switch (p) {
        case PolarityLabel::Positive: return "positive";
        case PolarityLabel::Neutral: return "neutral";
        case PolarityLabel::Negative: return "negative";
    }
    return "neutral";
}

std::optional<PolarityLabel> parse_polarity(std::string_view text) {
    if (text == "positive") return PolarityLabel::Positive;
    if (text == "neutral") return PolarityLabel::Neutral;
    if (text == "negative") return PolarityLabel::Negative;
    return std::nullopt;
}

std::string_view to_string(ScoreKind k) {
    switch (k) {
        case ScoreKind::AbsPositive: return "fp";
        case ScoreKind::AbsNegative: return "fn";
        case ScoreKind::NormPositive: return "nfp";
        case ScoreKind::NormNegative: return "nfn";
    }
    return "fp";
}

std::optional<ScoreKind> parse_score_kind(std::string_view text) {
    for (ScoreKind k : kAllScoreKinds) {
        if (to_string(k) == text) return k;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Series

SentimentSeries::SentimentSeries(std::string aspect, ScoreKind kind, std::map<CalendarDate, double> values)
    : aspect_(std::move(aspect)), kind_(kind), values_(std::move(values)) {
    for (const auto& [date, v] : values_) {
        bool ok = std::isfinite(v) && v >= 0.0;
        if (ok && is_normalized(kind_)) ok = v <= 1.0;
        if (ok && !is_normalized(kind_)) ok = v == std::floor(v);
        if (!ok) {
            throw Error(ErrorCode::DomainError, "score " + std::to_string(v) + " out of range for kind " +
                                                    std::string(to_string(kind_)) + " on " + date.to_string());
        }
    }
}

std::optional<double> SentimentSeries::at(const CalendarDate& d) const {
    auto it = values_.find(d);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

PriceSeries::PriceSeries(std::string ticker, std::map<CalendarDate, double> values)
    : ticker_(std::move(ticker)), values_(std::move(values)) {
    for (const auto& [date, v] : values_) {
        if (!(std::isfinite(v) && v > 0.0)) {
            throw Error(ErrorCode::DomainError,
                        ticker_ + " price on " + date.to_string() + " must be positive");
        }
    }
}

std::optional<double> PriceSeries::at(const CalendarDate& d) const {
    auto it = values_.find(d);
    if (it == values_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// Alignment

CalendarDate previous_trading_day(const TradingCalendar& cal, const CalendarDate& d, int k) {
    if (k < 1) throw Error(ErrorCode::DomainError, "lag must be a positive number of trading days");
    auto idx = cal.index_of(d);
    if (!idx) throw Error(ErrorCode::NotTradingDay, d.to_string() + " is not in the trading calendar");
    if (*idx < static_cast<std::size_t>(k)) {
        throw Error(ErrorCode::InsufficientHistory,
                    "fewer than " + std::to_string(k) + " trading days before " + d.to_string());
    }
    return cal[*idx - static_cast<std::size_t>(k)];
}

AlignedPairs align_lagged(const SentimentSeries& x, const PriceSeries& y, const TradingCalendar& cal,
                          int lag) {
    if (lag < 1) throw Error(ErrorCode::DomainError, "lag must be a positive number of trading days");
    AlignedPairs out;
    out.lag_days = lag;
    for (const auto& [date, price] : y.values()) {
        auto idx = cal.index_of(date);
        if (!idx) {
            throw Error(ErrorCode::NotTradingDay,
                        y.ticker() + " has a price on non-trading day " + date.to_string());
        }
        if (*idx < static_cast<std::size_t>(lag)) continue;
        auto xv = x.at(cal[*idx - static_cast<std::size_t>(lag)]);
        if (!xv) continue;
        out.x.push_back(*xv);
        out.y.push_back(price);
        out.dates.push_back(date);
    }
    if (out.x.empty()) {
        throw Error(ErrorCode::EmptyAlignment,
                    "no lagged pairs between '" + x.aspect() + "' and " + y.ticker());
    }
    return out;
}

std::vector<double> dense_on_calendar(const std::map<CalendarDate, double>& values, const TradingCalendar& cal) {
    std::vector<double> out(cal.size(), std::numeric_limits<double>::quiet_NaN());
    for (const auto& [date, v] : values) {
        if (auto idx = cal.index_of(date)) out[*idx] = v;
    }
    return out;
}

}  // namespace aspectstat
