#pragma once

#include <aspectstat/core.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace aspectstat {

/// Synthetic corpus with one planted sentiment -> price dependence:
///   price_t = base + coefficient * score_{t-1} + N(0, noise_sd^2)
/// for the planted (aspect, kind, ticker); every other ticker is an
/// independent random walk and every other aspect's counts are i.i.d.
struct FixtureOptions {
    std::uint64_t seed = 20221003;
    std::size_t trading_days = 62;
    CalendarDate first_day{2022, 10, 3};
    std::vector<std::string> tickers{"SHEL", "BP", "XOM", "BEPC", "CWEN", "NEE"};
    std::string planted_aspect = "inflation";
    ScoreKind planted_kind = ScoreKind::AbsPositive;
    std::string planted_ticker = "NEE";
    double coefficient = 0.9;
    double noise_sd = 1.0;
    double base_price = 50.0;
};

struct FixtureInfo {
    std::filesystem::path config;
    std::filesystem::path tweets;
    std::vector<std::filesystem::path> prices;
    std::vector<CalendarDate> trading_days;
    std::size_t tweet_lines = 0;
};

/// Weekdays from `first_day` on, skipping the 2022 U.S. market holidays in
/// Q4 (Thanksgiving, Christmas observed).
std::vector<CalendarDate> fixture_trading_days(const CalendarDate& first_day, std::size_t count);

/// Writes tweets.jsonl, prices/<TICKER>.csv and config.ini into `dir`. The
/// config points at those files and sets output.dir = out.
FixtureInfo generate_fixture(const std::filesystem::path& dir, const FixtureOptions& opts = {});

}  // namespace aspectstat
