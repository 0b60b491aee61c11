#include <doctest.h>

#include <aspectstat/core.hpp>
#include <aspectstat/random.hpp>

#include <cmath>

using namespace aspectstat;

namespace {

CalendarDate D(const char* s) { return CalendarDate::parse(s); }

template <typename F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an aspectstat::Error");
    return ErrorCode::DomainError;
}

// Mon 2022-10-03 .. Fri 2022-10-07, Mon 2022-10-10
TradingCalendar week() {
    return TradingCalendar({D("2022-10-03"), D("2022-10-04"), D("2022-10-05"), D("2022-10-06"), D("2022-10-07"),
                            D("2022-10-10")});
}

}  // namespace

TEST_CASE("CalendarDate parses strictly and round-trips") {
    auto d = D("2022-12-30");
    CHECK(d.year() == 2022);
    CHECK(d.month() == 12);
    CHECK(d.day() == 30);
    CHECK(d.to_string() == "2022-12-30");
    CHECK(d.plus_days(2).to_string() == "2023-01-01");
    CHECK_FALSE(CalendarDate::try_parse("2022-02-30"));
    CHECK_FALSE(CalendarDate::try_parse("2022-2-03"));
    CHECK_FALSE(CalendarDate::try_parse("2022-10-03T00:00"));
    CHECK_FALSE(CalendarDate::try_parse(""));
    CHECK(code_of([] { CalendarDate(2022, 2, 29); }) == ErrorCode::DomainError);
    CHECK(D("2022-10-03") < D("2022-10-04"));
    CHECK(D("2022-10-08").weekday() == std::chrono::Saturday);
}

TEST_CASE("TradingCalendar sorts, de-duplicates and rejects empty input") {
    TradingCalendar cal({D("2022-10-05"), D("2022-10-03"), D("2022-10-05")});
    REQUIRE(cal.size() == 2);
    CHECK(cal[0] == D("2022-10-03"));
    CHECK(cal.index_of(D("2022-10-05")) == 1u);
    CHECK_FALSE(cal.contains(D("2022-10-04")));
    CHECK(code_of([] { TradingCalendar({}); }) == ErrorCode::EmptySeries);
}

TEST_CASE("polarity and score-kind names") {
    CHECK(parse_polarity("negative") == PolarityLabel::Negative);
    CHECK_FALSE(parse_polarity("Negative"));
    CHECK_FALSE(parse_polarity("meh"));
    for (auto k : kAllScoreKinds) CHECK(parse_score_kind(to_string(k)) == k);
    CHECK(to_string(ScoreKind::NormNegative) == "nfn");
    CHECK(is_normalized(ScoreKind::NormPositive));
    CHECK_FALSE(is_normalized(ScoreKind::AbsNegative));
}

TEST_CASE("series value ranges are enforced") {
    CHECK_NOTHROW(SentimentSeries("tax", ScoreKind::AbsPositive, {{D("2022-10-03"), 4.0}}));
    CHECK(code_of([] { SentimentSeries("tax", ScoreKind::AbsPositive, {{D("2022-10-03"), 1.5}}); }) ==
          ErrorCode::DomainError);
    CHECK(code_of([] { SentimentSeries("tax", ScoreKind::AbsNegative, {{D("2022-10-03"), -1.0}}); }) ==
          ErrorCode::DomainError);
    CHECK(code_of([] { SentimentSeries("tax", ScoreKind::NormPositive, {{D("2022-10-03"), 1.01}}); }) ==
          ErrorCode::DomainError);
    CHECK(code_of([] { PriceSeries("BP", {{D("2022-10-03"), 0.0}}); }) == ErrorCode::DomainError);
}

TEST_CASE("previous_trading_day") {
    SUBCASE("adjacent days") {
        TradingCalendar cal({D("2022-10-03"), D("2022-10-04"), D("2022-10-05")});
        CHECK(previous_trading_day(cal, D("2022-10-05"), 1) == D("2022-10-04"));
        CHECK(previous_trading_day(cal, D("2022-10-05"), 2) == D("2022-10-03"));
    }
    SUBCASE("weekend skipped") {
        TradingCalendar cal({D("2022-10-07"), D("2022-10-10")});
        CHECK(previous_trading_day(cal, D("2022-10-10"), 1) == D("2022-10-07"));
    }
    SUBCASE("no predecessor") {
        TradingCalendar cal({D("2022-10-03")});
        CHECK(code_of([&] { previous_trading_day(cal, D("2022-10-03"), 1); }) == ErrorCode::InsufficientHistory);
    }
    SUBCASE("date off the calendar") {
        CHECK(code_of([] { previous_trading_day(week(), D("2022-10-08"), 1); }) == ErrorCode::NotTradingDay);
    }
    SUBCASE("k must be positive") {
        CHECK(code_of([] { previous_trading_day(week(), D("2022-10-05"), 0); }) == ErrorCode::DomainError);
    }
}

TEST_CASE("align_lagged pairs x[t-lag] with y[t]") {
    const auto cal = week();
    std::map<CalendarDate, double> xv, yv;
    for (std::size_t i = 0; i < cal.size(); ++i) {
        xv[cal[i]] = static_cast<double>(i);
        yv[cal[i]] = 100.0 + static_cast<double>(i);
    }
    SentimentSeries x("tax", ScoreKind::AbsPositive, xv);
    PriceSeries y("NEE", yv);

    auto p = align_lagged(x, y, cal, 1);
    REQUIRE(p.n() == cal.size() - 1);
    CHECK(p.lag_days == 1);
    for (std::size_t i = 0; i < p.n(); ++i) {
        CHECK(p.x[i] == static_cast<double>(i));
        CHECK(p.y[i] == 101.0 + static_cast<double>(i));
        CHECK(p.dates[i] == cal[i + 1]);
    }
    // Friday sentiment pairs with Monday's price.
    CHECK(p.dates.back() == D("2022-10-10"));
    CHECK(p.x.back() == 4.0);

    auto p2 = align_lagged(x, y, cal, 2);
    CHECK(p2.n() == cal.size() - 2);
    CHECK(p2.x.front() == 0.0);
    CHECK(p2.y.front() == 102.0);
}

TEST_CASE("align_lagged deletes pairwise and rejects empty results") {
    const auto cal = week();
    std::map<CalendarDate, double> xv, yv;
    for (const auto& d : cal.days()) {
        xv[d] = 1.0;
        yv[d] = 10.0;
    }
    xv.erase(D("2022-10-05"));  // interior gap in x removes the pair priced on the 6th
    auto p = align_lagged(SentimentSeries("tax", ScoreKind::AbsPositive, xv), PriceSeries("BP", yv), cal, 1);
    CHECK(p.n() == cal.size() - 2);
    CHECK(std::find(p.dates.begin(), p.dates.end(), D("2022-10-06")) == p.dates.end());

    SentimentSeries only_last("tax", ScoreKind::AbsPositive, {{D("2022-10-10"), 1.0}});
    CHECK(code_of([&] { align_lagged(only_last, PriceSeries("BP", yv), cal, 1); }) == ErrorCode::EmptyAlignment);

    PriceSeries off_calendar("BP", {{D("2022-10-08"), 10.0}});
    CHECK(code_of([&] {
              align_lagged(SentimentSeries("tax", ScoreKind::AbsPositive, xv), off_calendar, cal, 1);
          }) == ErrorCode::NotTradingDay);
}

TEST_CASE("62 dense trading days at lag 1 give 61 pairs") {
    std::vector<CalendarDate> days;
    for (CalendarDate d{2022, 10, 3}; days.size() < 62; d = d.plus_days(1)) {
        if (d.weekday() != std::chrono::Saturday && d.weekday() != std::chrono::Sunday) days.push_back(d);
    }
    TradingCalendar cal(days);
    std::map<CalendarDate, double> xv, yv;
    for (const auto& d : days) {
        xv[d] = 3.0;
        yv[d] = 7.0;
    }
    auto p = align_lagged(SentimentSeries("inflation", ScoreKind::AbsPositive, xv), PriceSeries("NEE", yv), cal, 1);
    CHECK(p.n() == 61);
}

TEST_CASE("property: dense series over D days at lag L give D - L pairs, relabelling dates changes nothing") {
    SeededRng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto days_n = static_cast<std::size_t>(rng.uniform_int(3, 40));
        const int lag = static_cast<int>(rng.uniform_int(1, static_cast<std::int64_t>(days_n) - 1));
        const int shift = static_cast<int>(rng.uniform_int(1, 400));
        std::vector<CalendarDate> days, moved;
        CalendarDate d{2022, 1, 3};
        for (std::size_t i = 0; i < days_n; ++i) {
            d = d.plus_days(static_cast<int>(rng.uniform_int(1, 4)));
            days.push_back(d);
            moved.push_back(d.plus_days(shift));
        }
        std::map<CalendarDate, double> xv, yv, xm, ym;
        for (std::size_t i = 0; i < days_n; ++i) {
            const double xs = static_cast<double>(rng.uniform_int(0, 30));
            const double ys = rng.uniform(1.0, 100.0);
            xv[days[i]] = xs;
            yv[days[i]] = ys;
            xm[moved[i]] = xs;
            ym[moved[i]] = ys;
        }
        auto a = align_lagged(SentimentSeries("a", ScoreKind::AbsPositive, xv), PriceSeries("T", yv),
                              TradingCalendar(days), lag);
        auto b = align_lagged(SentimentSeries("a", ScoreKind::AbsPositive, xm), PriceSeries("T", ym),
                              TradingCalendar(moved), lag);
        REQUIRE(a.n() == days_n - static_cast<std::size_t>(lag));
        CHECK(a.x == b.x);
        CHECK(a.y == b.y);
        CHECK(std::is_sorted(a.dates.begin(), a.dates.end()));
    }
}

TEST_CASE("dense_on_calendar marks gaps with NaN") {
    const auto cal = week();
    auto v = dense_on_calendar({{D("2022-10-04"), 2.0}, {D("2022-10-10"), 5.0}}, cal);
    REQUIRE(v.size() == cal.size());
    CHECK(std::isnan(v[0]));
    CHECK(v[1] == 2.0);
    CHECK(v[5] == 5.0);
}

TEST_CASE("error codes print their names") {
    CHECK(to_string(ErrorCode::InsufficientData) == "InsufficientData");
    CHECK(to_string(ErrorCode::DegenerateSample) == "DegenerateSample");
    Error e(ErrorCode::HeaderMismatch, "no Close column");
    CHECK(std::string(e.what()) == "HeaderMismatch: no Close column");
}
