#include <aspectstat/fixture.hpp>
#include <aspectstat/ingest.hpp>
#include <aspectstat/labeler.hpp>
#include <aspectstat/random.hpp>

#include "csv.hpp"

#include <algorithm>
#include <chrono>
#include <map>

namespace aspectstat {

namespace fs = std::filesystem;

std::vector<CalendarDate> fixture_trading_days(const CalendarDate& first_day, std::size_t count) {
    const CalendarDate holidays[] = {{2022, 11, 24}, {2022, 12, 26}};
    std::vector<CalendarDate> days;
    for (CalendarDate d = first_day; days.size() < count; d = d.plus_days(1)) {
        const auto wd = d.weekday();
        if (wd == std::chrono::Saturday || wd == std::chrono::Sunday) continue;
        if (std::find(std::begin(holidays), std::end(holidays), d) != std::end(holidays)) continue;
        days.push_back(d);
    }
    return days;
}

namespace {

struct DayCounts {
    std::int64_t pos = 0, neg = 0, neu = 0;
};

double kind_value(const DayCounts& c, ScoreKind kind) {
    const double total = static_cast<double>(c.pos + c.neg + c.neu);
    switch (kind) {
        case ScoreKind::AbsPositive: return static_cast<double>(c.pos);
        case ScoreKind::AbsNegative: return static_cast<double>(c.neg);
        case ScoreKind::NormPositive: return total > 0 ? static_cast<double>(c.pos) / total : 0.0;
        case ScoreKind::NormNegative: return total > 0 ? static_cast<double>(c.neg) / total : 0.0;
    }
    return 0.0;
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

}  // namespace

FixtureInfo generate_fixture(const fs::path& dir, const FixtureOptions& opts) {
    SeededRng rng(opts.seed);
    FixtureInfo info;
    info.trading_days = fixture_trading_days(opts.first_day, opts.trading_days);
    const auto lexicon = default_aspect_lexicon();
    const auto polarity = default_polarity_lexicon();
    const std::vector<std::string> pos_terms(polarity.positive().begin(), polarity.positive().end());
    const std::vector<std::string> neg_terms(polarity.negative().begin(), polarity.negative().end());

    // Daily counts for every calendar day in range, weekends included; the
    // pipeline drops the non-trading ones.
    std::vector<CalendarDate> all_days;
    for (CalendarDate d = info.trading_days.front(); d <= info.trading_days.back(); d = d.plus_days(1)) {
        all_days.push_back(d);
    }
    std::map<std::string, std::map<CalendarDate, DayCounts>> counts;
    for (const auto& aspect : lexicon.names()) {
        for (const auto& d : all_days) {
            DayCounts c;
            if (aspect == opts.planted_aspect) {
                c = {rng.uniform_int(5, 40), rng.uniform_int(0, 20), rng.uniform_int(1, 10)};
            } else {
                c = {rng.uniform_int(0, 20), rng.uniform_int(0, 20), rng.uniform_int(1, 10)};
            }
            counts[aspect][d] = c;
        }
    }

    fs::create_directories(dir / "prices");
    info.tweets = dir / "tweets.jsonl";
    {
        auto out = detail::open_output(info.tweets);
        std::size_t id = 0;
        auto emit = [&](const CalendarDate& d, const std::string& text, const char* lang) {
            ++id;
            char tid[24];
            std::snprintf(tid, sizeof tid, "f%07zu", id);
            using namespace std::chrono;
            const Timestamp ts = time_point_cast<milliseconds>(d.sys_days()) + hours{static_cast<int>(id % 24)} +
                                 minutes{static_cast<int>(id % 60)};
            out << serialize_tweet({tid, ts, text, lang}) << '\n';
            ++info.tweet_lines;
        };
        for (const auto& d : all_days) {
            for (const auto& aspect : lexicon.names()) {
                const auto& c = counts[aspect][d];
                for (std::int64_t i = 0; i < c.pos; ++i) {
                    const auto& w = pos_terms[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(pos_terms.size()) - 1))];
                    emit(d, "Feeling " + w + " about #" + aspect + " this week https://t.co/x" + std::to_string(i), "en");
                }
                for (std::int64_t i = 0; i < c.neg; ++i) {
                    const auto& w = neg_terms[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(neg_terms.size()) - 1))];
                    emit(d, capitalize(aspect) + " news looks " + w + ", ugh", "en");
                }
                for (std::int64_t i = 0; i < c.neu; ++i) emit(d, "Thinking about " + aspect + " again.", "en");
            }
            emit(d, "just watching the game tonight", "en");
            emit(d, "la inflacion sube otra vez", "es");
        }
        // A couple of broken lines, far below the rejection cap.
        out << "{\"id\": \"broken\", \"created_at\": \"not a date\", \"text\": \"x\", \"lang\": \"en\"}\n";
        out << "{not json\n";
        info.tweet_lines += 2;
    }

    // Prices on trading days only.
    for (const auto& ticker : opts.tickers) {
        std::map<CalendarDate, double> values;
        if (ticker == opts.planted_ticker) {
            const auto& planted = counts.at(opts.planted_aspect);
            double mean = 0.0;
            for (const auto& d : info.trading_days) mean += kind_value(planted.at(d), opts.planted_kind);
            mean /= static_cast<double>(info.trading_days.size());
            for (std::size_t t = 0; t < info.trading_days.size(); ++t) {
                const double driver = t == 0 ? mean : kind_value(planted.at(info.trading_days[t - 1]), opts.planted_kind);
                values[info.trading_days[t]] =
                    std::max(1.0, opts.base_price + opts.coefficient * driver + rng.normal(0.0, opts.noise_sd));
            }
        } else {
            double level = rng.uniform(30.0, 120.0);
            for (const auto& d : info.trading_days) {
                level = std::max(1.0, level + rng.normal(0.0, 1.0));
                values[d] = level;
            }
        }
        const auto path = dir / "prices" / (ticker + ".csv");
        auto out = detail::open_output(path);
        write_prices(out, PriceSeries(ticker, std::move(values)));
        info.prices.push_back(path);
    }

    info.config = dir / "config.ini";
    auto cfg = detail::open_output(info.config);
    cfg << "# Synthetic fixture: " << opts.planted_aspect << " " << to_string(opts.planted_kind) << " -> "
        << opts.planted_ticker << " planted at lag 1\n";
    cfg << "[input]\ntweets = tweets.jsonl\n\n[prices]\n";
    for (const auto& ticker : opts.tickers) cfg << ticker << " = prices/" << ticker << ".csv\n";
    cfg << "\n[output]\ndir = out\n\n[run]\nseed = " << opts.seed << '\n';
    return info;
}

}  // namespace aspectstat
