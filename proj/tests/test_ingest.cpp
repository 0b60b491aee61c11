#include <doctest.h>

#include <aspectstat/ingest.hpp>
#include <aspectstat/random.hpp>
#include <aspectstat/tokenize.hpp>

#include "support.hpp"

#include <map>
#include <set>
#include <sstream>

using namespace aspectstat;
using testsupport::TempDir;
using testsupport::write_text;

namespace {

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

std::string tweet_line(const std::string& id, const std::string& text, const std::string& lang = "en",
                       const std::string& created = "2022-10-03T14:00:00Z") {
    return "{\"id\":\"" + id + "\",\"created_at\":\"" + created + "\",\"text\":\"" + text + "\",\"lang\":\"" + lang +
           "\"}\n";
}

TweetRecord tw(const std::string& id, const std::string& text) {
    return {id, parse_timestamp("2022-10-03T12:00:00Z"), text, "en"};
}

}  // namespace

TEST_CASE("tokenizer rules") {
    using V = std::vector<std::string>;
    CHECK(tokenize("Stock stock MARKET") == V{"stock", "stock", "market"});
    CHECK(tokenize("#Inflation is up!!! https://t.co/abc www.x.com http://y") == V{"inflation", "is", "up"});
    CHECK(tokenize("don't (panic), S&P... u.s. $XOM @fed") == V{"don't", "panic", "s&p", "u.s", "xom", "fed"});
    CHECK(tokenize("  \t\n ").empty());
    CHECK(tokenize("--- !!! ...").empty());
    CHECK(tokenize("caf\xc3\xa9 prices") == V{"caf\xc3\xa9", "prices"});
}

TEST_CASE("timestamps") {
    auto t = parse_timestamp("2022-10-03T23:30:00-02:00");
    CHECK(format_timestamp(t) == "2022-10-04T01:30:00.000Z");
    CHECK(utc_date(t) == CalendarDate(2022, 10, 4));
    CHECK(format_timestamp(parse_timestamp("2022-10-03T01:02:03.45Z")) == "2022-10-03T01:02:03.450Z");
    CHECK(format_timestamp(parse_timestamp("2022-10-03T01:02:03+0530")) == "2022-10-02T19:32:03.000Z");
    CHECK(format_timestamp(parse_timestamp("2022-10-03T01:02:03")) == "2022-10-03T01:02:03.000Z");
    CHECK(code_of([] { parse_timestamp("yesterday"); }) == ErrorCode::FormatError);
    CHECK(code_of([] { parse_timestamp("2022-10-03T25:00:00Z"); }) == ErrorCode::FormatError);
    CHECK(code_of([] { parse_timestamp("2022-02-30T01:00:00Z"); }) == ErrorCode::FormatError);
}

TEST_CASE("parse_tweets filters language") {
    std::istringstream in(tweet_line("1", "inflation up") + tweet_line("2", "la inflacion", "es") +
                          tweet_line("3", "rates higher"));
    TweetParseStats stats;
    auto t = parse_tweets(in, kDefaultMalformedCap, &stats);
    REQUIRE(t.size() == 2);
    CHECK(t[0].id == "1");
    CHECK(t[1].id == "3");
    CHECK(stats.other_language == 1);
    CHECK(stats.lines == 3);
}

TEST_CASE("parse_tweets empty input and malformed cap") {
    std::istringstream empty("");
    CHECK(parse_tweets(empty).empty());

    std::istringstream half(tweet_line("1", "a") + "{broken\n" + tweet_line("2", "b") + "not json\n");
    CHECK(code_of([&] { parse_tweets(half); }) == ErrorCode::FormatError);

    std::string ok;
    for (int i = 0; i < 19; ++i) ok += tweet_line(std::to_string(i), "x");
    ok += "{\"id\":\"\",\"created_at\":\"2022-10-03T00:00:00Z\",\"text\":\"x\",\"lang\":\"en\"}\n";  // empty id
    std::istringstream one_bad(ok);
    Warnings w;
    TweetParseStats stats;
    CHECK(parse_tweets(one_bad, 0.10, &stats, &w).size() == 19);
    CHECK(stats.malformed == 1);
    CHECK_FALSE(w.empty());

    std::istringstream strict(ok);
    CHECK(code_of([&] { parse_tweets(strict, 0.0); }) == ErrorCode::FormatError);

    CHECK(code_of([] { parse_tweets(std::filesystem::path("/nonexistent/tweets.jsonl")); }) ==
          ErrorCode::FileNotFound);
}

TEST_CASE("property: serialize -> parse round-trips every field") {
    SeededRng rng(5);
    const std::string alphabet = "abcXYZ 019#$@\"\\/\t\n,.;:!?\xc3\xa9";
    std::vector<TweetRecord> original;
    std::string file;
    for (int i = 0; i < 300; ++i) {
        TweetRecord t;
        t.id = "id" + std::to_string(rng.next() % 1000000007ULL);
        t.timestamp = Timestamp{std::chrono::milliseconds{1640995200000LL + rng.uniform_int(0, 365LL * 86400000LL)}};
        const auto len = rng.uniform_int(1, 60);
        for (std::int64_t c = 0; c < len; ++c) {
            t.text.push_back(alphabet[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(alphabet.size()) - 1))]);
        }
        // keep multi-byte sequences intact: replace lone halves
        for (auto& ch : t.text) {
            if (static_cast<unsigned char>(ch) >= 0x80) ch = 'e';
        }
        t.text += " caf\xc3\xa9";
        t.lang = "en";
        file += serialize_tweet(t) + "\n";
        original.push_back(t);
    }
    std::istringstream in(file);
    auto back = parse_tweets(in, 0.0);
    REQUIRE(back.size() == original.size());
    for (std::size_t i = 0; i < back.size(); ++i) CHECK(back[i] == original[i]);
}

TEST_CASE("parse_prices") {
    TempDir dir("prices");
    SUBCASE("yahoo layout, null rows skipped") {
        write_text(dir / "p.csv",
                   "Date,Open,High,Low,Close,Adj Close,Volume\n"
                   "2022-10-03,1,1,1,80.5,80.5,100\n"
                   "2022-10-04,null,null,null,null,null,null\n"
                   "2022-10-05,1,1,1,81.25,81.25,100\n");
        Warnings w;
        auto p = parse_prices(dir / "p.csv", "NEE", &w);
        CHECK(p.ticker() == "NEE");
        REQUIRE(p.values().size() == 2);
        CHECK(p.at(CalendarDate(2022, 10, 5)) == 81.25);
        CHECK_FALSE(p.at(CalendarDate(2022, 10, 4)));
        CHECK(w.size() == 1);
    }
    SUBCASE("62 rows") {
        std::string s = "Date,Open,High,Low,Close,Adj Close,Volume\n";
        CalendarDate d{2022, 10, 3};
        for (int i = 0; i < 62; ++i, d = d.plus_days(1)) s += d.to_string() + ",1,1,1," + std::to_string(50 + i) + ",1,1\n";
        write_text(dir / "p.csv", s);
        CHECK(parse_prices(dir / "p.csv", "BP").values().size() == 62);
    }
    SUBCASE("header without Close") {
        write_text(dir / "p.csv", "Date,Open,High,Low,Adj Close,Volume\n2022-10-03,1,1,1,1,1\n");
        CHECK(code_of([&] { parse_prices(dir / "p.csv", "BP"); }) == ErrorCode::HeaderMismatch);
    }
    SUBCASE("no usable rows") {
        write_text(dir / "p.csv", "Date,Open,High,Low,Close,Adj Close,Volume\n2022-10-03,1,1,1,null,1,1\n");
        CHECK(code_of([&] { parse_prices(dir / "p.csv", "BP"); }) == ErrorCode::EmptySeries);
    }
    SUBCASE("bad date, non-positive close, duplicates") {
        write_text(dir / "a.csv", "Date,Close\n10/03/2022,5\n");
        CHECK(code_of([&] { parse_prices(dir / "a.csv", "BP"); }) == ErrorCode::FormatError);
        write_text(dir / "b.csv", "Date,Close\n2022-10-03,0\n");
        CHECK(code_of([&] { parse_prices(dir / "b.csv", "BP"); }) == ErrorCode::FormatError);
        write_text(dir / "c.csv", "Date,Close\n2022-10-03,5\n2022-10-03,6\n");
        CHECK(code_of([&] { parse_prices(dir / "c.csv", "BP"); }) == ErrorCode::FormatError);
    }
    SUBCASE("missing file") {
        CHECK(code_of([&] { parse_prices(dir / "none.csv", "BP"); }) == ErrorCode::FileNotFound);
    }
    SUBCASE("write then parse") {
        PriceSeries p("XOM", {{CalendarDate(2022, 10, 3), 101.5}, {CalendarDate(2022, 10, 4), 99.125}});
        std::stringstream ss;
        write_prices(ss, p);
        CHECK(parse_prices(ss, "XOM").values() == p.values());
    }
}

TEST_CASE("calendars") {
    TempDir dir("cal");
    write_text(dir / "cal.txt", "# q4\n2022-10-04\n\n2022-10-03\n");
    auto cal = load_calendar(dir / "cal.txt");
    REQUIRE(cal.size() == 2);
    CHECK(cal[0] == CalendarDate(2022, 10, 3));
    write_text(dir / "bad.txt", "2022-10-03\nMonday\n");
    CHECK(code_of([&] { load_calendar(dir / "bad.txt"); }) == ErrorCode::FormatError);

    PriceSeries a("A", {{CalendarDate(2022, 10, 3), 1.0}});
    PriceSeries b("B", {{CalendarDate(2022, 10, 4), 1.0}, {CalendarDate(2022, 10, 3), 1.0}});
    CHECK(calendar_from_prices({a, b}).size() == 2);
}

TEST_CASE("aspect lexicon") {
    auto lex = default_aspect_lexicon();
    const std::vector<std::string> expected{"inflation", "economy",   "recession", "china",   "investors",
                                            "market",    "stock",     "trading",   "price",   "stockmarket",
                                            "bitcoin",   "finance",   "financial", "rate",    "interest",
                                            "bank",      "report",    "sales",     "cost",    "tax"};
    CHECK(lex.names() == expected);

    std::istringstream in("# comment\nInterest Rate\n\ntax\n");
    auto custom = load_aspect_lexicon(in);
    REQUIRE(custom.size() == 2);
    CHECK(custom.names()[0] == "interest rate");
    CHECK(custom.token_sequences()[0] == std::vector<std::string>{"interest", "rate"});

    CHECK(code_of([] { AspectLexicon({}); }) == ErrorCode::DomainError);
    CHECK(code_of([] { AspectLexicon({{"tax"}, {"tax"}}); }) == ErrorCode::DomainError);
    CHECK(code_of([] { AspectLexicon({{"Tax"}}); }) == ErrorCode::DomainError);

    // The bundled file and the built-in default agree.
    CHECK(load_aspect_lexicon(std::filesystem::path(ASPECTSTAT_DATA_DIR) / "aspects.txt").names() == expected);
}

TEST_CASE("keyword_frequencies") {
    SUBCASE("once per tweet") {
        auto k = keyword_frequencies({tw("1", "stock stock market")}, 1);
        REQUIRE(k.size() == 2);
        CHECK(k[0] == KeywordFrequency{"market", 1});
        CHECK(k[1] == KeywordFrequency{"stock", 1});
    }
    SUBCASE("threshold 100") {
        std::vector<TweetRecord> t;
        for (int i = 0; i < 150; ++i) t.push_back(tw(std::to_string(i), "#Inflation again"));
        for (int i = 0; i < 99; ++i) t.push_back(tw("b" + std::to_string(i), "recession fears"));
        auto k = keyword_frequencies(t, 100);
        REQUIRE(k.size() == 2);
        CHECK(k[0] == KeywordFrequency{"again", 150});
        CHECK(k[1] == KeywordFrequency{"inflation", 150});
    }
    SUBCASE("min_count above corpus size") { CHECK(keyword_frequencies({tw("1", "a b c")}, 2).empty()); }
    SUBCASE("empty corpus") { CHECK(keyword_frequencies({}, 0).empty()); }
}

TEST_CASE("property: keyword counts are order invariant and bounded") {
    SeededRng rng(99);
    const std::vector<std::string> vocab{"stock", "market", "inflation", "rate", "tax", "bank", "the", "a"};
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<TweetRecord> t;
        const auto n = rng.uniform_int(0, 40);
        std::size_t distinct_sum = 0;
        for (std::int64_t i = 0; i < n; ++i) {
            std::string text;
            std::set<std::string> seen;
            for (std::int64_t w = rng.uniform_int(1, 8); w > 0; --w) {
                const auto& word = vocab[static_cast<std::size_t>(rng.uniform_int(0, 7))];
                text += word + " ";
                seen.insert(word);
            }
            distinct_sum += seen.size();
            t.push_back(tw(std::to_string(i), text));
        }
        auto a = keyword_frequencies(t, 0);
        for (std::size_t i = t.size(); i > 1; --i) {
            std::swap(t[i - 1], t[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i) - 1))]);
        }
        CHECK(keyword_frequencies(t, 0) == a);
        std::size_t total = 0;
        for (const auto& k : a) {
            CHECK(k.tweet_count <= t.size());
            total += k.tweet_count;
        }
        CHECK(total == distinct_sum);
    }
}

TEST_CASE("parse_labeled") {
    std::istringstream ok(
        "tweet_id,date,aspect,polarity\n"
        "t1,2022-10-03,inflation,negative\n"
        "t1,2022-10-03,inflation,negative\n");
    auto l = parse_labeled(ok);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == LabeledMention{"t1", CalendarDate(2022, 10, 3), "inflation", PolarityLabel::Negative});
    CHECK(l[1] == l[0]);

    std::istringstream meh("tweet_id,date,aspect,polarity\nt1,2022-10-03,inflation,positive\nt2,2022-10-03,tax,meh\n");
    try {
        parse_labeled(meh);
        FAIL("expected FormatError");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::FormatError);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    std::istringstream header("id,date,aspect,polarity\n");
    CHECK(code_of([&] { parse_labeled(header); }) == ErrorCode::FormatError);

    std::stringstream round;
    write_labeled(round, l);
    CHECK(parse_labeled(round) == l);
}
