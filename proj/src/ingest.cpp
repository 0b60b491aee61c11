#include <aspectstat/ingest.hpp>
#include <aspectstat/tokenize.hpp>

#include "csv.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace aspectstat {

using detail::split_csv_line;
using detail::trim;

// ---------------------------------------------------------------------------
// Timestamps

namespace {

bool read_digits(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}

}  // namespace

Timestamp parse_timestamp(std::string_view text) {
    auto fail = [&]() -> Timestamp {
        throw Error(ErrorCode::FormatError, "bad ISO-8601 timestamp '" + std::string(text) + "'");
    };
    if (text.size() < 19 || (text[10] != 'T' && text[10] != ' ') || text[13] != ':' || text[16] != ':') return fail();
    auto date = CalendarDate::try_parse(text.substr(0, 10));
    int hh = 0, mm = 0, ss = 0;
    if (!date || !read_digits(text, 11, 2, hh) || !read_digits(text, 14, 2, mm) || !read_digits(text, 17, 2, ss))
        return fail();
    if (hh > 23 || mm > 59 || ss > 60) return fail();

    std::size_t pos = 19;
    long millis = 0;
    if (pos < text.size() && text[pos] == '.') {
        ++pos;
        std::size_t digits = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            if (digits < 3) millis = millis * 10 + (text[pos] - '0');
            ++digits;
            ++pos;
        }
        if (digits == 0) return fail();
        for (std::size_t d = digits; d < 3; ++d) millis *= 10;
    }

    int offset_minutes = 0;
    if (pos < text.size()) {
        char c = text[pos];
        if (c == 'Z' || c == 'z') {
            ++pos;
        } else if (c == '+' || c == '-') {
            int oh = 0, om = 0;
            if (!read_digits(text, pos + 1, 2, oh)) return fail();
            std::size_t mpos = pos + 3;
            if (mpos < text.size() && text[mpos] == ':') ++mpos;
            if (!read_digits(text, mpos, 2, om)) return fail();
            offset_minutes = (oh * 60 + om) * (c == '-' ? -1 : 1);
            pos = mpos + 2;
        }
    }
    if (pos != text.size()) return fail();

    using namespace std::chrono;
    Timestamp ts = time_point_cast<milliseconds>(date->sys_days()) + hours{hh} + minutes{mm} + seconds{ss} +
                   milliseconds{millis} - minutes{offset_minutes};
    return ts;
}

std::string format_timestamp(Timestamp ts) {
    using namespace std::chrono;
    auto day = floor<days>(ts);
    CalendarDate d{day};
    auto ms = (ts - day).count();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%sT%02ld:%02ld:%02ld.%03ldZ", d.to_string().c_str(), static_cast<long>(ms / 3600000),
                  static_cast<long>(ms / 60000 % 60), static_cast<long>(ms / 1000 % 60), static_cast<long>(ms % 1000));
    return buf;
}

CalendarDate utc_date(Timestamp ts) { return CalendarDate{std::chrono::floor<std::chrono::days>(ts)}; }

// ---------------------------------------------------------------------------
// Tweets

std::vector<TweetRecord> parse_tweets(std::istream& in, double max_malformed_fraction, TweetParseStats* stats,
                                      Warnings* warnings) {
    TweetParseStats local;
    std::vector<TweetRecord> out;
    std::string line;
    std::size_t line_no = 0;
    std::size_t reported = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        ++local.lines;
        try {
            auto j = nlohmann::json::parse(line);
            TweetRecord rec{j.at("id").get<std::string>(), parse_timestamp(j.at("created_at").get<std::string>()),
                            j.at("text").get<std::string>(), j.at("lang").get<std::string>()};
            if (rec.id.empty() || rec.text.empty()) throw Error(ErrorCode::FormatError, "empty id or text");
            if (rec.lang != "en") {
                ++local.other_language;
                continue;
            }
            out.push_back(std::move(rec));
        } catch (const std::exception& e) {
            ++local.malformed;
            if (warnings && reported < 20) {
                warnings->push_back("tweets line " + std::to_string(line_no) + ": " + e.what());
                ++reported;
            }
        }
    }
    if (stats) *stats = local;
    if (local.lines > 0 &&
        static_cast<double>(local.malformed) > max_malformed_fraction * static_cast<double>(local.lines)) {
        throw Error(ErrorCode::FormatError, std::to_string(local.malformed) + " of " + std::to_string(local.lines) +
                                                " tweet lines are malformed");
    }
    if (warnings && local.malformed > 0) {
        warnings->push_back("skipped " + std::to_string(local.malformed) + " malformed tweet line(s)");
    }
    return out;
}

std::vector<TweetRecord> parse_tweets(const std::filesystem::path& path, double max_malformed_fraction,
                                      TweetParseStats* stats, Warnings* warnings) {
    auto in = detail::open_input(path);
    return parse_tweets(in, max_malformed_fraction, stats, warnings);
}

std::string serialize_tweet(const TweetRecord& t) {
    nlohmann::ordered_json j;
    j["id"] = t.id;
    j["created_at"] = format_timestamp(t.timestamp);
    j["text"] = t.text;
    j["lang"] = t.lang;
    return j.dump();
}

// ---------------------------------------------------------------------------
// Prices

PriceSeries parse_prices(std::istream& in, const std::string& ticker, Warnings* warnings) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::HeaderMismatch, ticker + ": price file has no header");
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
    auto header = split_csv_line(line);
    int date_col = -1, close_col = -1;
    for (std::size_t i = 0; i < header.size(); ++i) {
        auto name = trim(header[i]);
        if (name == "Date") date_col = static_cast<int>(i);
        if (name == "Close") close_col = static_cast<int>(i);
    }
    if (date_col < 0 || close_col < 0) {
        throw Error(ErrorCode::HeaderMismatch,
                    ticker + ": expected columns Date,Open,High,Low,Close,Adj Close,Volume, got '" + line + "'");
    }

    std::map<CalendarDate, double> values;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        auto where = ticker + " line " + std::to_string(line_no);
        if (fields.size() <= static_cast<std::size_t>(std::max(date_col, close_col))) {
            throw Error(ErrorCode::FormatError, where + ": too few columns");
        }
        auto date = CalendarDate::try_parse(trim(fields[date_col]));
        if (!date) throw Error(ErrorCode::FormatError, where + ": bad date '" + fields[date_col] + "'");
        auto close = detail::parse_double(fields[close_col]);
        if (!close) {
            if (warnings) warnings->push_back(where + ": non-numeric Close '" + fields[close_col] + "' skipped");
            continue;
        }
        if (*close <= 0.0) throw Error(ErrorCode::FormatError, where + ": Close must be positive");
        if (!values.emplace(*date, *close).second) {
            throw Error(ErrorCode::FormatError, where + ": duplicate date " + date->to_string());
        }
    }
    if (values.empty()) throw Error(ErrorCode::EmptySeries, ticker + ": no usable closing prices");
    return PriceSeries(ticker, std::move(values));
}

PriceSeries parse_prices(const std::filesystem::path& path, const std::string& ticker, Warnings* warnings) {
    auto in = detail::open_input(path);
    return parse_prices(in, ticker, warnings);
}

void write_prices(std::ostream& out, const PriceSeries& prices) {
    out << "Date,Open,High,Low,Close,Adj Close,Volume\n";
    for (const auto& [date, close] : prices.values()) {
        auto c = detail::format_fixed(close, 6);
        out << date.to_string() << ',' << c << ',' << c << ',' << c << ',' << c << ',' << c << ",0\n";
    }
}

TradingCalendar load_calendar(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    std::vector<CalendarDate> days;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto d = CalendarDate::try_parse(t);
        if (!d) {
            throw Error(ErrorCode::FormatError,
                        path.string() + " line " + std::to_string(line_no) + ": bad date '" + std::string(t) + "'");
        }
        days.push_back(*d);
    }
    return TradingCalendar(std::move(days));
}

TradingCalendar calendar_from_prices(const std::vector<PriceSeries>& prices) {
    std::vector<CalendarDate> days;
    for (const auto& p : prices) {
        for (const auto& [date, v] : p.values()) days.push_back(date);
    }
    return TradingCalendar(std::move(days));
}

// ---------------------------------------------------------------------------
// Aspect lexicon

AspectLexicon::AspectLexicon(std::vector<std::vector<std::string>> aspects) : aspects_(std::move(aspects)) {
    if (aspects_.empty()) throw Error(ErrorCode::DomainError, "aspect lexicon is empty");
    std::set<std::string> seen;
    for (const auto& seq : aspects_) {
        if (seq.empty()) throw Error(ErrorCode::DomainError, "aspect lexicon has an empty entry");
        std::string name;
        for (const auto& tok : seq) {
            if (tok.empty() || to_lower_ascii(tok) != tok || tok.find(' ') != std::string::npos) {
                throw Error(ErrorCode::DomainError, "aspect token '" + tok + "' is not a lowercase token");
            }
            if (!name.empty()) name.push_back(' ');
            name += tok;
        }
        if (!seen.insert(name).second) throw Error(ErrorCode::DomainError, "duplicate aspect '" + name + "'");
        names_.push_back(std::move(name));
    }
}

bool AspectLexicon::contains(std::string_view name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
}

AspectLexicon load_aspect_lexicon(std::istream& in) {
    std::vector<std::vector<std::string>> aspects;
    std::string line;
    while (std::getline(in, line)) {
        auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        auto toks = tokenize(t);
        if (!toks.empty()) aspects.push_back(std::move(toks));
    }
    return AspectLexicon(std::move(aspects));
}

AspectLexicon load_aspect_lexicon(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return load_aspect_lexicon(in);
}

AspectLexicon default_aspect_lexicon() {
    static const char* const kTopTwenty[] = {
        // Economic
        "inflation", "economy", "recession", "china",
        // Stock market
        "investors", "market", "stock", "trading", "price", "stockmarket", "bitcoin",
        // Financial institution
        "finance", "financial", "rate", "interest", "bank",
        // Corporate
        "report", "sales", "cost", "tax"};
    std::vector<std::vector<std::string>> aspects;
    for (const char* a : kTopTwenty) aspects.push_back({a});
    return AspectLexicon(std::move(aspects));
}

// ---------------------------------------------------------------------------
// Keyword hopping

std::vector<KeywordFrequency> keyword_frequencies(const std::vector<TweetRecord>& tweets, std::size_t min_count) {
    std::map<std::string, std::size_t> counts;
    for (const auto& t : tweets) {
        auto toks = tokenize(t.text);
        std::unordered_set<std::string> distinct(toks.begin(), toks.end());
        for (const auto& tok : distinct) ++counts[tok];
    }
    std::vector<KeywordFrequency> out;
    for (auto& [kw, n] : counts) {
        if (n >= min_count) out.push_back({kw, n});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const KeywordFrequency& a, const KeywordFrequency& b) { return a.tweet_count > b.tweet_count; });
    return out;
}

// ---------------------------------------------------------------------------
// Labeled mentions

std::vector<LabeledMention> parse_labeled(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw Error(ErrorCode::FormatError, "labels line 1: missing header");
    auto header = split_csv_line(trim(line));
    if (header != std::vector<std::string>{"tweet_id", "date", "aspect", "polarity"}) {
        throw Error(ErrorCode::FormatError, "labels line 1: expected header tweet_id,date,aspect,polarity");
    }
    std::vector<LabeledMention> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto t = trim(line);
        if (t.empty()) continue;
        auto where = "labels line " + std::to_string(line_no);
        auto f = split_csv_line(t);
        if (f.size() != 4) throw Error(ErrorCode::FormatError, where + ": expected 4 fields");
        auto date = CalendarDate::try_parse(trim(f[1]));
        if (!date) throw Error(ErrorCode::FormatError, where + ": bad date '" + f[1] + "'");
        auto pol = parse_polarity(trim(f[3]));
        if (!pol) throw Error(ErrorCode::FormatError, where + ": unknown polarity '" + f[3] + "'");
        std::string aspect(trim(f[2]));
        if (f[0].empty() || aspect.empty()) throw Error(ErrorCode::FormatError, where + ": empty tweet_id or aspect");
        out.push_back({f[0], *date, std::move(aspect), *pol});
    }
    return out;
}

std::vector<LabeledMention> parse_labeled(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return parse_labeled(in);
}

void write_labeled(std::ostream& out, const std::vector<LabeledMention>& labels) {
    out << "tweet_id,date,aspect,polarity\n";
    for (const auto& l : labels) {
        out << detail::csv_escape(l.tweet_id) << ',' << l.date.to_string() << ',' << detail::csv_escape(l.aspect)
            << ',' << to_string(l.polarity) << '\n';
    }
}

}  // namespace aspectstat
