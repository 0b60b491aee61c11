#pragma once

#include <aspectstat/core.hpp>

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace aspectstat {

/// Non-fatal problems collected while reading inputs.
using Warnings = std::vector<std::string>;

using Timestamp = std::chrono::sys_time<std::chrono::milliseconds>;

/// Parses ISO-8601 `YYYY-MM-DDTHH:MM:SS[.fff][Z|+HH:MM|-HH:MM]` into UTC.
/// A missing offset is read as UTC. Throws FormatError.
Timestamp parse_timestamp(std::string_view text);
/// Always `YYYY-MM-DDTHH:MM:SS.mmmZ`.
std::string format_timestamp(Timestamp ts);
CalendarDate utc_date(Timestamp ts);

struct TweetRecord {
    std::string id;
    Timestamp timestamp;
    std::string text;
    std::string lang;

    CalendarDate date() const { return utc_date(timestamp); }
    friend bool operator==(const TweetRecord&, const TweetRecord&) = default;
};

struct TweetParseStats {
    std::size_t lines = 0;         // non-blank lines seen
    std::size_t malformed = 0;
    std::size_t other_language = 0;
};

inline constexpr double kDefaultMalformedCap = 0.10;

/// Reads JSON Lines with `id`, `created_at`, `text`, `lang`. Non-English
/// records are dropped. Malformed lines are counted; if they exceed
/// `max_malformed_fraction` of non-blank lines the whole file is rejected
/// with FormatError.
std::vector<TweetRecord> parse_tweets(std::istream& in, double max_malformed_fraction = kDefaultMalformedCap,
                                      TweetParseStats* stats = nullptr, Warnings* warnings = nullptr);
std::vector<TweetRecord> parse_tweets(const std::filesystem::path& path,
                                      double max_malformed_fraction = kDefaultMalformedCap,
                                      TweetParseStats* stats = nullptr, Warnings* warnings = nullptr);
/// One JSON object, no trailing newline.
std::string serialize_tweet(const TweetRecord& t);

/// Yahoo Finance export (`Date,Open,High,Low,Close,Adj Close,Volume`); only
/// Date and Close are required. Rows whose Close is not numeric are skipped
/// with a warning.
PriceSeries parse_prices(std::istream& in, const std::string& ticker, Warnings* warnings = nullptr);
PriceSeries parse_prices(const std::filesystem::path& path, const std::string& ticker,
                         Warnings* warnings = nullptr);
void write_prices(std::ostream& out, const PriceSeries& prices);

/// One date per line; blank and '#' lines ignored.
TradingCalendar load_calendar(const std::filesystem::path& path);
TradingCalendar calendar_from_prices(const std::vector<PriceSeries>& prices);

/// Ordered list of aspects, each a sequence of one or more lowercase tokens.
class AspectLexicon {
public:
    /// Throws DomainError on an empty list, an empty entry, uppercase
    /// characters or duplicates.
    explicit AspectLexicon(std::vector<std::vector<std::string>> aspects);

    std::size_t size() const { return aspects_.size(); }
    const std::vector<std::vector<std::string>>& token_sequences() const { return aspects_; }
    /// Space-joined display names, same order.
    const std::vector<std::string>& names() const { return names_; }
    bool contains(std::string_view name) const;

private:
    std::vector<std::vector<std::string>> aspects_;
    std::vector<std::string> names_;
};

/// Plain text, one aspect per line, '#' comments. Lines are lowercased and
/// tokenized with the tweet tokenizer.
AspectLexicon load_aspect_lexicon(std::istream& in);
AspectLexicon load_aspect_lexicon(const std::filesystem::path& path);
/// The twenty most frequent financial aspects, grouped Economic, Stock
/// Market, Financial Institution, Corporate.
AspectLexicon default_aspect_lexicon();

struct KeywordFrequency {
    std::string keyword;
    std::size_t tweet_count = 0;
    friend bool operator==(const KeywordFrequency&, const KeywordFrequency&) = default;
};

/// Counts each token at most once per tweet. Returns tokens with
/// `tweet_count >= min_count`, by count descending then lexicographically.
std::vector<KeywordFrequency> keyword_frequencies(const std::vector<TweetRecord>& tweets, std::size_t min_count);

struct LabeledMention {
    std::string tweet_id;
    CalendarDate date;
    std::string aspect;
    PolarityLabel polarity = PolarityLabel::Neutral;
    friend bool operator==(const LabeledMention&, const LabeledMention&) = default;
};

/// CSV `tweet_id,date,aspect,polarity`. Any bad row is a FormatError naming
/// its line. Duplicate rows are kept.
std::vector<LabeledMention> parse_labeled(std::istream& in);
std::vector<LabeledMention> parse_labeled(const std::filesystem::path& path);
void write_labeled(std::ostream& out, const std::vector<LabeledMention>& labels);

}  // namespace aspectstat
