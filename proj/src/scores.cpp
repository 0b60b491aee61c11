#include <aspectstat/scores.hpp>

#include "csv.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <set>
#include <tuple>

namespace aspectstat {

std::vector<AspectDayCount> aggregate_daily(const std::vector<LabeledMention>& labels) {
    std::map<std::pair<std::string, CalendarDate>, AspectDayCount> acc;
    for (const auto& l : labels) {
        auto key = std::make_pair(l.aspect, l.date);
        auto it = acc.find(key);
        if (it == acc.end()) it = acc.emplace(key, AspectDayCount{l.aspect, l.date}).first;
        switch (l.polarity) {
            case PolarityLabel::Positive: ++it->second.pos; break;
            case PolarityLabel::Negative: ++it->second.neg; break;
            case PolarityLabel::Neutral: ++it->second.neu; break;
        }
    }
    std::vector<AspectDayCount> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) out.push_back(std::move(c));
    return out;
}

SentimentSeries score_series(const std::vector<AspectDayCount>& counts, const std::string& aspect, ScoreKind kind) {
    std::map<CalendarDate, double> values;
    for (const auto& c : counts) {
        if (c.aspect != aspect) continue;
        const double total = static_cast<double>(c.total());
        double v = 0.0;
        switch (kind) {
            case ScoreKind::AbsPositive: v = static_cast<double>(c.pos); break;
            case ScoreKind::AbsNegative: v = static_cast<double>(c.neg); break;
            case ScoreKind::NormPositive:
                if (total == 0.0) continue;
                v = static_cast<double>(c.pos) / total;
                break;
            case ScoreKind::NormNegative:
                if (total == 0.0) continue;
                v = static_cast<double>(c.neg) / total;
                break;
        }
        if (!values.emplace(c.date, v).second) {
            throw Error(ErrorCode::DomainError, "duplicate count record for '" + aspect + "' on " + c.date.to_string());
        }
    }
    return SentimentSeries(aspect, kind, std::move(values));
}

SentimentSeries fill_absent_with_zero(const SentimentSeries& series, const TradingCalendar& cal) {
    if (is_normalized(series.kind())) {
        throw Error(ErrorCode::DomainError, "absent days can only be zero-filled for absolute scores");
    }
    auto values = series.values();
    for (const auto& d : cal.days()) values.emplace(d, 0.0);
    return SentimentSeries(series.aspect(), series.kind(), std::move(values));
}

std::vector<AspectDayCount> drop_non_trading_days(const std::vector<AspectDayCount>& counts,
                                                  const TradingCalendar& cal) {
    std::vector<AspectDayCount> out;
    std::copy_if(counts.begin(), counts.end(), std::back_inserter(out),
                 [&](const AspectDayCount& c) { return cal.contains(c.date); });
    return out;
}

std::vector<std::string> top_aspects(const std::vector<AspectDayCount>& counts, const AspectLexicon& lexicon,
                                     std::size_t n) {
    std::map<std::string, std::uint64_t> totals;
    for (const auto& name : lexicon.names()) totals[name] = 0;
    for (const auto& c : counts) {
        auto it = totals.find(c.aspect);
        if (it != totals.end()) it->second += c.total();
    }
    std::vector<std::pair<std::string, std::uint64_t>> ranked(totals.begin(), totals.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
    ranked.resize(std::min(n, ranked.size()));

    std::set<std::string> chosen;
    for (const auto& [name, total] : ranked) chosen.insert(name);
    std::vector<std::string> out;
    for (const auto& name : lexicon.names()) {
        if (chosen.count(name)) out.push_back(name);
    }
    return out;
}

void write_counts(std::ostream& out, const std::vector<AspectDayCount>& counts) {
    out << "aspect,date,positive,negative,neutral\n";
    for (const auto& c : counts) {
        out << detail::csv_escape(c.aspect) << ',' << c.date.to_string() << ',' << c.pos << ',' << c.neg << ','
            << c.neu << '\n';
    }
}

namespace {

std::uint64_t parse_count(std::string_view s, const std::string& where) {
    s = detail::trim(s);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw Error(ErrorCode::FormatError, where + ": bad count '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

std::vector<AspectDayCount> parse_counts(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        detail::split_csv_line(detail::trim(line)) !=
            std::vector<std::string>{"aspect", "date", "positive", "negative", "neutral"}) {
        throw Error(ErrorCode::FormatError, "counts line 1: expected header aspect,date,positive,negative,neutral");
    }
    std::vector<AspectDayCount> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) continue;
        const auto where = "counts line " + std::to_string(line_no);
        auto f = detail::split_csv_line(detail::trim(line));
        if (f.size() != 5) throw Error(ErrorCode::FormatError, where + ": expected 5 fields");
        auto date = CalendarDate::try_parse(f[1]);
        if (!date || f[0].empty()) throw Error(ErrorCode::FormatError, where + ": bad aspect or date");
        out.push_back({f[0], *date, parse_count(f[2], where), parse_count(f[3], where), parse_count(f[4], where)});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.aspect, a.date) < std::tie(b.aspect, b.date);
    });
    return out;
}

std::vector<AspectDayCount> parse_counts(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    return parse_counts(in);
}

void write_scores(std::ostream& out, const std::vector<AspectDayCount>& counts) {
    std::set<std::string> aspects;
    for (const auto& c : counts) aspects.insert(c.aspect);
    out << "aspect,date,kind,value\n";
    for (const auto& aspect : aspects) {
        for (ScoreKind kind : kAllScoreKinds) {
            auto series = score_series(counts, aspect, kind);
            for (const auto& [date, v] : series.values()) {
                out << detail::csv_escape(aspect) << ',' << date.to_string() << ',' << to_string(kind) << ','
                    << detail::format_double(v) << '\n';
            }
        }
    }
}

}  // namespace aspectstat
