#include <aspectstat/labeler.hpp>
#include <aspectstat/tokenize.hpp>

#include "csv.hpp"

#include <algorithm>

namespace aspectstat {

PolarityLexicon::PolarityLexicon(std::set<std::string> positive, std::set<std::string> negative)
    : positive_(std::move(positive)), negative_(std::move(negative)) {
    if (positive_.empty() || negative_.empty()) {
        throw Error(ErrorCode::DomainError, "polarity lexicon needs both positive and negative terms");
    }
    for (const auto& t : positive_) {
        if (negative_.count(t)) throw Error(ErrorCode::DomainError, "term '" + t + "' is both positive and negative");
    }
}

namespace {

std::set<std::string> load_terms(const std::filesystem::path& path) {
    auto in = detail::open_input(path);
    std::set<std::string> terms;
    std::string line;
    while (std::getline(in, line)) {
        auto t = detail::trim(line);
        if (t.empty() || t.front() == '#') continue;
        for (auto& tok : tokenize(t)) terms.insert(std::move(tok));
    }
    return terms;
}

}  // namespace

PolarityLexicon load_polarity_lexicon(const std::filesystem::path& positive_path,
                                      const std::filesystem::path& negative_path) {
    return PolarityLexicon(load_terms(positive_path), load_terms(negative_path));
}

PolarityLexicon default_polarity_lexicon() {
    return PolarityLexicon(
        {"bull",    "bullish",    "boom",     "gain",     "gains",    "good",      "great",   "growth",
         "high",    "higher",     "improve",  "improved", "optimism", "optimistic", "outperform", "positive",
         "profit",  "profitable", "rally",    "rallies",  "rebound",  "recover",   "recovery", "rise",
         "rises",   "rising",     "soar",     "soaring",  "strong",   "stronger",  "surge",   "up",
         "upgrade", "win",        "beat",     "record",   "buy",      "cheap",     "cool",    "cooling"},
        {"bad",      "bear",    "bearish", "collapse", "concern", "concerns", "crash",     "crisis",
         "decline",  "down",    "downgrade", "drop",   "drops",   "fall",     "falls",     "falling",
         "fear",     "fears",   "loss",    "losses",   "low",     "lower",    "negative",  "panic",
         "plunge",   "poor",    "risk",    "sell",     "selloff", "slump",    "tank",      "weak",
         "weaker",   "worry",   "worse",   "worst",    "hike",    "hikes",    "miss"});
}

std::vector<AspectLabel> lexicon_window_label(std::string_view text, const AspectLexicon& aspects,
                                              const PolarityLexicon& pol, int window) {
    if (window < 1) throw Error(ErrorCode::DomainError, "label window must be >= 1");
    const auto tokens = tokenize(text);
    const auto& seqs = aspects.token_sequences();
    const auto w = static_cast<std::size_t>(window);

    std::vector<AspectLabel> out;
    for (std::size_t start = 0; start < tokens.size(); ++start) {
        for (std::size_t a = 0; a < seqs.size(); ++a) {
            const auto& seq = seqs[a];
            if (start + seq.size() > tokens.size() ||
                !std::equal(seq.begin(), seq.end(), tokens.begin() + static_cast<std::ptrdiff_t>(start))) {
                continue;
            }
            const std::size_t end = start + seq.size();
            const std::size_t lo = start >= w ? start - w : 0;
            const std::size_t hi = std::min(tokens.size(), end + w);
            int pos = 0, neg = 0;
            for (std::size_t i = lo; i < hi; ++i) {
                if (i >= start && i < end) continue;
                if (pol.positive().count(tokens[i])) ++pos;
                else if (pol.negative().count(tokens[i])) ++neg;
            }
            PolarityLabel label = PolarityLabel::Neutral;
            if (pos > neg) label = PolarityLabel::Positive;
            else if (neg > pos) label = PolarityLabel::Negative;
            out.push_back({aspects.names()[a], label});
        }
    }
    return out;
}

LexiconWindowLabeler::LexiconWindowLabeler(PolarityLexicon pol, int window) : pol_(std::move(pol)), window_(window) {
    if (window_ < 1) throw Error(ErrorCode::DomainError, "label window must be >= 1");
}

std::vector<AspectLabel> LexiconWindowLabeler::label(std::string_view text, const AspectLexicon& aspects) const {
    return lexicon_window_label(text, aspects, pol_, window_);
}

std::vector<LabeledMention> label_corpus(const std::vector<TweetRecord>& tweets, const Labeler& labeler,
                                         const AspectLexicon& aspects) {
    std::vector<LabeledMention> out;
    for (const auto& t : tweets) {
        const auto date = t.date();
        for (auto& l : labeler.label(t.text, aspects)) {
            out.push_back({t.id, date, std::move(l.aspect), l.polarity});
        }
    }
    return out;
}

}  // namespace aspectstat
