#pragma once

#include <aspectstat/core.hpp>
#include <aspectstat/ingest.hpp>

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace aspectstat {

struct AspectLabel {
    std::string aspect;
    PolarityLabel polarity = PolarityLabel::Neutral;
    friend bool operator==(const AspectLabel&, const AspectLabel&) = default;
};

/// Assigns a polarity to every occurrence of every aspect in a text.
/// Implementations must be deterministic and emit nothing for texts that
/// contain no aspect.
class Labeler {
public:
    virtual ~Labeler() = default;
    virtual std::vector<AspectLabel> label(std::string_view text, const AspectLexicon& aspects) const = 0;
};

/// Positive and negative sentiment terms. Disjoint and both non-empty.
class PolarityLexicon {
public:
    PolarityLexicon(std::set<std::string> positive, std::set<std::string> negative);

    const std::set<std::string>& positive() const { return positive_; }
    const std::set<std::string>& negative() const { return negative_; }

private:
    std::set<std::string> positive_;
    std::set<std::string> negative_;
};

/// Each file holds one token per line; '#' comments and blanks skipped.
PolarityLexicon load_polarity_lexicon(const std::filesystem::path& positive_path,
                                      const std::filesystem::path& negative_path);
PolarityLexicon default_polarity_lexicon();

inline constexpr int kDefaultLabelWindow = 5;

/// Counts positive and negative terms within `window` tokens either side of
/// each aspect occurrence (aspect tokens excluded). More positives gives
/// Positive, more negatives Negative, a tie Neutral. Occurrences are
/// reported by start position; aspects starting at the same token follow
/// lexicon order.
std::vector<AspectLabel> lexicon_window_label(std::string_view text, const AspectLexicon& aspects,
                                              const PolarityLexicon& pol, int window = kDefaultLabelWindow);

class LexiconWindowLabeler final : public Labeler {
public:
    explicit LexiconWindowLabeler(PolarityLexicon pol, int window = kDefaultLabelWindow);
    std::vector<AspectLabel> label(std::string_view text, const AspectLexicon& aspects) const override;

private:
    PolarityLexicon pol_;
    int window_;
};

/// Labels every tweet and tags each label with the tweet's UTC date.
/// Output order follows tweet order, then occurrence order.
std::vector<LabeledMention> label_corpus(const std::vector<TweetRecord>& tweets, const Labeler& labeler,
                                         const AspectLexicon& aspects);

}  // namespace aspectstat
