#ifndef STIGLEX_SENTIMENT_H_
#define STIGLEX_SENTIMENT_H_

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "stiglex/lexicon.h"

namespace stiglex {

enum class Sentiment { kPositive, kNegative, kNeutral };

inline constexpr std::array<Sentiment, 3> kAllSentiments = {
    Sentiment::kPositive, Sentiment::kNegative, Sentiment::kNeutral};

std::string_view to_string(Sentiment s);
// "positive"/"negative"/"neutral" (any case), their three-letter forms, or an
// integer polarity score (>0 positive, <0 negative, 0 neutral).
std::optional<Sentiment> sentiment_from_label(std::string_view label);

class SentimentLexicon {
 public:
  SentimentLexicon() = default;

  // CSV or TSV (tab wins when the first record holds one). The first two
  // columns are term and category unless a header names "term"/"word" and
  // "category"/"sentiment"/"polarity" columns. Keys go through
  // normalize_term. Unknown labels raise ParseError; one term with two
  // different categories raises IntegrityError.
  static SentimentLexicon load(const std::filesystem::path& path);
  static SentimentLexicon parse(std::string_view content,
                                const std::string& source);

  void add(std::string_view term, Sentiment category);

  const std::string& source() const { return source_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t count(Sentiment s) const {
    return counts_[static_cast<std::size_t>(s)];
  }
  std::optional<Sentiment> classify(std::string_view normalized) const;

 private:
  std::string source_;
  std::unordered_map<std::string, Sentiment> entries_;
  std::array<std::size_t, 3> counts_{};
};

// Exact match only. Multiword terms are unmatched unless listed verbatim.
inline std::optional<Sentiment> classify_term(std::string_view term,
                                              const SentimentLexicon& slex) {
  return slex.classify(term);
}

struct SentimentRow {
  std::string label;
  std::size_t size = 0;
  std::size_t matched = 0;
  std::array<std::size_t, 3> counts{};
  // Alphabetically sorted matched terms per category.
  std::array<std::vector<std::string>, 3> terms;

  std::size_t count(Sentiment s) const {
    return counts[static_cast<std::size_t>(s)];
  }
  // Proportion over matched terms; 0 when nothing matched.
  double proportion(Sentiment s) const;
  // First `n` terms of the category, alphabetically.
  std::vector<std::string> examples(Sentiment s, std::size_t n = 3) const;
};

struct SentimentReport {
  std::vector<SentimentRow> lexicons;  // input order
  SentimentRow high_frequency;
  // Category counts summed over the lexicon rows divided by the summed
  // matched counts (a term shared by two lexicons counts twice).
  std::array<double, 3> pooled{};
  // Unweighted mean of per-lexicon proportions, over lexicons that matched
  // at least one term.
  std::array<double, 3> lexicon_mean{};
  std::string sentiment_source;

  double pooled_proportion(Sentiment s) const {
    return pooled[static_cast<std::size_t>(s)];
  }
  double mean_proportion(Sentiment s) const {
    return lexicon_mean[static_cast<std::size_t>(s)];
  }
};

SentimentRow classify_terms(std::string label,
                            std::span<const std::string> terms,
                            const SentimentLexicon& slex);

SentimentReport sentiment_report(std::span<const Lexicon> lexicons,
                                 std::span<const std::string> high_frequency,
                                 const SentimentLexicon& slex);

}  // namespace stiglex

#endif  // STIGLEX_SENTIMENT_H_
