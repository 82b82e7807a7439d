#include "stiglex/sentiment.h"

#include <algorithm>
#include <charconv>

#include "stiglex/error.h"
#include "stiglex/text.h"

namespace stiglex {

std::string_view to_string(Sentiment s) {
  switch (s) {
    case Sentiment::kPositive:
      return "positive";
    case Sentiment::kNegative:
      return "negative";
    case Sentiment::kNeutral:
      return "neutral";
  }
  return "?";
}

std::optional<Sentiment> sentiment_from_label(std::string_view label) {
  const std::string l = text::lowercase_ascii(text::trim(label));
  if (l == "positive" || l == "pos") return Sentiment::kPositive;
  if (l == "negative" || l == "neg") return Sentiment::kNegative;
  if (l == "neutral" || l == "neu") return Sentiment::kNeutral;
  int score = 0;
  const char* first = l.data();
  if (!l.empty() && l[0] == '+') {
    ++first;
  }
  const char* last = l.data() + l.size();
  auto [ptr, ec] = std::from_chars(first, last, score);
  if (ec == std::errc() && ptr == last && first != last) {
    if (score > 0) return Sentiment::kPositive;
    if (score < 0) return Sentiment::kNegative;
    return Sentiment::kNeutral;
  }
  return std::nullopt;
}

SentimentLexicon SentimentLexicon::load(const std::filesystem::path& path) {
  return parse(text::read_file(path), path.filename().string());
}

SentimentLexicon SentimentLexicon::parse(std::string_view content,
                                         const std::string& source) {
  SentimentLexicon lex;
  lex.source_ = source;
  std::optional<char> delim;
  std::size_t term_col = 0;
  std::size_t cat_col = 1;
  bool first_record = true;

  text::for_each_line(content, [&](std::string_view line, std::size_t no) {
    if (text::trim(line).empty()) {
      return;
    }
    if (!delim) {
      delim = line.find('\t') != std::string_view::npos ? '\t' : ',';
    }
    const auto fields = text::split_record(line, *delim);
    if (first_record) {
      first_record = false;
      std::optional<std::size_t> t;
      std::optional<std::size_t> c;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string name = text::lowercase_ascii(text::trim(fields[i]));
        if (!t && (name == "term" || name == "word")) t = i;
        if (!c && (name == "category" || name == "sentiment" ||
                   name == "polarity" || name == "label")) {
          c = i;
        }
      }
      if (t && c) {
        term_col = *t;
        cat_col = *c;
        return;
      }
    }
    if (fields.size() <= std::max(term_col, cat_col)) {
      throw ParseError(source, no, "expected term and category columns");
    }
    const auto category = sentiment_from_label(fields[cat_col]);
    if (!category) {
      throw ParseError(source, no,
                       "unknown sentiment category '" + fields[cat_col] + "'");
    }
    std::string key;
    try {
      key = normalize_term(fields[term_col]);
    } catch (const ValidationError& e) {
      throw ParseError(source, no, e.what());
    }
    const auto it = lex.entries_.find(key);
    if (it != lex.entries_.end()) {
      if (it->second != *category) {
        throw IntegrityError(source + ":" + std::to_string(no) + ": term '" +
                             key + "' is both " +
                             std::string(to_string(it->second)) + " and " +
                             std::string(to_string(*category)));
      }
      return;
    }
    lex.add(key, *category);
  });
  return lex;
}

void SentimentLexicon::add(std::string_view term, Sentiment category) {
  const auto [it, inserted] = entries_.emplace(std::string(term), category);
  if (!inserted) {
    if (it->second != category) {
      throw IntegrityError("term '" + std::string(term) +
                           "' has conflicting sentiment categories");
    }
    return;
  }
  ++counts_[static_cast<std::size_t>(category)];
}

std::optional<Sentiment> SentimentLexicon::classify(
    std::string_view normalized) const {
  const auto it = entries_.find(std::string(normalized));
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

double SentimentRow::proportion(Sentiment s) const {
  return matched == 0 ? 0.0
                      : static_cast<double>(count(s)) /
                            static_cast<double>(matched);
}

std::vector<std::string> SentimentRow::examples(Sentiment s,
                                                std::size_t n) const {
  const auto& all = terms[static_cast<std::size_t>(s)];
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(
                                         std::min(n, all.size()))};
}

SentimentRow classify_terms(std::string label,
                            std::span<const std::string> terms,
                            const SentimentLexicon& slex) {
  SentimentRow row;
  row.label = std::move(label);
  row.size = terms.size();
  for (const std::string& t : terms) {
    if (const auto s = slex.classify(t)) {
      const auto slot = static_cast<std::size_t>(*s);
      ++row.counts[slot];
      ++row.matched;
      row.terms[slot].push_back(t);
    }
  }
  for (auto& list : row.terms) {
    std::sort(list.begin(), list.end());
  }
  return row;
}

SentimentReport sentiment_report(std::span<const Lexicon> lexicons,
                                 std::span<const std::string> high_frequency,
                                 const SentimentLexicon& slex) {
  SentimentReport report;
  report.sentiment_source = slex.source();
  for (const Lexicon& lex : lexicons) {
    const auto terms = lex.normalized_terms();
    report.lexicons.push_back(classify_terms(lex.id(), terms, slex));
  }
  // Sum in lexicon-id order so the aggregate is invariant under input
  // permutation.
  std::vector<const SentimentRow*> ordered;
  for (const auto& row : report.lexicons) {
    if (row.matched > 0) {
      ordered.push_back(&row);
    }
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const SentimentRow* a, const SentimentRow* b) {
              return a->label < b->label;
            });
  std::size_t matched_total = 0;
  std::array<std::size_t, 3> category_total{};
  for (const SentimentRow* row : ordered) {
    matched_total += row->matched;
    for (std::size_t k = 0; k < 3; ++k) {
      category_total[k] += row->counts[k];
    }
  }
  if (!ordered.empty()) {
    for (Sentiment s : kAllSentiments) {
      const auto k = static_cast<std::size_t>(s);
      double sum = 0.0;
      for (const SentimentRow* row : ordered) {
        sum += row->proportion(s);
      }
      report.lexicon_mean[k] = sum / static_cast<double>(ordered.size());
      report.pooled[k] = static_cast<double>(category_total[k]) /
                         static_cast<double>(matched_total);
    }
  }
  report.high_frequency =
      classify_terms("high-frequency", high_frequency, slex);
  return report;
}

}  // namespace stiglex
