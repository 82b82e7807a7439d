#ifndef STIGLEX_SCANNER_H_
#define STIGLEX_SCANNER_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stiglex/lexicon.h"
#include "stiglex/sentiment.h"

namespace stiglex {

struct Document {
  std::string id;
  std::string text;
};

struct Annotation {
  std::size_t start = 0;  // byte offsets, end exclusive
  std::size_t end = 0;
  std::string surface;
  std::string term;
  std::vector<std::string> lexicon_ids;  // sorted
  int consensus_count = 0;
  std::optional<Sentiment> sentiment;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct Pattern {
  std::string term;
  std::vector<std::string> lexicon_ids;
  int consensus_count = 0;
  std::optional<Sentiment> sentiment;
};

// Multi-pattern matcher over the normalized terms of a set of lexicons.
//
// Matching is case-insensitive per code point, a space inside a term matches
// any run of whitespace, and matches must start and end on word boundaries
// (text edge or a character that is neither alphanumeric nor a hyphen).
// Overlaps resolve leftmost-longest.
class Matcher {
 public:
  // Throws ConfigError when there are no lexicons or no terms.
  static Matcher compile(std::span<const Lexicon> lexicons,
                         const SentimentLexicon& slex,
                         const ConsensusReport* consensus = nullptr);

  std::size_t pattern_count() const { return patterns_.size(); }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Pattern* find(std::string_view term) const;

  std::vector<Annotation> scan(std::string_view text) const;

 private:
  struct Node {
    std::vector<std::pair<char32_t, std::uint32_t>> next;  // sorted
    std::uint32_t space_next = 0;                          // 0 = none
    int pattern = -1;
  };

  std::uint32_t child(std::uint32_t node, char32_t cp) const;
  void insert(const std::string& term, int pattern);

  std::vector<Pattern> patterns_;  // sorted by term
  std::vector<Node> nodes_;
};

inline Matcher compile_matcher(std::span<const Lexicon> lexicons,
                               const SentimentLexicon& slex,
                               const ConsensusReport& consensus) {
  return Matcher::compile(lexicons, slex, &consensus);
}

inline std::vector<Annotation> scan_document(const Document& doc,
                                             const Matcher& m) {
  return m.scan(doc.text);
}

struct DocumentResult {
  std::string id;
  std::vector<Annotation> annotations;
  bool flagged = false;
};

struct ScanReport {
  std::vector<DocumentResult> documents;  // sorted by id
  std::size_t scanned = 0;
  std::size_t flagged = 0;
  double fraction_flagged = 0.0;
  // (term, occurrences), count descending then term ascending.
  std::vector<std::pair<std::string, std::size_t>> ranking;
};

// Duplicate document ids raise InputError.
ScanReport scan_corpus(std::span<const Document> documents, const Matcher& m,
                       unsigned workers = 1);

// A directory of .txt files (id = file stem) or a JSON-lines file of
// {"id", "text"} records. Malformed JSON-lines raise ParseError with the line.
std::vector<Document> read_corpus(const std::filesystem::path& path);

}  // namespace stiglex

#endif  // STIGLEX_SCANNER_H_
