#ifndef STIGLEX_LEXICON_H_
#define STIGLEX_LEXICON_H_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stiglex {

// Canonical form used for every cross-lexicon comparison: NFC, lowercase,
// whitespace runs collapsed to one space, leading and trailing whitespace and
// punctuation stripped. Internal hyphens and apostrophes survive.
// Throws ValidationError when nothing is left.
std::string normalize_term(std::string_view raw);

struct Term {
  std::string raw;
  std::string normalized;

  static Term from_raw(std::string_view raw);
};

enum class SourceFormat { kLines, kCsv };

struct Exclusion {
  std::string term;  // raw, normalized on use
  std::string reason;
};

struct ManifestEntry {
  std::string id;
  std::string citation;
  std::filesystem::path source;  // absolute once loaded through a manifest
  SourceFormat format = SourceFormat::kLines;
  std::vector<Exclusion> exclusions;
};

// JSON document:
//   { "lexicons": [ { "id", "citation", "source", "format": "lines"|"csv",
//                     "exclusions": [ { "term", "reason" } ] } ] }
// Source paths are resolved against the manifest's directory.
struct LexiconManifest {
  std::vector<ManifestEntry> entries;

  static LexiconManifest load(const std::filesystem::path& path);
  static LexiconManifest parse(std::string_view json,
                               const std::filesystem::path& base_dir,
                               const std::string& source_name = "manifest");
};

struct ExcludedTerm {
  Term term;
  std::string reason;
};

class Lexicon {
 public:
  Lexicon(std::string id, std::string citation);

  // Convenience for tests and fixtures: normalizes and deduplicates.
  static Lexicon from_terms(std::string id,
                            const std::vector<std::string>& raw_terms);

  const std::string& id() const { return id_; }
  const std::string& citation() const { return citation_; }
  // Sorted by normalized form, unique.
  const std::vector<Term>& terms() const { return terms_; }
  const std::vector<ExcludedTerm>& excluded() const { return excluded_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  bool contains(std::string_view normalized) const;
  std::vector<std::string> normalized_terms() const;

  // Returns false if the normalized form was already present.
  bool add(Term term);
  // Removes the term; returns false if it was not present.
  bool exclude(std::string_view normalized, std::string reason);

 private:
  std::string id_;
  std::string citation_;
  std::vector<Term> terms_;
  std::vector<ExcludedTerm> excluded_;
};

// Reads the source file, normalizes, deduplicates and applies the entry's
// exclusions. An exclusion that matches no term is a ValidationError, as is a
// lexicon left empty.
Lexicon ingest_lexicon(const ManifestEntry& entry);
std::vector<Lexicon> ingest_manifest(const LexiconManifest& manifest);

std::set<std::string> build_master_list(std::span<const Lexicon> lexicons);

struct ConsensusEntry {
  std::string term;
  std::vector<std::string> members;  // sorted lexicon ids
  int count = 0;
  bool high_frequency = false;
};

struct ConsensusReport {
  std::size_t master_size = 0;
  double threshold_fraction = 0.5;
  int min_count = 0;                      // ceil(threshold_fraction * N)
  std::vector<std::string> lexicon_ids;   // sorted
  std::vector<ConsensusEntry> entries;    // sorted by term
  std::map<std::string, int> coverage;    // lexicon id -> high-frequency terms

  std::vector<std::string> high_frequency() const;
  const ConsensusEntry* find(std::string_view term) const;
};

// Majority vote: a term is high-frequency when it appears in at least
// ceil(threshold_fraction * N) of the N lexicons. Requires N >= 2 and
// 0 < threshold_fraction <= 1 (ConfigError otherwise).
ConsensusReport consensus_analysis(std::span<const Lexicon> lexicons,
                                   double threshold_fraction = 0.5);

int majority_min_count(double threshold_fraction, std::size_t lexicon_count);

}  // namespace stiglex

#endif  // STIGLEX_LEXICON_H_
