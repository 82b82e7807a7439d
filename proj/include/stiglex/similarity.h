#ifndef STIGLEX_SIMILARITY_H_
#define STIGLEX_SIMILARITY_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stiglex/lexicon.h"
#include "stiglex/wordnet.h"

namespace stiglex {

enum class SynsetAggregation { kMax, kMean };
enum class MissingPolicy { kZero, kExclude };

std::string_view to_string(SynsetAggregation a);
std::string_view to_string(MissingPolicy m);
std::optional<SynsetAggregation> aggregation_from_name(std::string_view name);
std::optional<MissingPolicy> missing_policy_from_name(std::string_view name);

struct SimilarityConfig {
  // Reduction over the same-pos synset cross-pairs of two terms.
  SynsetAggregation synset_aggregation = SynsetAggregation::kMax;
  // Term pairs without any comparable synset pair: scored 0 and kept in the
  // denominator (kZero) or dropped from it (kExclude).
  MissingPolicy missing_policy = MissingPolicy::kZero;
  std::set<PartOfSpeech> pos_scope{PartOfSpeech::kNoun, PartOfSpeech::kVerb};
  // Scores above this are labelled strong. Labelling never changes scores.
  double strong_threshold = 2.5;

  // Throws ConfigError.
  void validate() const;
  bool is_strong(double score) const { return score > strong_threshold; }
};

// -ln((distance + 1) / (2 * max_depth)).
double lch_from_distance(int distance, int max_depth);

// Leacock-Chodorow similarity of two synsets of the same noun or verb
// taxonomy; nullopt when they share no ancestor.
std::optional<double> lch_similarity(SynsetId a, SynsetId b,
                                     const TaxonomyGraph& graph);

// Caches per-term synset expansions (with their ancestor maps) so repeated
// term comparisons avoid re-walking the taxonomy. Not thread-safe for
// insertion; call prepare() before sharing across threads.
class TermExpander {
 public:
  struct Expansion {
    SynsetId id;
    AncestorMap ancestors;
  };

  TermExpander(const TaxonomyGraph& graph, const SimilarityConfig& cfg);

  void prepare(std::span<const std::string> terms);
  const std::vector<Expansion>& expand(const std::string& term);
  const std::vector<Expansion>& expanded(const std::string& term) const;

  std::optional<double> similarity(const std::string& w1,
                                   const std::string& w2) const;

 private:
  std::vector<Expansion> compute(const std::string& term) const;

  const TaxonomyGraph& graph_;
  SimilarityConfig cfg_;
  std::unordered_map<std::string, std::vector<Expansion>> cache_;
};

std::optional<double> term_similarity(const std::string& w1,
                                      const std::string& w2,
                                      const TaxonomyGraph& graph,
                                      const SimilarityConfig& cfg = {});

struct LexiconPairScore {
  std::string lexicon_a;
  std::string lexicon_b;
  double s_avg = 0.0;
  long long pair_count = 0;       // term pairs in the denominator
  long long excluded_pairs = 0;   // dropped under MissingPolicy::kExclude
  long long undefined_pairs = 0;  // pairs without a comparable synset pair
};

// Mean term similarity over the full term cross-product. `workers` splits the
// cross-product across threads. Defined values are summed in ascending order,
// so the result is bit-identical for any worker count and argument order.
LexiconPairScore lexicon_pair_similarity(const Lexicon& a, const Lexicon& b,
                                         const TaxonomyGraph& graph,
                                         const SimilarityConfig& cfg = {},
                                         unsigned workers = 1);

class SimilarityMatrix {
 public:
  const std::vector<std::string>& ids() const { return ids_; }
  const SimilarityConfig& config() const { return config_; }
  const std::string& wordnet_release() const { return release_; }
  const LexiconPairScore& at(const std::string& a, const std::string& b) const;
  // Mean over unordered off-diagonal pairs.
  double off_diagonal_mean() const;
  std::size_t distinct_computations() const { return computations_; }

 private:
  friend SimilarityMatrix similarity_matrix(std::span<const Lexicon>,
                                            const TaxonomyGraph&,
                                            const SimilarityConfig&, unsigned);

  std::vector<std::string> ids_;
  std::map<std::pair<std::string, std::string>, LexiconPairScore> scores_;
  SimilarityConfig config_;
  std::string release_;
  std::size_t computations_ = 0;
};

// Every unordered pair (diagonal included) once, mirrored. Needs at least two
// lexicons with distinct ids (ConfigError otherwise).
SimilarityMatrix similarity_matrix(std::span<const Lexicon> lexicons,
                                   const TaxonomyGraph& graph,
                                   const SimilarityConfig& cfg = {},
                                   unsigned workers = 1);

}  // namespace stiglex

#endif  // STIGLEX_SIMILARITY_H_
