#ifndef STIGLEX_WORDNET_H_
#define STIGLEX_WORDNET_H_

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace stiglex {

enum class PartOfSpeech : std::uint8_t { kNoun, kVerb, kAdjective, kAdverb };

inline constexpr std::array<PartOfSpeech, 4> kAllPartsOfSpeech = {
    PartOfSpeech::kNoun, PartOfSpeech::kVerb, PartOfSpeech::kAdjective,
    PartOfSpeech::kAdverb};

// "noun", "verb", "adjective", "adverb".
std::string_view pos_name(PartOfSpeech pos);
// Single-letter WordNet tag: n, v, a, r.
char pos_tag(PartOfSpeech pos);
// Accepts n, v, a, s (adjective satellite) and r.
std::optional<PartOfSpeech> pos_from_tag(char tag);
std::optional<PartOfSpeech> pos_from_name(std::string_view name);

// Only nouns and verbs carry a hypernym taxonomy.
constexpr bool has_taxonomy(PartOfSpeech pos) {
  return pos == PartOfSpeech::kNoun || pos == PartOfSpeech::kVerb;
}

struct SynsetId {
  std::uint32_t offset = 0;
  PartOfSpeech pos = PartOfSpeech::kNoun;

  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

// "02084071-n"
std::string to_string(SynsetId id);

struct SynsetIdHash {
  std::size_t operator()(SynsetId id) const noexcept {
    return (static_cast<std::size_t>(id.offset) << 2) |
           static_cast<std::size_t>(id.pos);
  }
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;  // as written in the data file
  std::vector<SynsetId> hypernyms;
  std::string gloss;
};

struct LoadOptions {
  // Treat instance hypernyms (@i) as ordinary hypernym edges.
  bool include_instance_hypernyms = true;
};

// Ancestors of one synset with their minimal upward distance in edges,
// sorted by dense synset index. The synset itself is included at 0.
using AncestorMap = std::vector<std::pair<std::uint32_t, int>>;

// Minimum of da + db over common entries, or nullopt when none.
std::optional<int> closest_common_distance(const AncestorMap& a,
                                           const AncestorMap& b);

// Parsed WordNet database: synsets, hypernym DAG, lemma index and the depth
// constant per part of speech. Immutable once built; all queries are const.
//
// Depth convention: roots have depth 0 and depths count edges. When a part of
// speech has several roots (WordNet verbs), a virtual top node joins them, so
// max_depth is the longest chain plus one edge. With one root (WordNet 3.0
// nouns) max_depth is exactly the longest chain. Path distances never pass
// through the virtual node.
class TaxonomyGraph {
 public:
  static TaxonomyGraph load(const std::filesystem::path& dict_dir,
                            const LoadOptions& options = {});

  // Builds a graph from in-memory synsets. The lemma index is derived from the
  // synsets' own lemmas in input order. Used by fixtures and tests.
  static TaxonomyGraph from_synsets(std::vector<Synset> synsets,
                                    std::string release = "fixture",
                                    const LoadOptions& options = {});

  const std::string& release() const { return release_; }
  const LoadOptions& options() const { return options_; }

  std::size_t size() const { return synsets_.size(); }
  std::size_t size(PartOfSpeech pos) const;
  std::span<const Synset> synsets() const { return synsets_; }

  const Synset* find(SynsetId id) const;
  const Synset& at(SynsetId id) const;

  // Exact lemma lookup. `term` is a normalized term; spaces become
  // underscores. Falls back to hyphens-as-underscores, then hyphens removed.
  // Out-of-vocabulary terms give an empty result.
  std::vector<const Synset*> lookup(
      std::string_view term,
      std::optional<PartOfSpeech> pos = std::nullopt) const;

  // Edges on the shortest path through a common hypernym ancestor, nullopt
  // without one. Throws ContractError on mixed parts of speech and
  // UnsupportedPosError for adjectives and adverbs.
  std::optional<int> shortest_path_distance(SynsetId a, SynsetId b) const;

  AncestorMap ancestors(SynsetId id) const;

  int max_depth(PartOfSpeech pos) const;
  // Longest hypernym chain in edges, without the virtual top node.
  int longest_chain(PartOfSpeech pos) const;
  std::size_t root_count(PartOfSpeech pos) const;
  // Depth of one synset: longest chain from it to a root.
  int depth(SynsetId id) const;

  std::span<const std::uint32_t> parent_indices(std::uint32_t index) const;
  std::uint32_t index_of(SynsetId id) const;

 private:
  TaxonomyGraph() = default;
  void finalize();
  void require_taxonomy_pair(SynsetId a, SynsetId b) const;

  std::string release_;
  LoadOptions options_;
  std::vector<Synset> synsets_;
  std::unordered_map<SynsetId, std::uint32_t, SynsetIdHash> index_;
  std::vector<std::vector<std::uint32_t>> parents_;
  std::vector<int> depth_;
  // key: lemma with underscores, lowercase
  std::array<std::unordered_map<std::string, std::vector<std::uint32_t>>, 4>
      lemma_index_;
  std::array<int, 4> longest_chain_{};
  std::array<std::size_t, 4> roots_{};
  std::array<std::size_t, 4> counts_{};

  friend class WordNetLoader;
};

inline TaxonomyGraph load_wordnet(const std::filesystem::path& dict_dir,
                                  const LoadOptions& options = {}) {
  return TaxonomyGraph::load(dict_dir, options);
}

inline std::vector<const Synset*> lookup_synsets(
    std::string_view term, std::optional<PartOfSpeech> pos,
    const TaxonomyGraph& graph) {
  return graph.lookup(term, pos);
}

inline std::optional<int> shortest_path_distance(SynsetId a, SynsetId b,
                                                 const TaxonomyGraph& graph) {
  return graph.shortest_path_distance(a, b);
}

}  // namespace stiglex

#endif  // STIGLEX_WORDNET_H_
