#ifndef STIGLEX_TESTS_SUPPORT_H_
#define STIGLEX_TESTS_SUPPORT_H_

// Shared fixtures, generators and brute-force oracles for the test binaries.
// The oracles deliberately avoid the library's own traversal helpers
// (ancestors(), parent_indices(), closest_common_distance) and walk the raw
// Synset::hypernyms lists instead.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "stiglex/lexicon.h"
#include "stiglex/similarity.h"
#include "stiglex/text.h"
#include "stiglex/wordnet.h"

namespace testsupport {

namespace fs = std::filesystem;

inline fs::path fixture(const std::string& rel) {
  return fs::path(STIGLEX_TEST_FIXTURES) / rel;
}

inline fs::path golden(const std::string& rel) {
  return fs::path(STIGLEX_TEST_GOLDEN) / rel;
}

// Directory named by an environment variable, if set and present.
inline std::optional<fs::path> env_path(const char* name) {
  const char* v = std::getenv(name);
  if (v == nullptr || *v == '\0' || !fs::exists(v)) {
    return std::nullopt;
  }
  return fs::path(v);
}

inline std::optional<fs::path> wordnet_dir() {
  return env_path("STIGLEX_WORDNET_DIR");
}

inline std::string slurp(const fs::path& p) { return stiglex::text::read_file(p); }

inline void write_file(const fs::path& p, const std::string& content) {
  fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary | std::ios::trunc);
  f << content;
}

class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    std::random_device rd;
    path_ = fs::temp_directory_path() /
            ("stiglex-test-" + std::to_string(rd()) + "-" +
             std::to_string(++counter));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  fs::path path_;
};

inline stiglex::SynsetId noun(std::uint32_t offset) {
  return {offset, stiglex::PartOfSpeech::kNoun};
}

inline stiglex::SynsetId verb(std::uint32_t offset) {
  return {offset, stiglex::PartOfSpeech::kVerb};
}

// root(1) -> a(2) -> b(3) -> d(5), root -> c(4); lemmas match the names.
inline stiglex::TaxonomyGraph tiny_taxonomy() {
  using stiglex::Synset;
  std::vector<Synset> s = {
      {noun(1), {"root"}, {}, ""},
      {noun(2), {"a"}, {noun(1)}, ""},
      {noun(3), {"b"}, {noun(2)}, ""},
      {noun(4), {"c"}, {noun(1)}, ""},
      {noun(5), {"d"}, {noun(3)}, ""},
  };
  return stiglex::TaxonomyGraph::from_synsets(std::move(s));
}

inline stiglex::TaxonomyGraph mini_wordnet() {
  return stiglex::TaxonomyGraph::load(fixture("mini_wordnet"));
}

// Random hypernym DAG (or forest of trees when max_parents == 1). Node i takes
// parents among lower indices, so the result is acyclic. Lemmas "w<i>", plus a
// shared lemma "poly<k>" on a few synsets to exercise multi-synset terms.
// Offsets are 1-based; verbs get `roots` separate roots, nouns a single one.
inline std::vector<stiglex::Synset> random_taxonomy(std::mt19937_64& rng,
                                                    int nouns, int verbs,
                                                    int max_parents,
                                                    int verb_roots = 2) {
  using stiglex::PartOfSpeech;
  std::vector<stiglex::Synset> out;
  auto build = [&](PartOfSpeech pos, int n, int roots, const char* prefix) {
    for (int i = 0; i < n; ++i) {
      stiglex::Synset s;
      s.id = {static_cast<std::uint32_t>(i + 1), pos};
      s.lemmas = {std::string(prefix) + std::to_string(i)};
      if (i % 7 == 3) {
        s.lemmas.push_back("poly" + std::to_string(i % 3));
      }
      if (i >= roots) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        std::uniform_int_distribution<int> count(1, max_parents);
        const int k = count(rng);
        std::set<int> parents;
        for (int j = 0; j < k; ++j) {
          parents.insert(pick(rng));
        }
        for (int p : parents) {
          s.hypernyms.push_back({static_cast<std::uint32_t>(p + 1), pos});
        }
      }
      out.push_back(std::move(s));
    }
  };
  build(PartOfSpeech::kNoun, nouns, 1, "n");
  build(PartOfSpeech::kVerb, verbs, verb_roots, "v");
  return out;
}

// ---- oracles -------------------------------------------------------------

// Every upward path from `id`, enumerated exhaustively; records the minimal
// number of edges to each ancestor (itself at 0).
inline void enumerate_paths(const stiglex::TaxonomyGraph& g, stiglex::SynsetId id,
                            int depth,
                            std::map<stiglex::SynsetId, int>& best) {
  auto it = best.find(id);
  if (it == best.end() || depth < it->second) {
    best[id] = depth;
  }
  for (const auto& h : g.at(id).hypernyms) {
    enumerate_paths(g, h, depth + 1, best);
  }
}

inline std::optional<int> oracle_distance(const stiglex::TaxonomyGraph& g,
                                          stiglex::SynsetId a,
                                          stiglex::SynsetId b) {
  std::map<stiglex::SynsetId, int> ua, ub;
  enumerate_paths(g, a, 0, ua);
  enumerate_paths(g, b, 0, ub);
  std::optional<int> best;
  for (const auto& [id, da] : ua) {
    auto it = ub.find(id);
    if (it != ub.end() && (!best || da + it->second < *best)) {
      best = da + it->second;
    }
  }
  return best;
}

// Longest upward chain from `id`, by enumerating every path.
inline int longest_path_up(const stiglex::TaxonomyGraph& g, stiglex::SynsetId id) {
  int best = 0;
  for (const auto& h : g.at(id).hypernyms) {
    best = std::max(best, 1 + longest_path_up(g, h));
  }
  return best;
}

struct DepthOracle {
  int longest = 0;
  std::size_t roots = 0;
  int max_depth = 0;  // longest, plus the virtual top edge with several roots
};

// Exhaustive DFS over every hypernym path. Only leaves (synsets nobody lists
// as a hypernym) start a walk: any longest chain can be extended down to one.
inline DepthOracle oracle_depth(const stiglex::TaxonomyGraph& g,
                                stiglex::PartOfSpeech pos) {
  std::set<stiglex::SynsetId> has_child;
  for (const auto& s : g.synsets()) {
    for (const auto& h : s.hypernyms) {
      has_child.insert(h);
    }
  }
  DepthOracle o;
  for (const auto& s : g.synsets()) {
    if (s.id.pos != pos) continue;
    if (s.hypernyms.empty()) ++o.roots;
    if (has_child.contains(s.id)) continue;
    // iterative path enumeration: (node, depth)
    std::vector<std::pair<stiglex::SynsetId, int>> stack{{s.id, 0}};
    while (!stack.empty()) {
      auto [id, d] = stack.back();
      stack.pop_back();
      o.longest = std::max(o.longest, d);
      for (const auto& h : g.at(id).hypernyms) {
        stack.emplace_back(h, d + 1);
      }
    }
  }
  o.max_depth = o.longest + (o.roots > 1 ? 1 : 0);
  return o;
}

// Term similarity written straight from the definition: every same-pos synset
// pair of the two terms, LCH per pair from the oracle distance, reduced by max
// or mean over the defined pairs.
inline std::optional<double> oracle_term_similarity(
    const stiglex::TaxonomyGraph& g, const std::string& w1,
    const std::string& w2, const stiglex::SimilarityConfig& cfg) {
  std::vector<double> values;
  for (auto pos : cfg.pos_scope) {
    const auto s1 = g.lookup(w1, pos);
    const auto s2 = g.lookup(w2, pos);
    const int d_max = g.max_depth(pos);
    for (const auto* a : s1) {
      for (const auto* b : s2) {
        if (auto d = oracle_distance(g, a->id, b->id)) {
          values.push_back(-std::log((*d + 1.0) / (2.0 * d_max)));
        }
      }
    }
  }
  if (values.empty()) return std::nullopt;
  if (cfg.synset_aggregation == stiglex::SynsetAggregation::kMax) {
    return *std::max_element(values.begin(), values.end());
  }
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

// Double sum over the term cross-product, in plain row-major order.
inline double oracle_s_avg(const stiglex::TaxonomyGraph& g,
                           const std::vector<std::string>& a,
                           const std::vector<std::string>& b,
                           const stiglex::SimilarityConfig& cfg) {
  double sum = 0;
  long long n = 0;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const auto s = oracle_term_similarity(g, x, y, cfg);
      if (s) {
        sum += *s;
        ++n;
      } else if (cfg.missing_policy == stiglex::MissingPolicy::kZero) {
        ++n;
      }
    }
  }
  return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

// Random term list drawn from `pool`, with optional duplicates dropped.
inline std::vector<std::string> sample_terms(std::mt19937_64& rng,
                                             const std::vector<std::string>& pool,
                                             std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> len(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::set<std::string> terms;
  const std::size_t n = len(rng);
  while (terms.size() < n) {
    terms.insert(pool[pick(rng)]);
  }
  return {terms.begin(), terms.end()};
}

// ---- planted-term corpus --------------------------------------------------

struct Planted {
  std::size_t start;
  std::size_t end;
  std::string term;
};

struct PlantedDoc {
  std::string id;
  std::string text;
  std::vector<Planted> expected;
};

// Terms the generator plants, and filler that must never match: near misses
// built from the same words ("noncombative", "combative-appearing",
// "drug seeking", "refused") sit right next to the planted terms.
inline const std::vector<std::string>& planted_terms() {
  static const std::vector<std::string> t = {
      "noncompliant", "drug-seeking", "in denial", "difficult patient",
      "combative",    "angry",        "refuse",    "\u00e9vasif"};
  return t;
}

inline const std::vector<std::string>& filler_words() {
  static const std::vector<std::string> f = {
      "the",      "pt",         "was",           "seen",    "noncombative",
      "refused",  "denial",     "patient",       "drug",    "seeking",
      "calm",     "non-compliant", "combative-appearing", "angrily",
      "difficulty", "\u00e9vasive", "x-ray"};
  return f;
}

// Random casing per code point, and whitespace runs where the term has a space.
inline std::string surface_variant(std::mt19937_64& rng, const std::string& term) {
  std::bernoulli_distribution upper(0.3);
  std::uniform_int_distribution<int> ws(0, 3);
  std::string out;
  for (const auto& cp : stiglex::text::decode_utf8(term)) {
    if (cp.value == U' ') {
      static const char* runs[] = {" ", "  ", "\t", " \n "};
      out += runs[ws(rng)];
    } else if (upper(rng) && cp.value < 0x80) {
      out += static_cast<char>(std::toupper(static_cast<int>(cp.value)));
    } else if (cp.value == U'\u00e9' && upper(rng)) {
      out += "\u00c9";
    } else {
      stiglex::text::append_utf8(out, cp.value);
    }
  }
  return out;
}

inline PlantedDoc planted_document(std::mt19937_64& rng, const std::string& id,
                                   int max_terms) {
  static const std::vector<std::string> seps = {" ", "  ", ", ", ". ", "\n",
                                                " (", ") ", "; ", "\" "};
  const auto& terms = planted_terms();
  const auto& filler = filler_words();
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<std::size_t> pick_term(0, terms.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_fill(0, filler.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_sep(0, seps.size() - 1);
  std::uniform_int_distribution<int> gap(0, 3);

  PlantedDoc doc{id, "", {}};
  const int k = count(rng);
  auto add_filler = [&] {
    for (int g = gap(rng); g > 0; --g) {
      doc.text += filler[pick_fill(rng)];
      doc.text += seps[pick_sep(rng)];
    }
  };
  for (int i = 0; i < k; ++i) {
    add_filler();
    const std::string& term = terms[pick_term(rng)];
    const std::size_t start = doc.text.size();
    doc.text += surface_variant(rng, term);
    doc.expected.push_back({start, doc.text.size(), term});
    doc.text += seps[pick_sep(rng)];
  }
  add_filler();
  return doc;
}

}  // namespace testsupport

#endif  // STIGLEX_TESTS_SUPPORT_H_
