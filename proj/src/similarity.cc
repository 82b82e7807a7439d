#include "stiglex/similarity.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "stiglex/error.h"

namespace stiglex {

namespace {

LexiconPairScore score_pair(const Lexicon& a, const Lexicon& b,
                            const TermExpander& expander,
                            const SimilarityConfig& cfg, unsigned workers) {
  if (a.empty() || b.empty()) {
    throw ContractError("lexicon pair similarity needs non-empty lexicons");
  }
  const auto rows = a.terms().size();
  const auto cols = b.terms().size();
  std::vector<std::optional<double>> values(rows * cols);

  auto fill_rows = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < rows; i += stride) {
      const std::string& w1 = a.terms()[i].normalized;
      for (std::size_t j = 0; j < cols; ++j) {
        values[i * cols + j] = expander.similarity(w1, b.terms()[j].normalized);
      }
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(rows)));
  if (workers == 1) {
    fill_rows(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(fill_rows, w, workers);
    }
  }

  LexiconPairScore score;
  score.lexicon_a = a.id();
  score.lexicon_b = b.id();
  std::vector<double> defined;
  defined.reserve(values.size());
  for (const auto& v : values) {
    if (v) {
      defined.push_back(*v);
      ++score.pair_count;
      continue;
    }
    ++score.undefined_pairs;
    if (cfg.missing_policy == MissingPolicy::kZero) {
      ++score.pair_count;
    } else {
      ++score.excluded_pairs;
    }
  }
  std::sort(defined.begin(), defined.end());
  double sum = 0.0;
  for (double v : defined) {
    sum += v;
  }
  score.s_avg = score.pair_count > 0
                    ? sum / static_cast<double>(score.pair_count)
                    : 0.0;
  return score;
}

}  // namespace

std::string_view to_string(SynsetAggregation a) {
  return a == SynsetAggregation::kMax ? "max" : "mean";
}

std::string_view to_string(MissingPolicy m) {
  return m == MissingPolicy::kZero ? "zero" : "exclude";
}

std::optional<SynsetAggregation> aggregation_from_name(std::string_view name) {
  if (name == "max") return SynsetAggregation::kMax;
  if (name == "mean") return SynsetAggregation::kMean;
  return std::nullopt;
}

std::optional<MissingPolicy> missing_policy_from_name(std::string_view name) {
  if (name == "zero") return MissingPolicy::kZero;
  if (name == "exclude") return MissingPolicy::kExclude;
  return std::nullopt;
}

void SimilarityConfig::validate() const {
  if (!(strong_threshold > 0.0)) {
    throw ConfigError("strong threshold must be positive");
  }
  if (pos_scope.empty()) {
    throw ConfigError("similarity pos scope is empty");
  }
  for (PartOfSpeech pos : pos_scope) {
    if (!has_taxonomy(pos)) {
      throw ConfigError("similarity pos scope may only contain noun and verb");
    }
  }
}

double lch_from_distance(int distance, int max_depth) {
  return -std::log(static_cast<double>(distance + 1) /
                   (2.0 * static_cast<double>(max_depth)));
}

std::optional<double> lch_similarity(SynsetId a, SynsetId b,
                                     const TaxonomyGraph& graph) {
  const auto d = graph.shortest_path_distance(a, b);
  if (!d) {
    return std::nullopt;
  }
  return lch_from_distance(*d, graph.max_depth(a.pos));
}

TermExpander::TermExpander(const TaxonomyGraph& graph,
                           const SimilarityConfig& cfg)
    : graph_(graph), cfg_(cfg) {
  cfg_.validate();
}

std::vector<TermExpander::Expansion> TermExpander::compute(
    const std::string& term) const {
  std::vector<Expansion> out;
  for (PartOfSpeech pos : cfg_.pos_scope) {
    for (const Synset* s : graph_.lookup(term, pos)) {
      out.push_back({s->id, graph_.ancestors(s->id)});
    }
  }
  return out;
}

void TermExpander::prepare(std::span<const std::string> terms) {
  for (const auto& t : terms) {
    expand(t);
  }
}

const std::vector<TermExpander::Expansion>& TermExpander::expand(
    const std::string& term) {
  auto it = cache_.find(term);
  if (it == cache_.end()) {
    it = cache_.emplace(term, compute(term)).first;
  }
  return it->second;
}

const std::vector<TermExpander::Expansion>& TermExpander::expanded(
    const std::string& term) const {
  const auto it = cache_.find(term);
  if (it == cache_.end()) {
    throw ContractError("term '" + term + "' was not prepared");
  }
  return it->second;
}

std::optional<double> TermExpander::similarity(const std::string& w1,
                                               const std::string& w2) const {
  // Canonical argument order keeps the mean reduction exactly symmetric.
  const bool swap = w2 < w1;
  const auto& e1 = expanded(swap ? w2 : w1);
  const auto& e2 = expanded(swap ? w1 : w2);
  std::optional<double> best;
  double sum = 0.0;
  int defined = 0;
  for (const Expansion& x : e1) {
    for (const Expansion& y : e2) {
      if (x.id.pos != y.id.pos) {
        continue;
      }
      const auto d = x.id == y.id ? std::optional<int>(0)
                                  : closest_common_distance(x.ancestors,
                                                            y.ancestors);
      if (!d) {
        continue;
      }
      const double v = lch_from_distance(*d, graph_.max_depth(x.id.pos));
      if (!best || v > *best) {
        best = v;
      }
      sum += v;
      ++defined;
    }
  }
  if (defined == 0) {
    return std::nullopt;
  }
  if (cfg_.synset_aggregation == SynsetAggregation::kMean) {
    return sum / defined;
  }
  return best;
}

std::optional<double> term_similarity(const std::string& w1,
                                      const std::string& w2,
                                      const TaxonomyGraph& graph,
                                      const SimilarityConfig& cfg) {
  TermExpander expander(graph, cfg);
  expander.expand(w1);
  expander.expand(w2);
  return expander.similarity(w1, w2);
}

LexiconPairScore lexicon_pair_similarity(const Lexicon& a, const Lexicon& b,
                                         const TaxonomyGraph& graph,
                                         const SimilarityConfig& cfg,
                                         unsigned workers) {
  if (a.empty() || b.empty()) {
    throw ContractError("lexicon pair similarity needs non-empty lexicons");
  }
  TermExpander expander(graph, cfg);
  for (const Lexicon* lex : {&a, &b}) {
    for (const Term& t : lex->terms()) {
      expander.expand(t.normalized);
    }
  }
  return score_pair(a, b, expander, cfg, workers);
}

const LexiconPairScore& SimilarityMatrix::at(const std::string& a,
                                             const std::string& b) const {
  const auto it = scores_.find({a, b});
  if (it == scores_.end()) {
    throw ContractError("no similarity score for (" + a + ", " + b + ")");
  }
  return it->second;
}

double SimilarityMatrix::off_diagonal_mean() const {
  double sum = 0.0;
  int n = 0;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (std::size_t j = i + 1; j < ids_.size(); ++j) {
      sum += at(ids_[i], ids_[j]).s_avg;
      ++n;
    }
  }
  return n > 0 ? sum / n : 0.0;
}

SimilarityMatrix similarity_matrix(std::span<const Lexicon> lexicons,
                                   const TaxonomyGraph& graph,
                                   const SimilarityConfig& cfg,
                                   unsigned workers) {
  if (lexicons.size() < 2) {
    throw ConfigError("similarity matrix needs at least two lexicons");
  }
  SimilarityMatrix m;
  for (const Lexicon& lex : lexicons) {
    if (std::find(m.ids_.begin(), m.ids_.end(), lex.id()) != m.ids_.end()) {
      throw ConfigError("duplicate lexicon id '" + lex.id() + "'");
    }
    m.ids_.push_back(lex.id());
  }
  m.config_ = cfg;
  m.release_ = graph.release();

  TermExpander expander(graph, m.config_);
  for (const Lexicon& lex : lexicons) {
    for (const Term& t : lex.terms()) {
      expander.expand(t.normalized);
    }
  }
  for (std::size_t i = 0; i < lexicons.size(); ++i) {
    for (std::size_t j = i; j < lexicons.size(); ++j) {
      LexiconPairScore s =
          score_pair(lexicons[i], lexicons[j], expander, m.config_, workers);
      ++m.computations_;
      LexiconPairScore mirrored = s;
      std::swap(mirrored.lexicon_a, mirrored.lexicon_b);
      m.scores_[{lexicons[j].id(), lexicons[i].id()}] = std::move(mirrored);
      m.scores_[{lexicons[i].id(), lexicons[j].id()}] = std::move(s);
    }
  }
  return m;
}

}  // namespace stiglex
