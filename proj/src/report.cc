#include "stiglex/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "stiglex/text.h"

namespace stiglex::report {

namespace {

using nlohmann::json;

std::string fixed4(double v) { return text::format_fixed(v, 4); }

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

json config_json(const SimilarityConfig& cfg) {
  json scope = json::array();
  for (PartOfSpeech pos : cfg.pos_scope) {
    scope.push_back(std::string(pos_name(pos)));
  }
  return {{"synset_aggregation", std::string(to_string(cfg.synset_aggregation))},
          {"missing_policy", std::string(to_string(cfg.missing_policy))},
          {"pos_scope", scope},
          {"strong_threshold", cfg.strong_threshold}};
}

json sentiment_row_json(const SentimentRow& row) {
  json counts = json::object();
  json proportions = json::object();
  json examples = json::object();
  for (Sentiment s : kAllSentiments) {
    const std::string key(to_string(s));
    counts[key] = row.count(s);
    proportions[key] = row.proportion(s);
    examples[key] = row.examples(s);
  }
  return {{"label", row.label},     {"size", row.size},
          {"matched", row.matched}, {"counts", counts},
          {"proportions", proportions}, {"examples", examples}};
}

}  // namespace

std::string fnv1a_hex(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string provenance_header(const Provenance& p) {
  return "# wordnet_release=" + p.wordnet_release + "\n" +
         "# sentiment_source=" + p.sentiment_source + "\n" +
         "# config_hash=" + p.config_hash + "\n";
}

json provenance_json(const Provenance& p) {
  return {{"wordnet_release", p.wordnet_release},
          {"sentiment_source", p.sentiment_source},
          {"config_hash", p.config_hash}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string similarity_csv(const SimilarityMatrix& m, const Provenance& p) {
  std::string out = provenance_header(p);
  out += "lexicon";
  for (const auto& id : m.ids()) {
    out += "," + text::escape_field(id);
  }
  out += "\n";
  for (const auto& a : m.ids()) {
    out += text::escape_field(a);
    for (const auto& b : m.ids()) {
      out += "," + fixed4(m.at(a, b).s_avg);
    }
    out += "\n";
  }
  return out;
}

json similarity_json(const SimilarityMatrix& m, const Provenance& p,
                     const std::vector<SensitivityRow>& sensitivity) {
  json scores = json::array();
  for (const auto& a : m.ids()) {
    for (const auto& b : m.ids()) {
      const auto& s = m.at(a, b);
      scores.push_back({{"lexicon_a", a},
                        {"lexicon_b", b},
                        {"s_avg", s.s_avg},
                        {"pair_count", s.pair_count},
                        {"excluded_pairs", s.excluded_pairs},
                        {"undefined_pairs", s.undefined_pairs},
                        {"strong", m.config().is_strong(s.s_avg)}});
    }
  }
  json sens = json::array();
  for (const auto& row : sensitivity) {
    sens.push_back({{"synset_aggregation", std::string(to_string(row.aggregation))},
                    {"missing_policy", std::string(to_string(row.missing))},
                    {"off_diagonal_mean", row.off_diagonal_mean}});
  }
  return {{"provenance", provenance_json(p)},
          {"config", config_json(m.config())},
          {"lexicons", m.ids()},
          {"scores", scores},
          {"off_diagonal_mean", m.off_diagonal_mean()},
          {"sensitivity", sens}};
}

std::string sensitivity_csv(const std::vector<SensitivityRow>& rows,
                            const Provenance& p) {
  std::string out = provenance_header(p);
  out += "synset_aggregation,missing_policy,off_diagonal_mean\n";
  for (const auto& row : rows) {
    out += std::string(to_string(row.aggregation)) + "," +
           std::string(to_string(row.missing)) + "," +
           fixed4(row.off_diagonal_mean) + "\n";
  }
  return out;
}

std::string consensus_csv(const ConsensusReport& r, const Provenance& p) {
  std::vector<const ConsensusEntry*> rows;
  for (const auto& e : r.entries) {
    rows.push_back(&e);
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ConsensusEntry* a, const ConsensusEntry* b) {
                     return a->count > b->count;
                   });
  std::string out = provenance_header(p);
  out += "# threshold_fraction=" + fixed4(r.threshold_fraction) +
         " min_count=" + std::to_string(r.min_count) +
         " master_size=" + std::to_string(r.master_size) + "\n";
  out += "term,count";
  for (const auto& id : r.lexicon_ids) {
    out += "," + text::escape_field(id);
  }
  out += ",high_frequency\n";
  for (const ConsensusEntry* e : rows) {
    out += text::escape_field(e->term) + "," + std::to_string(e->count);
    for (const auto& id : r.lexicon_ids) {
      const bool member =
          std::binary_search(e->members.begin(), e->members.end(), id);
      out += member ? ",1" : ",0";
    }
    out += e->high_frequency ? ",1\n" : ",0\n";
  }
  return out;
}

json consensus_json(const ConsensusReport& r, const Provenance& p) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"term", e.term},
                       {"count", e.count},
                       {"members", e.members},
                       {"high_frequency", e.high_frequency}});
  }
  const auto hf = r.high_frequency();
  json coverage = json::object();
  for (const auto& [id, n] : r.coverage) {
    coverage[id] = {{"count", n},
                    {"fraction", hf.empty() ? 0.0
                                            : static_cast<double>(n) /
                                                  static_cast<double>(hf.size())}};
  }
  return {{"provenance", provenance_json(p)},
          {"threshold_fraction", r.threshold_fraction},
          {"min_count", r.min_count},
          {"master_size", r.master_size},
          {"lexicons", r.lexicon_ids},
          {"high_frequency", hf},
          {"coverage", coverage},
          {"entries", entries}};
}

std::string sentiment_csv(const SentimentReport& r, const Provenance& p) {
  std::string out = provenance_header(p);
  out +=
      "row,size,matched,positive,negative,neutral,positive_proportion,"
      "negative_proportion,neutral_proportion,positive_examples,"
      "negative_examples,neutral_examples\n";
  auto emit = [&](const SentimentRow& row) {
    out += text::escape_field(row.label) + "," + std::to_string(row.size) +
           "," + std::to_string(row.matched);
    for (Sentiment s : kAllSentiments) {
      out += "," + std::to_string(row.count(s));
    }
    for (Sentiment s : kAllSentiments) {
      out += "," + fixed4(row.proportion(s));
    }
    for (Sentiment s : kAllSentiments) {
      out += "," + text::escape_field(join(row.examples(s), "; "));
    }
    out += "\n";
  };
  for (const auto& row : r.lexicons) {
    emit(row);
  }
  emit(r.high_frequency);
  auto emit_aggregate = [&](const std::string& label,
                            const std::array<double, 3>& values) {
    out += label + ",,,,,";
    for (double v : values) {
      out += "," + fixed4(v);
    }
    out += ",,,\n";
  };
  emit_aggregate("aggregate_pooled", r.pooled);
  emit_aggregate("aggregate_lexicon_mean", r.lexicon_mean);
  return out;
}

json sentiment_json(const SentimentReport& r, const Provenance& p) {
  json rows = json::array();
  for (const auto& row : r.lexicons) {
    rows.push_back(sentiment_row_json(row));
  }
  json pooled = json::object();
  json mean = json::object();
  for (Sentiment s : kAllSentiments) {
    pooled[std::string(to_string(s))] = r.pooled_proportion(s);
    mean[std::string(to_string(s))] = r.mean_proportion(s);
  }
  return {{"provenance", provenance_json(p)},
          {"lexicons", rows},
          {"high_frequency", sentiment_row_json(r.high_frequency)},
          {"aggregate_pooled", pooled},
          {"aggregate_lexicon_mean", mean}};
}

json annotation_json(const std::string& document_id, const Annotation& a) {
  return {{"document", document_id},
          {"start", a.start},
          {"end", a.end},
          {"surface", a.surface},
          {"term", a.term},
          {"lexicons", a.lexicon_ids},
          {"consensus_count", a.consensus_count},
          {"sentiment", a.sentiment ? json(std::string(to_string(*a.sentiment)))
                                    : json(nullptr)}};
}

std::string annotations_jsonl(const ScanReport& r) {
  std::string out;
  for (const auto& doc : r.documents) {
    for (const auto& a : doc.annotations) {
      out += annotation_json(doc.id, a).dump() + "\n";
    }
  }
  return out;
}

std::string scan_summary_csv(const ScanReport& r, const Provenance& p) {
  std::size_t annotations = 0;
  for (const auto& doc : r.documents) {
    annotations += doc.annotations.size();
  }
  return provenance_header(p) + "metric,value\n" +
         "documents_scanned," + std::to_string(r.scanned) + "\n" +
         "documents_flagged," + std::to_string(r.flagged) + "\n" +
         "fraction_flagged," + fixed4(r.fraction_flagged) + "\n" +
         "annotations," + std::to_string(annotations) + "\n" +
         "distinct_terms," + std::to_string(r.ranking.size()) + "\n";
}

std::string scan_documents_csv(const ScanReport& r, const Provenance& p) {
  std::string out = provenance_header(p) + "document,annotations,flagged\n";
  for (const auto& doc : r.documents) {
    out += text::escape_field(doc.id) + "," +
           std::to_string(doc.annotations.size()) + "," +
           (doc.flagged ? "1" : "0") + "\n";
  }
  return out;
}

std::string term_frequency_csv(const ScanReport& r, const Provenance& p) {
  std::string out = provenance_header(p) + "term,count\n";
  for (const auto& [term, n] : r.ranking) {
    out += text::escape_field(term) + "," + std::to_string(n) + "\n";
  }
  return out;
}

}  // namespace stiglex::report
