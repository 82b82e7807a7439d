#include "stiglex/commands.h"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "stiglex/error.h"
#include "stiglex/lexicon.h"
#include "stiglex/report.h"
#include "stiglex/scanner.h"
#include "stiglex/sentiment.h"
#include "stiglex/text.h"
#include "stiglex/wordnet.h"

namespace stiglex::cli {

namespace {

class Pipeline {
 public:
  Pipeline(const RunConfig& cfg, std::ostream& out)
      : cfg_(cfg), out_(out) {}

  const std::string& stage() const { return stage_; }

  void prepare_output() {
    stage_ = "output";
    if (cfg_.formats.empty()) {
      throw ConfigError("no output format selected");
    }
    std::error_code ec;
    std::filesystem::create_directories(cfg_.out_dir, ec);
    if (ec || !std::filesystem::is_directory(cfg_.out_dir)) {
      throw ConfigError("cannot create output directory " +
                        cfg_.out_dir.string());
    }
  }

  void compare() {
    const auto& lexicons = load_lexicons();
    const auto& graph = load_graph();
    stage_ = "similarity";
    const SimilarityMatrix matrix =
        similarity_matrix(lexicons, graph, cfg_.similarity, cfg_.workers);
    std::vector<report::SensitivityRow> sensitivity;
    for (auto aggregation : {SynsetAggregation::kMax, SynsetAggregation::kMean}) {
      for (auto missing : {MissingPolicy::kZero, MissingPolicy::kExclude}) {
        SimilarityConfig variant = cfg_.similarity;
        variant.synset_aggregation = aggregation;
        variant.missing_policy = missing;
        const double mean =
            variant.synset_aggregation == cfg_.similarity.synset_aggregation &&
                    variant.missing_policy == cfg_.similarity.missing_policy
                ? matrix.off_diagonal_mean()
                : similarity_matrix(lexicons, graph, variant, cfg_.workers)
                      .off_diagonal_mean();
        sensitivity.push_back({aggregation, missing, mean});
      }
    }
    stage_ = "output";
    const auto prov = provenance(true, false);
    if (wants(OutputFormat::kCsv)) {
      write("similarity_matrix.csv", report::similarity_csv(matrix, prov));
      write("sensitivity.csv", report::sensitivity_csv(sensitivity, prov));
    }
    if (wants(OutputFormat::kJson)) {
      write("similarity_matrix.json",
            report::dump(report::similarity_json(matrix, prov, sensitivity)));
    }
    out_ << "compare: off-diagonal mean S_avg = "
         << text::format_fixed(matrix.off_diagonal_mean(), 4) << " over "
         << matrix.ids().size() << " lexicons (wordnet "
         << graph.release() << ", aggregation="
         << to_string(cfg_.similarity.synset_aggregation)
         << ", missing=" << to_string(cfg_.similarity.missing_policy) << ")\n";
  }

  void consensus() {
    const ConsensusReport& r = load_consensus();
    stage_ = "output";
    const auto prov = provenance(false, false);
    if (wants(OutputFormat::kCsv)) {
      write("consensus.csv", report::consensus_csv(r, prov));
    }
    if (wants(OutputFormat::kJson)) {
      write("consensus.json", report::dump(report::consensus_json(r, prov)));
    }
    out_ << "consensus: " << r.master_size << " master terms, "
         << r.high_frequency().size() << " high-frequency (count >= "
         << r.min_count << " of " << r.lexicon_ids.size() << ")\n";
  }

  void sentiment() {
    const auto& lexicons = load_lexicons();
    const ConsensusReport& consensus = load_consensus();
    const SentimentLexicon& slex = load_sentiment(true);
    stage_ = "sentiment";
    const auto hf = consensus.high_frequency();
    const SentimentReport r = sentiment_report(lexicons, hf, slex);
    stage_ = "output";
    const auto prov = provenance(false, true);
    if (wants(OutputFormat::kCsv)) {
      write("sentiment.csv", report::sentiment_csv(r, prov));
    }
    if (wants(OutputFormat::kJson)) {
      write("sentiment.json", report::dump(report::sentiment_json(r, prov)));
    }
    out_ << "sentiment: negative "
         << text::format_fixed(100.0 * r.pooled_proportion(Sentiment::kNegative), 1)
         << "% pooled, "
         << text::format_fixed(100.0 * r.mean_proportion(Sentiment::kNegative), 1)
         << "% lexicon mean (" << slex.source() << ", " << slex.size()
         << " entries)\n";
  }

  void scan() {
    const auto& lexicons = load_lexicons();
    const SentimentLexicon& slex = load_sentiment(false);
    const ConsensusReport* consensus =
        lexicons.size() >= 2 ? &load_consensus() : nullptr;
    stage_ = "scanner";
    const Matcher matcher = Matcher::compile(lexicons, slex, consensus);
    stage_ = "corpus";
    if (cfg_.corpus.empty()) {
      throw ConfigError("no corpus given");
    }
    const auto docs = read_corpus(cfg_.corpus);
    stage_ = "scanner";
    const ScanReport r = scan_corpus(docs, matcher, cfg_.workers);
    stage_ = "output";
    const auto prov = provenance(false, true);
    write("annotations.jsonl", report::annotations_jsonl(r));
    if (wants(OutputFormat::kCsv)) {
      write("scan_summary.csv", report::scan_summary_csv(r, prov));
      write("scan_documents.csv", report::scan_documents_csv(r, prov));
      write("term_frequency.csv", report::term_frequency_csv(r, prov));
    }
    if (wants(OutputFormat::kJson)) {
      nlohmann::json ranking = nlohmann::json::array();
      for (const auto& [term, n] : r.ranking) {
        ranking.push_back({{"term", term}, {"count", n}});
      }
      write("scan_summary.json",
            report::dump({{"provenance", report::provenance_json(prov)},
                          {"documents_scanned", r.scanned},
                          {"documents_flagged", r.flagged},
                          {"fraction_flagged", r.fraction_flagged},
                          {"ranking", ranking}}));
    }
    out_ << "scan: " << r.scanned << " documents, " << r.flagged
         << " flagged (" << text::format_fixed(r.fraction_flagged, 4)
         << ")\n";
  }

 private:
  bool wants(OutputFormat f) const { return cfg_.formats.contains(f); }

  void write(const std::string& name, const std::string& content) {
    const auto path = cfg_.out_dir / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw ConfigError("cannot write " + path.string());
    }
    f << content;
    if (!f) {
      throw ConfigError("error writing " + path.string());
    }
  }

  // Names only the inputs an artifact was computed from, so `report` and the
  // single-stage commands write identical files.
  report::Provenance provenance(bool uses_wordnet, bool uses_sentiment) const {
    report::Provenance p;
    if (uses_wordnet && graph_) {
      p.wordnet_release = graph_->release();
    }
    if (uses_sentiment && slex_ && !slex_->source().empty()) {
      p.sentiment_source = slex_->source();
    }
    p.config_hash = config_hash(cfg_);
    return p;
  }

  const std::vector<Lexicon>& load_lexicons() {
    if (!lexicons_) {
      stage_ = "manifest";
      if (cfg_.manifest.empty()) {
        throw ConfigError("no manifest given");
      }
      const auto manifest = LexiconManifest::load(cfg_.manifest);
      stage_ = "lexicon";
      lexicons_ = ingest_manifest(manifest);
      if (lexicons_->empty()) {
        throw ValidationError("manifest lists no lexicons");
      }
    }
    return *lexicons_;
  }

  const TaxonomyGraph& load_graph() {
    if (!graph_) {
      stage_ = "wordnet";
      if (cfg_.wordnet_dir.empty()) {
        throw ConfigError("no wordnet directory given");
      }
      LoadOptions options;
      options.include_instance_hypernyms = cfg_.include_instance_hypernyms;
      graph_ = TaxonomyGraph::load(cfg_.wordnet_dir, options);
    }
    return *graph_;
  }

  const ConsensusReport& load_consensus() {
    if (!consensus_) {
      const auto& lexicons = load_lexicons();
      stage_ = "consensus";
      consensus_ = consensus_analysis(lexicons, cfg_.threshold);
    }
    return *consensus_;
  }

  const SentimentLexicon& load_sentiment(bool required) {
    if (!slex_) {
      stage_ = "sentiment-lexicon";
      if (cfg_.sentiment_lexicon.empty()) {
        if (required) {
          throw ConfigError("no sentiment lexicon given");
        }
        slex_.emplace();
      } else {
        slex_ = SentimentLexicon::load(cfg_.sentiment_lexicon);
      }
    }
    return *slex_;
  }

  const RunConfig& cfg_;
  std::ostream& out_;
  std::string stage_ = "setup";
  std::optional<std::vector<Lexicon>> lexicons_;
  std::optional<TaxonomyGraph> graph_;
  std::optional<ConsensusReport> consensus_;
  std::optional<SentimentLexicon> slex_;
};

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err,
        const std::function<void(Pipeline&)>& body) {
  Pipeline pipeline(cfg, out);
  try {
    cfg.similarity.validate();
    pipeline.prepare_output();
    body(pipeline);
    return kExitOk;
  } catch (const DataError& e) {
    err << "stiglex: error [" << pipeline.stage() << "]: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "stiglex: internal error [" << pipeline.stage() << "]: " << e.what()
        << "\n";
    return kExitInternalError;
  }
}

}  // namespace

std::string config_hash(const RunConfig& cfg) {
  std::string canonical = "aggregation=";
  canonical += to_string(cfg.similarity.synset_aggregation);
  canonical += ";missing=";
  canonical += to_string(cfg.similarity.missing_policy);
  canonical += ";pos=";
  for (PartOfSpeech pos : cfg.similarity.pos_scope) {
    canonical += pos_tag(pos);
  }
  canonical += ";strong=" + text::format_fixed(cfg.similarity.strong_threshold, 6);
  canonical += ";threshold=" + text::format_fixed(cfg.threshold, 6);
  canonical += ";instance_hypernyms=";
  canonical += cfg.include_instance_hypernyms ? "1" : "0";
  return report::fnv1a_hex(canonical);
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run(cfg, out, err, [](Pipeline& p) { p.compare(); });
}

int cmd_consensus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run(cfg, out, err, [](Pipeline& p) { p.consensus(); });
}

int cmd_sentiment(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run(cfg, out, err, [](Pipeline& p) { p.sentiment(); });
}

int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run(cfg, out, err, [](Pipeline& p) { p.scan(); });
}

int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return run(cfg, out, err, [&cfg](Pipeline& p) {
    p.compare();
    p.consensus();
    p.sentiment();
    if (!cfg.corpus.empty()) {
      p.scan();
    }
  });
}

}  // namespace stiglex::cli
