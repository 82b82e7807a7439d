// stiglex: compare stigmatizing-language lexicons and flag their terms in
// clinical notes.
//
//   stiglex compare   --manifest M --wordnet DICT [--out DIR]
//   stiglex consensus --manifest M [--threshold 0.5]
//   stiglex sentiment --manifest M --sentiment-lexicon WKWSCI.csv
//   stiglex scan      --manifest M [--sentiment-lexicon S] CORPUS
//   stiglex report    --manifest M --wordnet DICT --sentiment-lexicon S
//                     [--corpus CORPUS]

#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "stiglex/commands.h"

int main(int argc, char** argv) {
  using stiglex::cli::OutputFormat;
  stiglex::cli::RunConfig cfg;

  CLI::App app{"Stigmatizing-language lexicon analysis"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string manifest, wordnet, slex, out_dir = "out", corpus;
  std::string aggregation = "max", missing = "zero";
  std::vector<std::string> formats{"csv", "json"};
  bool no_instance = false;

  app.add_option("--manifest", manifest, "Lexicon manifest (JSON)");
  app.add_option("--wordnet", wordnet, "WordNet 3.0 dict/ directory");
  app.add_option("--sentiment-lexicon", slex,
                 "Sentiment lexicon CSV/TSV (term, category)");
  app.add_option("--threshold", cfg.threshold,
                 "Majority-vote fraction of lexicons")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--aggregation", aggregation, "Synset-pair reduction")
      ->check(CLI::IsMember({"max", "mean"}));
  app.add_option("--missing", missing, "Policy for term pairs without synsets")
      ->check(CLI::IsMember({"zero", "exclude"}));
  app.add_option("--strong-threshold", cfg.similarity.strong_threshold,
                 "LCH score above which a pair is labelled strong");
  app.add_flag("--no-instance-hypernyms", no_instance,
               "Ignore instance hypernym (@i) edges");
  app.add_option("--workers", cfg.workers, "Worker threads")
      ->check(CLI::Range(1u, 256u));
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--format", formats, "Output formats")
      ->delimiter(',')
      ->check(CLI::IsMember({"csv", "json"}));

  auto* compare = app.add_subcommand("compare", "Lexicon similarity matrix");
  auto* consensus = app.add_subcommand("consensus", "Majority-vote consensus");
  auto* sentiment = app.add_subcommand("sentiment", "Sentiment composition");
  auto* scan = app.add_subcommand("scan", "Flag lexicon terms in a corpus");
  scan->add_option("corpus", corpus,
                   "Directory of .txt notes or a JSON-lines file")
      ->required();
  auto* report = app.add_subcommand("report", "Run every analysis");
  report->add_option("--corpus", corpus, "Optional corpus to scan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : stiglex::cli::kExitDataError;
  }

  cfg.manifest = manifest;
  cfg.wordnet_dir = wordnet;
  cfg.sentiment_lexicon = slex;
  cfg.out_dir = out_dir;
  cfg.corpus = corpus;
  cfg.include_instance_hypernyms = !no_instance;
  cfg.similarity.synset_aggregation =
      *stiglex::aggregation_from_name(aggregation);
  cfg.similarity.missing_policy = *stiglex::missing_policy_from_name(missing);
  cfg.formats.clear();
  for (const auto& f : formats) {
    cfg.formats.insert(f == "csv" ? OutputFormat::kCsv : OutputFormat::kJson);
  }

  if (compare->parsed()) {
    return stiglex::cli::cmd_compare(cfg, std::cout, std::cerr);
  }
  if (consensus->parsed()) {
    return stiglex::cli::cmd_consensus(cfg, std::cout, std::cerr);
  }
  if (sentiment->parsed()) {
    return stiglex::cli::cmd_sentiment(cfg, std::cout, std::cerr);
  }
  if (scan->parsed()) {
    return stiglex::cli::cmd_scan(cfg, std::cout, std::cerr);
  }
  if (report->parsed()) {
    return stiglex::cli::cmd_report(cfg, std::cout, std::cerr);
  }
  return stiglex::cli::kExitInternalError;
}
