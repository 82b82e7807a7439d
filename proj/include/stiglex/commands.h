#ifndef STIGLEX_COMMANDS_H_
#define STIGLEX_COMMANDS_H_

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>

#include "stiglex/similarity.h"

// Subcommand implementations behind the `stiglex` executable. Each returns
// the process exit status: 0 success, 1 data or configuration error, 2
// internal invariant violation. Diagnostics go to `err` and name the failing
// stage.
namespace stiglex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitInternalError = 2;

enum class OutputFormat { kCsv, kJson };

struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path wordnet_dir;
  std::filesystem::path sentiment_lexicon;  // optional for scan
  std::filesystem::path corpus;             // scan, and report when set
  std::filesystem::path out_dir = "out";
  SimilarityConfig similarity;
  double threshold = 0.5;
  bool include_instance_hypernyms = true;
  unsigned workers = 1;
  std::set<OutputFormat> formats{OutputFormat::kCsv, OutputFormat::kJson};
};

// Hash of the analysis settings only (no paths), so outputs produced from
// the same data and settings on different machines carry the same value.
std::string config_hash(const RunConfig& cfg);

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_consensus(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sentiment(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
// compare + consensus + sentiment, plus scan when a corpus is configured.
int cmd_report(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace stiglex::cli

#endif  // STIGLEX_COMMANDS_H_
