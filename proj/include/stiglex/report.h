#ifndef STIGLEX_REPORT_H_
#define STIGLEX_REPORT_H_

#include <nlohmann/json.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "stiglex/lexicon.h"
#include "stiglex/scanner.h"
#include "stiglex/sentiment.h"
#include "stiglex/similarity.h"

// Serializers for every artifact the CLI writes. CSV numbers use 4 decimals;
// JSON keeps full double precision. Every artifact carries a provenance block
// (CSV: leading "# key=value" comment lines).
namespace stiglex::report {

struct Provenance {
  std::string wordnet_release = "none";
  std::string sentiment_source = "none";
  std::string config_hash;
};

// 64-bit FNV-1a, 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

std::string provenance_header(const Provenance& p);
nlohmann::json provenance_json(const Provenance& p);

struct SensitivityRow {
  SynsetAggregation aggregation;
  MissingPolicy missing;
  double off_diagonal_mean = 0.0;
};

std::string similarity_csv(const SimilarityMatrix& m, const Provenance& p);
nlohmann::json similarity_json(const SimilarityMatrix& m, const Provenance& p,
                               const std::vector<SensitivityRow>& sensitivity);
std::string sensitivity_csv(const std::vector<SensitivityRow>& rows,
                            const Provenance& p);

// Rows ordered by count descending, then term.
std::string consensus_csv(const ConsensusReport& r, const Provenance& p);
nlohmann::json consensus_json(const ConsensusReport& r, const Provenance& p);

std::string sentiment_csv(const SentimentReport& r, const Provenance& p);
nlohmann::json sentiment_json(const SentimentReport& r, const Provenance& p);

nlohmann::json annotation_json(const std::string& document_id,
                               const Annotation& a);
// One annotation per line, documents in id order.
std::string annotations_jsonl(const ScanReport& r);
std::string scan_summary_csv(const ScanReport& r, const Provenance& p);
std::string scan_documents_csv(const ScanReport& r, const Provenance& p);
std::string term_frequency_csv(const ScanReport& r, const Provenance& p);

// Two-space indented JSON followed by '\n' (keys sorted).
std::string dump(const nlohmann::json& j);

}  // namespace stiglex::report

#endif  // STIGLEX_REPORT_H_
