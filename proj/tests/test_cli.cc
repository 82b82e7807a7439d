#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "stiglex/commands.h"
#include "support.h"

using namespace stiglex;
using namespace stiglex::cli;
using namespace testsupport;

namespace {

RunConfig fixture_config(const fs::path& out) {
  RunConfig cfg;
  cfg.manifest = fixture("lexicons/manifest.json");
  cfg.wordnet_dir = fixture("mini_wordnet");
  cfg.sentiment_lexicon = fixture("sentiment.csv");
  cfg.corpus = fixture("corpus");
  cfg.out_dir = out;
  return cfg;
}

std::set<std::string> files_in(const fs::path& dir) {
  std::set<std::string> names;
  for (const auto& e : fs::directory_iterator(dir)) {
    names.insert(e.path().filename().string());
  }
  return names;
}

}  // namespace

TEST_CASE("report reproduces the golden files byte for byte") {
  TempDir tmp;
  std::ostringstream out, err;
  REQUIRE(cmd_report(fixture_config(tmp.path()), out, err) == kExitOk);
  CHECK(err.str().empty());
  REQUIRE(files_in(tmp.path()) == files_in(golden("")));
  for (const auto& name : files_in(golden(""))) {
    INFO(name);
    CHECK(slurp(tmp / name) == slurp(golden(name)));
  }
}

TEST_CASE("single commands write the same files as report") {
  TempDir tmp;
  std::ostringstream out, err;
  const auto cfg = fixture_config(tmp.path());
  REQUIRE(cmd_consensus(cfg, out, err) == kExitOk);
  REQUIRE(cmd_sentiment(cfg, out, err) == kExitOk);
  REQUIRE(cmd_scan(cfg, out, err) == kExitOk);
  REQUIRE(cmd_compare(cfg, out, err) == kExitOk);
  for (const auto& name : files_in(tmp.path())) {
    INFO(name);
    CHECK(slurp(tmp / name) == slurp(golden(name)));
  }
  CHECK(out.str().find("consensus: 13 master terms, 3 high-frequency") !=
        std::string::npos);
}

TEST_CASE("two single-term lexicons give a 2x2 matrix") {
  TempDir tmp;
  write_file(tmp / "in/one.txt", "anger\n");
  write_file(tmp / "in/two.txt", "denial\n");
  write_file(tmp / "in/m.json", R"({"lexicons": [
      {"id": "one", "source": "one.txt"}, {"id": "two", "source": "two.txt"}]})");
  RunConfig cfg;
  cfg.manifest = tmp / "in/m.json";
  cfg.wordnet_dir = fixture("mini_wordnet");
  cfg.out_dir = tmp / "out";
  cfg.formats = {OutputFormat::kCsv};
  std::ostringstream out, err;
  REQUIRE(cmd_compare(cfg, out, err) == kExitOk);
  CHECK(out.str().find("off-diagonal mean S_avg = 0.6931") != std::string::npos);
  const auto csv = slurp(tmp / "out/similarity_matrix.csv");
  CHECK(csv.find("lexicon,one,two\none,1.7918,0.6931\ntwo,0.6931,1.7918\n") !=
        std::string::npos);
  CHECK_FALSE(fs::exists(tmp / "out/similarity_matrix.json"));
}

TEST_CASE("error paths name the failing stage") {
  TempDir tmp;
  auto cfg = fixture_config(tmp / "out");
  std::ostringstream out, err;

  SUBCASE("missing WordNet") {
    cfg.wordnet_dir = tmp / "no-such-dict";
    CHECK(cmd_compare(cfg, out, err) == kExitDataError);
    CHECK(err.str().find("[wordnet]") != std::string::npos);
  }
  SUBCASE("corrupt JSON-lines corpus") {
    cfg.corpus = fixture("corrupt.jsonl");
    CHECK(cmd_scan(cfg, out, err) == kExitDataError);
    CHECK(err.str().find("[corpus]") != std::string::npos);
    CHECK(err.str().find("corrupt.jsonl:2:") != std::string::npos);
  }
  SUBCASE("missing manifest") {
    cfg.manifest = tmp / "absent.json";
    CHECK(cmd_consensus(cfg, out, err) == kExitDataError);
    CHECK(err.str().find("[manifest]") != std::string::npos);
  }
  SUBCASE("sentiment without a lexicon") {
    cfg.sentiment_lexicon.clear();
    CHECK(cmd_sentiment(cfg, out, err) == kExitDataError);
    CHECK(err.str().find("[sentiment-lexicon]") != std::string::npos);
  }
  SUBCASE("no output format") {
    cfg.formats.clear();
    CHECK(cmd_consensus(cfg, out, err) == kExitDataError);
    CHECK(err.str().find("[output]") != std::string::npos);
  }
  SUBCASE("invalid similarity config") {
    cfg.similarity.strong_threshold = -1;
    CHECK(cmd_compare(cfg, out, err) == kExitDataError);
  }
  SUBCASE("unwritable output directory") {
    write_file(tmp / "file", "x");
    cfg.out_dir = tmp / "file";
    CHECK(cmd_consensus(cfg, out, err) == kExitDataError);
  }
}

TEST_CASE("empty corpus gives empty outputs and exit 0") {
  TempDir tmp;
  fs::create_directories(tmp / "empty");
  auto cfg = fixture_config(tmp / "out");
  cfg.corpus = tmp / "empty";
  std::ostringstream out, err;
  REQUIRE(cmd_scan(cfg, out, err) == kExitOk);
  CHECK(slurp(tmp / "out/annotations.jsonl").empty());
  CHECK(slurp(tmp / "out/scan_summary.csv").find("fraction_flagged,0.0000") !=
        std::string::npos);
}

TEST_CASE("config hash covers settings but not paths") {
  RunConfig a;
  RunConfig b;
  b.manifest = "/elsewhere/manifest.json";
  b.out_dir = "/tmp/x";
  CHECK(config_hash(a) == config_hash(b));
  CHECK(config_hash(a).size() == 16);
  b.similarity.missing_policy = MissingPolicy::kExclude;
  CHECK(config_hash(a) != config_hash(b));
  RunConfig c;
  c.threshold = 1.0;
  CHECK(config_hash(a) != config_hash(c));
  RunConfig d;
  d.include_instance_hypernyms = false;
  CHECK(config_hash(a) != config_hash(d));
}

TEST_CASE("repeated runs are byte-identical across worker counts") {
  TempDir tmp;
  auto cfg = fixture_config(tmp / "one");
  std::ostringstream out, err;
  REQUIRE(cmd_report(cfg, out, err) == kExitOk);
  cfg.out_dir = tmp / "many";
  cfg.workers = 6;
  REQUIRE(cmd_report(cfg, out, err) == kExitOk);
  for (const auto& name : files_in(tmp / "one")) {
    INFO(name);
    CHECK(slurp(tmp / "one" / name) == slurp(tmp / "many" / name));
  }
}
