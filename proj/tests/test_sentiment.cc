#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stiglex/error.h"
#include "stiglex/sentiment.h"
#include "support.h"

using namespace stiglex;
using namespace testsupport;

TEST_CASE("labels") {
  CHECK(sentiment_from_label("Positive") == Sentiment::kPositive);
  CHECK(sentiment_from_label("neg") == Sentiment::kNegative);
  CHECK(sentiment_from_label("-2") == Sentiment::kNegative);
  CHECK(sentiment_from_label("0") == Sentiment::kNeutral);
  CHECK(sentiment_from_label("+1") == Sentiment::kPositive);
  CHECK_FALSE(sentiment_from_label("meh").has_value());
  CHECK_FALSE(sentiment_from_label("").has_value());
}

TEST_CASE("three-row lexicon classifies one of each") {
  const auto slex = SentimentLexicon::parse(
      "angry,negative\ncalm,positive\nclaim,neutral\n", "three.csv");
  CHECK(slex.size() == 3);
  CHECK(slex.source() == "three.csv");
  const std::vector<std::string> terms = {"angry", "calm", "claim", "in denial"};
  const auto row = classify_terms("x", terms, slex);
  CHECK(row.size == 4);
  CHECK(row.matched == 3);
  CHECK(row.count(Sentiment::kPositive) == 1);
  CHECK(row.count(Sentiment::kNegative) == 1);
  CHECK(row.count(Sentiment::kNeutral) == 1);
  CHECK(row.proportion(Sentiment::kNegative) == doctest::Approx(1.0 / 3));
  CHECK(classify_term("in denial", slex) == std::nullopt);
}

TEST_CASE("conflicting duplicate is an integrity error") {
  CHECK_THROWS_AS(
      SentimentLexicon::parse("good,positive\ngood,negative\n", "c.csv"),
      IntegrityError);
  // agreeing duplicates are fine
  CHECK(SentimentLexicon::parse("good,positive\nGood,pos\n", "d.csv").size() == 1);
}

TEST_CASE("unknown label names the line") {
  try {
    SentimentLexicon::parse("term,category\nfine,neutral\nodd,sideways\n", "u.csv");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.file() == "u.csv");
  }
}

TEST_CASE("header detection and tab separation") {
  const auto tsv = SentimentLexicon::parse(
      "id\tword\tpolarity\n1\tgrim\t-1\n2\tsunny\t1\n", "w.tsv");
  CHECK(tsv.size() == 2);
  CHECK(tsv.classify("grim") == Sentiment::kNegative);
  CHECK(tsv.count(Sentiment::kPositive) == 1);
  const auto keys = SentimentLexicon::parse("Adamant,negative\n", "k.csv");
  CHECK(keys.classify("adamant") == Sentiment::kNegative);
}

TEST_CASE("fixture report: per-lexicon rows and both aggregates") {
  const auto slex = SentimentLexicon::load(fixture("sentiment.csv"));
  CHECK(slex.size() == 6);
  CHECK(slex.source() == "sentiment.csv");
  const auto lex = ingest_manifest(LexiconManifest::load(fixture("lexicons/manifest.json")));
  const std::vector<std::string> hf = {"angry", "noncompliant", "refuse"};
  const auto r = sentiment_report(lex, hf, slex);
  REQUIRE(r.lexicons.size() == 3);
  // alpha: angry, junkie; beta: abuser, angry; gamma: combative, compliant, deny
  CHECK(r.lexicons[0].matched == 2);
  CHECK(r.lexicons[0].count(Sentiment::kNegative) == 2);
  CHECK(r.lexicons[2].matched == 3);
  CHECK(r.lexicons[2].examples(Sentiment::kNegative) == std::vector<std::string>{"combative"});
  CHECK(r.high_frequency.label == "high-frequency");
  CHECK(r.high_frequency.size == 3);
  CHECK(r.high_frequency.matched == 1);
  CHECK(r.pooled_proportion(Sentiment::kNegative) == doctest::Approx(5.0 / 7));
  CHECK(r.pooled_proportion(Sentiment::kPositive) == doctest::Approx(1.0 / 7));
  CHECK(r.mean_proportion(Sentiment::kNegative) == doctest::Approx((1 + 1 + 1.0 / 3) / 3));
  CHECK(r.mean_proportion(Sentiment::kNeutral) == doctest::Approx(1.0 / 9));
}

TEST_CASE("lexicons without matches stay out of the mean") {
  SentimentLexicon slex;
  slex.add("bad", Sentiment::kNegative);
  std::vector<Lexicon> lex = {Lexicon::from_terms("a", {"bad"}),
                              Lexicon::from_terms("b", {"unknown"})};
  const auto r = sentiment_report(lex, {}, slex);
  CHECK(r.lexicons[1].matched == 0);
  CHECK(r.lexicons[1].proportion(Sentiment::kNegative) == 0.0);
  CHECK(r.mean_proportion(Sentiment::kNegative) == 1.0);
}

TEST_CASE("examples are alphabetical and capped") {
  SentimentLexicon slex;
  for (const char* t : {"e", "d", "c", "b", "a"}) slex.add(t, Sentiment::kNegative);
  const std::vector<std::string> terms = {"e", "c", "a", "d", "b"};
  const auto row = classify_terms("x", terms, slex);
  CHECK(row.examples(Sentiment::kNegative) == std::vector<std::string>{"a", "b", "c"});
  CHECK(row.examples(Sentiment::kNegative, 10).size() == 5);
}

TEST_CASE("property: counts partition the matched terms") {
  std::mt19937_64 rng(17);
  std::vector<std::string> vocab;
  for (int i = 0; i < 60; ++i) vocab.push_back("w" + std::to_string(i));
  for (int trial = 0; trial < 200; ++trial) {
    SentimentLexicon slex;
    std::uniform_int_distribution<int> cat(0, 3);  // 3 = unlisted
    for (const auto& w : vocab) {
      const int c = cat(rng);
      if (c < 3) slex.add(w, kAllSentiments[static_cast<std::size_t>(c)]);
    }
    const auto terms = sample_terms(rng, vocab, 30);
    const auto row = classify_terms("t", terms, slex);
    std::size_t matched = 0;
    for (const auto& t : terms) matched += slex.classify(t).has_value();
    REQUIRE(row.matched == matched);
    REQUIRE(row.count(Sentiment::kPositive) + row.count(Sentiment::kNegative) +
                row.count(Sentiment::kNeutral) == row.matched);
    if (row.matched > 0) {
      double total = 0;
      for (auto s : kAllSentiments) total += row.proportion(s);
      REQUIRE(total == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}
