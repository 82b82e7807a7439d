#include "stiglex/scanner.h"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <thread>

#include "stiglex/error.h"
#include "stiglex/text.h"

namespace stiglex {

Matcher Matcher::compile(std::span<const Lexicon> lexicons,
                         const SentimentLexicon& slex,
                         const ConsensusReport* consensus) {
  if (lexicons.empty()) {
    throw ConfigError("matcher needs at least one lexicon");
  }
  std::map<std::string, std::vector<std::string>> members;
  for (const Lexicon& lex : lexicons) {
    for (const Term& t : lex.terms()) {
      members[t.normalized].push_back(lex.id());
    }
  }
  if (members.empty()) {
    throw ConfigError("matcher has no terms to compile");
  }

  Matcher m;
  m.nodes_.emplace_back();
  for (auto& [term, ids] : members) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    Pattern p;
    p.term = term;
    p.consensus_count = static_cast<int>(ids.size());
    if (consensus != nullptr) {
      if (const ConsensusEntry* e = consensus->find(term)) {
        p.consensus_count = e->count;
      }
    }
    p.lexicon_ids = std::move(ids);
    p.sentiment = slex.classify(term);
    m.patterns_.push_back(std::move(p));
  }
  for (std::size_t i = 0; i < m.patterns_.size(); ++i) {
    m.insert(m.patterns_[i].term, static_cast<int>(i));
  }
  return m;
}

void Matcher::insert(const std::string& term, int pattern) {
  std::uint32_t node = 0;
  for (const auto& cp : text::decode_utf8(term)) {
    if (text::is_space(cp.value)) {
      if (nodes_[node].space_next == 0) {
        nodes_[node].space_next = static_cast<std::uint32_t>(nodes_.size());
        nodes_.emplace_back();
      }
      node = nodes_[node].space_next;
      continue;
    }
    const char32_t key = text::fold_case(cp.value);
    auto& next = nodes_[node].next;
    auto it = std::lower_bound(
        next.begin(), next.end(), key,
        [](const auto& edge, char32_t k) { return edge.first < k; });
    if (it == next.end() || it->first != key) {
      const auto created = static_cast<std::uint32_t>(nodes_.size());
      it = next.insert(it, {key, created});
      nodes_.emplace_back();
      node = created;
    } else {
      node = it->second;
    }
  }
  nodes_[node].pattern = pattern;
}

std::uint32_t Matcher::child(std::uint32_t node, char32_t cp) const {
  const auto& next = nodes_[node].next;
  const auto it = std::lower_bound(
      next.begin(), next.end(), cp,
      [](const auto& edge, char32_t k) { return edge.first < k; });
  return it != next.end() && it->first == cp ? it->second : 0;
}

const Pattern* Matcher::find(std::string_view term) const {
  const auto it = std::lower_bound(
      patterns_.begin(), patterns_.end(), term,
      [](const Pattern& p, std::string_view key) { return p.term < key; });
  return it != patterns_.end() && it->term == term ? &*it : nullptr;
}

std::vector<Annotation> Matcher::scan(std::string_view input) const {
  const auto cps = text::decode_utf8(input);
  const std::size_t n = cps.size();
  auto byte_at = [&](std::size_t i) {
    return i < n ? cps[i].offset : input.size();
  };
  auto boundary_after = [&](std::size_t j) {
    return j == n || !text::is_word_char(cps[j].value);
  };

  std::vector<Annotation> out;
  std::size_t i = 0;
  while (i < n) {
    if (i > 0 && text::is_word_char(cps[i - 1].value)) {
      ++i;
      continue;
    }
    int best = -1;
    std::size_t best_end = i;
    std::uint32_t node = 0;
    std::size_t j = i;
    while (true) {
      if (j > i && nodes_[node].pattern >= 0 && boundary_after(j)) {
        best = nodes_[node].pattern;
        best_end = j;
      }
      if (j == n) {
        break;
      }
      if (text::is_space(cps[j].value)) {
        if (j == i || nodes_[node].space_next == 0) {
          break;
        }
        node = nodes_[node].space_next;
        while (j < n && text::is_space(cps[j].value)) {
          ++j;
        }
        continue;
      }
      const std::uint32_t c = child(node, text::fold_case(cps[j].value));
      if (c == 0) {
        break;
      }
      node = c;
      ++j;
    }
    if (best < 0) {
      ++i;
      continue;
    }
    const Pattern& p = patterns_[static_cast<std::size_t>(best)];
    Annotation a;
    a.start = byte_at(i);
    a.end = byte_at(best_end);
    a.surface = std::string(input.substr(a.start, a.end - a.start));
    a.term = p.term;
    a.lexicon_ids = p.lexicon_ids;
    a.consensus_count = p.consensus_count;
    a.sentiment = p.sentiment;
    out.push_back(std::move(a));
    i = best_end;
  }
  return out;
}

ScanReport scan_corpus(std::span<const Document> documents, const Matcher& m,
                       unsigned workers) {
  std::set<std::string_view> ids;
  for (const Document& d : documents) {
    if (!ids.insert(d.id).second) {
      throw InputError("duplicate document id '" + d.id + "'");
    }
  }

  std::vector<DocumentResult> results(documents.size());
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t k = first; k < documents.size(); k += stride) {
      results[k].id = documents[k].id;
      results[k].annotations = m.scan(documents[k].text);
      results[k].flagged = !results[k].annotations.empty();
    }
  };
  workers = std::max(1u, std::min<unsigned>(
                             workers, static_cast<unsigned>(documents.size())));
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(run, w, workers);
    }
  }
  std::sort(results.begin(), results.end(),
            [](const DocumentResult& a, const DocumentResult& b) {
              return a.id < b.id;
            });

  ScanReport report;
  std::map<std::string, std::size_t> freq;
  for (const auto& r : results) {
    ++report.scanned;
    if (r.flagged) {
      ++report.flagged;
    }
    for (const auto& a : r.annotations) {
      ++freq[a.term];
    }
  }
  report.fraction_flagged =
      report.scanned == 0 ? 0.0
                          : static_cast<double>(report.flagged) /
                                static_cast<double>(report.scanned);
  report.ranking.assign(freq.begin(), freq.end());
  std::stable_sort(report.ranking.begin(), report.ranking.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  report.documents = std::move(results);
  return report;
}

std::vector<Document> read_corpus(const std::filesystem::path& path) {
  std::vector<Document> docs;
  if (std::filesystem::is_directory(path)) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      docs.push_back({f.stem().string(), text::read_file(f)});
    }
    return docs;
  }
  if (!std::filesystem::exists(path)) {
    throw LoadError("corpus not found: " + path.string());
  }
  const std::string content = text::read_file(path);
  const std::string name = path.filename().string();
  text::for_each_line(content, [&](std::string_view line, std::size_t no) {
    if (text::trim(line).empty()) {
      return;
    }
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(name, no, std::string("invalid JSON: ") + e.what());
    }
    if (!record.is_object() || !record.contains("id") ||
        !record.contains("text") || !record["id"].is_string() ||
        !record["text"].is_string()) {
      throw ParseError(name, no, "record needs string 'id' and 'text'");
    }
    docs.push_back({record["id"].get<std::string>(),
                    record["text"].get<std::string>()});
  });
  return docs;
}

}  // namespace stiglex
