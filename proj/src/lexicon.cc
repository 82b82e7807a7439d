#include "stiglex/lexicon.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <nlohmann/json.hpp>

#include "stiglex/error.h"
#include "stiglex/text.h"

namespace stiglex {

namespace {

bool is_strippable(char32_t cp) {
  return text::is_space(cp) || text::is_punct(cp);
}

SourceFormat format_from_name(const std::string& name) {
  if (name == "lines" || name == "txt" || name == "text") {
    return SourceFormat::kLines;
  }
  if (name == "csv") {
    return SourceFormat::kCsv;
  }
  throw ValidationError("unknown lexicon format '" + name + "'");
}

std::vector<std::pair<std::string, std::size_t>> read_lines_source(
    std::string_view content) {
  std::vector<std::pair<std::string, std::size_t>> out;
  text::for_each_line(content, [&](std::string_view line, std::size_t no) {
    const auto body = text::trim(line);
    if (body.empty() || body.front() == '#') {
      return;
    }
    out.emplace_back(std::string(body), no);
  });
  return out;
}

std::vector<std::pair<std::string, std::size_t>> read_csv_source(
    const std::string& file, std::string_view content) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::optional<std::size_t> column;
  text::for_each_line(content, [&](std::string_view line, std::size_t no) {
    if (text::trim(line).empty()) {
      return;
    }
    const auto fields = text::split_record(line, ',');
    if (!column) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (text::lowercase_ascii(text::trim(fields[i])) == "term") {
          column = i;
        }
      }
      if (!column) {
        throw ParseError(file, no, "CSV header has no 'term' column");
      }
      return;
    }
    if (*column >= fields.size()) {
      throw ParseError(file, no, "record has no 'term' field");
    }
    out.emplace_back(fields[*column], no);
  });
  if (!column) {
    throw ParseError(file, 1, "CSV source is empty");
  }
  return out;
}

}  // namespace

std::string normalize_term(std::string_view raw) {
  const std::string lowered = text::lower_nfc(raw);
  const auto cps = text::decode_utf8(lowered);

  std::size_t first = 0;
  std::size_t last = cps.size();
  while (first < last && is_strippable(cps[first].value)) {
    ++first;
  }
  while (last > first && is_strippable(cps[last - 1].value)) {
    --last;
  }

  std::string out;
  out.reserve(lowered.size());
  bool in_space = false;
  for (std::size_t i = first; i < last; ++i) {
    if (text::is_space(cps[i].value)) {
      in_space = true;
      continue;
    }
    if (in_space) {
      out.push_back(' ');
      in_space = false;
    }
    out.append(lowered, cps[i].offset, cps[i].length);
  }
  if (out.empty()) {
    throw ValidationError("invalid term '" + std::string(raw) +
                          "': empty after normalization");
  }
  return out;
}

Term Term::from_raw(std::string_view raw) {
  return Term{std::string(raw), normalize_term(raw)};
}

Lexicon::Lexicon(std::string id, std::string citation)
    : id_(std::move(id)), citation_(std::move(citation)) {}

Lexicon Lexicon::from_terms(std::string id,
                            const std::vector<std::string>& raw_terms) {
  Lexicon lex(std::move(id), "");
  for (const auto& raw : raw_terms) {
    lex.add(Term::from_raw(raw));
  }
  return lex;
}

bool Lexicon::contains(std::string_view normalized) const {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), normalized,
      [](const Term& t, std::string_view key) { return t.normalized < key; });
  return it != terms_.end() && it->normalized == normalized;
}

std::vector<std::string> Lexicon::normalized_terms() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) {
    out.push_back(t.normalized);
  }
  return out;
}

bool Lexicon::add(Term term) {
  const auto it = std::lower_bound(
      terms_.begin(), terms_.end(), term.normalized,
      [](const Term& t, const std::string& key) { return t.normalized < key; });
  if (it != terms_.end() && it->normalized == term.normalized) {
    return false;
  }
  terms_.insert(it, std::move(term));
  return true;
}

bool Lexicon::exclude(std::string_view normalized, std::string reason) {
  const auto it = std::find_if(
      terms_.begin(), terms_.end(),
      [&](const Term& t) { return t.normalized == normalized; });
  if (it == terms_.end()) {
    return false;
  }
  excluded_.push_back({std::move(*it), std::move(reason)});
  terms_.erase(it);
  return true;
}

LexiconManifest LexiconManifest::load(const std::filesystem::path& path) {
  return parse(text::read_file(path), path.parent_path(),
               path.filename().string());
}

LexiconManifest LexiconManifest::parse(std::string_view json,
                                       const std::filesystem::path& base_dir,
                                       const std::string& source_name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source_name, 0, e.what());
  }
  if (!doc.is_object() || !doc.contains("lexicons") ||
      !doc["lexicons"].is_array()) {
    throw ValidationError("manifest needs a 'lexicons' array");
  }
  LexiconManifest manifest;
  std::set<std::string> ids;
  for (const auto& item : doc["lexicons"]) {
    if (!item.is_object() || !item.contains("id") || !item.contains("source")) {
      throw ValidationError("manifest entry needs 'id' and 'source'");
    }
    ManifestEntry entry;
    try {
      entry.id = item.at("id").get<std::string>();
      entry.citation = item.value("citation", std::string{});
      std::filesystem::path source = item.at("source").get<std::string>();
      entry.source = source.is_absolute() ? source : base_dir / source;
      entry.format = format_from_name(item.value("format", std::string("lines")));
      for (const auto& ex : item.value("exclusions", nlohmann::json::array())) {
        entry.exclusions.push_back(
            {ex.at("term").get<std::string>(), ex.value("reason", std::string{})});
      }
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError("manifest entry '" + entry.id + "': " + e.what());
    }
    if (entry.id.empty()) {
      throw ValidationError("manifest entry with empty id");
    }
    if (!ids.insert(entry.id).second) {
      throw ValidationError("duplicate lexicon id '" + entry.id + "'");
    }
    if (!std::filesystem::exists(entry.source)) {
      throw LoadError("lexicon '" + entry.id + "': source not found: " +
                      entry.source.string());
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

Lexicon ingest_lexicon(const ManifestEntry& entry) {
  std::string content;
  try {
    content = text::read_file(entry.source);
  } catch (const LoadError& e) {
    throw LoadError("lexicon '" + entry.id + "': " + e.what());
  }
  const std::string file = entry.source.filename().string();
  const auto raw_terms = entry.format == SourceFormat::kCsv
                             ? read_csv_source(file, content)
                             : read_lines_source(content);

  Lexicon lex(entry.id, entry.citation);
  for (const auto& [raw, line] : raw_terms) {
    try {
      lex.add(Term::from_raw(raw));
    } catch (const ValidationError& e) {
      throw ParseError(file, line, e.what());
    }
  }
  for (const Exclusion& ex : entry.exclusions) {
    const std::string key = normalize_term(ex.term);
    if (!lex.exclude(key, ex.reason)) {
      throw ValidationError("lexicon '" + entry.id + "': exclusion '" +
                            ex.term + "' matches no term");
    }
  }
  if (lex.empty()) {
    throw ValidationError("lexicon '" + entry.id +
                          "' is empty after exclusions");
  }
  return lex;
}

std::vector<Lexicon> ingest_manifest(const LexiconManifest& manifest) {
  std::vector<Lexicon> out;
  out.reserve(manifest.entries.size());
  for (const auto& entry : manifest.entries) {
    out.push_back(ingest_lexicon(entry));
  }
  return out;
}

std::set<std::string> build_master_list(std::span<const Lexicon> lexicons) {
  std::set<std::string> master;
  for (const Lexicon& lex : lexicons) {
    for (const Term& t : lex.terms()) {
      master.insert(t.normalized);
    }
  }
  return master;
}

int majority_min_count(double threshold_fraction, std::size_t lexicon_count) {
  // The epsilon keeps exact products such as 0.5 * 4 from rounding up.
  const double product =
      threshold_fraction * static_cast<double>(lexicon_count);
  return std::max(1, static_cast<int>(std::ceil(product - 1e-9)));
}

std::vector<std::string> ConsensusReport::high_frequency() const {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    if (e.high_frequency) {
      out.push_back(e.term);
    }
  }
  return out;
}

const ConsensusEntry* ConsensusReport::find(std::string_view term) const {
  const auto it = std::lower_bound(
      entries.begin(), entries.end(), term,
      [](const ConsensusEntry& e, std::string_view key) { return e.term < key; });
  return it != entries.end() && it->term == term ? &*it : nullptr;
}

ConsensusReport consensus_analysis(std::span<const Lexicon> lexicons,
                                   double threshold_fraction) {
  if (lexicons.size() < 2) {
    throw ConfigError("consensus analysis needs at least two lexicons");
  }
  if (!(threshold_fraction > 0.0 && threshold_fraction <= 1.0)) {
    throw ConfigError("threshold fraction must lie in (0, 1]");
  }
  ConsensusReport report;
  report.threshold_fraction = threshold_fraction;
  report.min_count = majority_min_count(threshold_fraction, lexicons.size());

  std::map<std::string, std::vector<std::string>> members;
  for (const Lexicon& lex : lexicons) {
    if (std::find(report.lexicon_ids.begin(), report.lexicon_ids.end(),
                  lex.id()) != report.lexicon_ids.end()) {
      throw ConfigError("duplicate lexicon id '" + lex.id() + "'");
    }
    report.lexicon_ids.push_back(lex.id());
    report.coverage[lex.id()] = 0;
    for (const Term& t : lex.terms()) {
      members[t.normalized].push_back(lex.id());
    }
  }
  std::sort(report.lexicon_ids.begin(), report.lexicon_ids.end());

  report.master_size = members.size();
  report.entries.reserve(members.size());
  for (auto& [term, ids] : members) {
    std::sort(ids.begin(), ids.end());
    ConsensusEntry e;
    e.term = term;
    e.count = static_cast<int>(ids.size());
    e.high_frequency = e.count >= report.min_count;
    if (e.high_frequency) {
      for (const auto& id : ids) {
        ++report.coverage[id];
      }
    }
    e.members = std::move(ids);
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace stiglex
