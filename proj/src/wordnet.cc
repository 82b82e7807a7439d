#include "stiglex/wordnet.h"

#include <algorithm>
#include <charconv>
#include <deque>
#include <unordered_set>

#include "stiglex/error.h"
#include "stiglex/text.h"

namespace stiglex {

namespace {

constexpr std::size_t pos_slot(PartOfSpeech pos) {
  return static_cast<std::size_t>(pos);
}

// Data-file lemmas are case-preserving and adjectives may carry a syntactic
// marker: "galore(ip)", "elect(p)".
std::string index_key_for_lemma(std::string_view lemma) {
  if (!lemma.empty() && lemma.back() == ')') {
    const auto open = lemma.rfind('(');
    if (open != std::string_view::npos && open > 0) {
      lemma = lemma.substr(0, open);
    }
  }
  return text::lowercase_ascii(lemma);
}

template <typename T>
bool parse_int(std::string_view token, T& out, int base = 10) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out, base);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  for (auto tok : text::split(line, ' ')) {
    if (!tok.empty()) {
      out.push_back(tok);
    }
  }
  return out;
}

std::string file_suffix(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun:
      return "noun";
    case PartOfSpeech::kVerb:
      return "verb";
    case PartOfSpeech::kAdjective:
      return "adj";
    case PartOfSpeech::kAdverb:
      return "adv";
  }
  return {};
}

std::string detect_release(std::string_view header) {
  constexpr std::string_view kMarker = "WordNet ";
  std::size_t pos = 0;
  while ((pos = header.find(kMarker, pos)) != std::string_view::npos) {
    pos += kMarker.size();
    std::size_t end = pos;
    while (end < header.size() &&
           ((header[end] >= '0' && header[end] <= '9') || header[end] == '.')) {
      ++end;
    }
    while (end > pos && header[end - 1] == '.') {
      --end;
    }
    if (end > pos && header[pos] >= '0' && header[pos] <= '9') {
      return std::string(header.substr(pos, end - pos));
    }
  }
  return "unknown";
}

}  // namespace

std::string_view pos_name(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun:
      return "noun";
    case PartOfSpeech::kVerb:
      return "verb";
    case PartOfSpeech::kAdjective:
      return "adjective";
    case PartOfSpeech::kAdverb:
      return "adverb";
  }
  return "?";
}

char pos_tag(PartOfSpeech pos) {
  switch (pos) {
    case PartOfSpeech::kNoun:
      return 'n';
    case PartOfSpeech::kVerb:
      return 'v';
    case PartOfSpeech::kAdjective:
      return 'a';
    case PartOfSpeech::kAdverb:
      return 'r';
  }
  return '?';
}

std::optional<PartOfSpeech> pos_from_tag(char tag) {
  switch (tag) {
    case 'n':
      return PartOfSpeech::kNoun;
    case 'v':
      return PartOfSpeech::kVerb;
    case 'a':
    case 's':
      return PartOfSpeech::kAdjective;
    case 'r':
      return PartOfSpeech::kAdverb;
    default:
      return std::nullopt;
  }
}

std::optional<PartOfSpeech> pos_from_name(std::string_view name) {
  for (PartOfSpeech pos : kAllPartsOfSpeech) {
    if (pos_name(pos) == name) {
      return pos;
    }
  }
  if (name.size() == 1) {
    return pos_from_tag(name[0]);
  }
  return std::nullopt;
}

std::string to_string(SynsetId id) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%08u-%c", id.offset, pos_tag(id.pos));
  return buf;
}

std::optional<int> closest_common_distance(const AncestorMap& a,
                                           const AncestorMap& b) {
  std::optional<int> best;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      const int d = ia->second + ib->second;
      if (!best || d < *best) {
        best = d;
      }
      ++ia;
      ++ib;
    }
  }
  return best;
}

class WordNetLoader {
 public:
  WordNetLoader(std::filesystem::path dir, const LoadOptions& options)
      : dir_(std::move(dir)), options_(options) {}

  TaxonomyGraph run() {
    if (!std::filesystem::is_directory(dir_)) {
      throw LoadError("wordnet directory not found: " + dir_.string());
    }
    TaxonomyGraph graph;
    graph.options_ = options_;
    for (PartOfSpeech pos : kAllPartsOfSpeech) {
      read_data(graph, pos);
    }
    graph.finalize();
    for (PartOfSpeech pos : kAllPartsOfSpeech) {
      read_index(graph, pos);
    }
    graph.release_ = release_;
    return graph;
  }

 private:
  std::string read(const std::string& name) {
    const auto path = dir_ / name;
    if (!std::filesystem::exists(path)) {
      throw LoadError("wordnet: missing file " + name + " in " +
                      dir_.string());
    }
    return text::read_file(path);
  }

  void read_data(TaxonomyGraph& graph, PartOfSpeech file_pos) {
    const std::string name = "data." + file_suffix(file_pos);
    const std::string content = read(name);
    std::string header;
    text::for_each_line(content, [&](std::string_view line, std::size_t no) {
      if (line.empty()) {
        return;
      }
      if (line.starts_with("  ")) {
        if (file_pos == PartOfSpeech::kNoun) {
          header.append(line).push_back('\n');
        }
        return;
      }
      graph.synsets_.push_back(parse_data_line(name, no, line, file_pos));
    });
    if (file_pos == PartOfSpeech::kNoun) {
      release_ = detect_release(header);
    }
  }

  Synset parse_data_line(const std::string& file, std::size_t no,
                         std::string_view line, PartOfSpeech file_pos) {
    auto fail = [&](const std::string& what) -> ParseError {
      return ParseError(file, no, what);
    };
    std::string_view body = line;
    std::string gloss;
    if (const auto bar = line.find(" | "); bar != std::string_view::npos) {
      body = line.substr(0, bar);
      gloss = std::string(text::trim(line.substr(bar + 3)));
    }
    const auto tok = tokens_of(body);
    if (tok.size() < 6) {
      throw fail("truncated synset record");
    }
    Synset s;
    if (!parse_int(tok[0], s.id.offset)) {
      throw fail("bad synset offset '" + std::string(tok[0]) + "'");
    }
    if (tok[2].size() != 1 || !pos_from_tag(tok[2][0])) {
      throw fail("bad ss_type '" + std::string(tok[2]) + "'");
    }
    s.id.pos = *pos_from_tag(tok[2][0]);
    if (s.id.pos != file_pos) {
      throw fail("ss_type does not match file part of speech");
    }
    unsigned word_count = 0;
    if (!parse_int(tok[3], word_count, 16) || word_count == 0) {
      throw fail("bad w_cnt '" + std::string(tok[3]) + "'");
    }
    std::size_t i = 4;
    if (tok.size() < i + 2 * word_count + 1) {
      throw fail("word list runs past end of record");
    }
    for (unsigned w = 0; w < word_count; ++w, i += 2) {
      s.lemmas.emplace_back(tok[i]);
    }
    unsigned pointer_count = 0;
    if (!parse_int(tok[i], pointer_count)) {
      throw fail("bad p_cnt '" + std::string(tok[i]) + "'");
    }
    ++i;
    if (tok.size() < i + 4 * pointer_count) {
      throw fail("pointer list runs past end of record");
    }
    for (unsigned p = 0; p < pointer_count; ++p, i += 4) {
      const std::string_view symbol = tok[i];
      const bool hypernym =
          symbol == "@" || (symbol == "@i" && options_.include_instance_hypernyms);
      SynsetId target;
      if (!parse_int(tok[i + 1], target.offset)) {
        throw fail("bad pointer offset '" + std::string(tok[i + 1]) + "'");
      }
      if (tok[i + 2].size() != 1 || !pos_from_tag(tok[i + 2][0])) {
        throw fail("bad pointer pos '" + std::string(tok[i + 2]) + "'");
      }
      target.pos = *pos_from_tag(tok[i + 2][0]);
      if (hypernym) {
        if (target.pos != s.id.pos) {
          throw IntegrityError(file + ":" + std::to_string(no) +
                               ": hypernym of " + to_string(s.id) +
                               " crosses part of speech");
        }
        s.hypernyms.push_back(target);
      }
    }
    s.gloss = std::move(gloss);
    return s;
  }

  void read_index(TaxonomyGraph& graph, PartOfSpeech pos) {
    const std::string name = "index." + file_suffix(pos);
    const std::string content = read(name);
    auto& index = graph.lemma_index_[pos_slot(pos)];
    text::for_each_line(content, [&](std::string_view line, std::size_t no) {
      if (line.empty() || line.starts_with("  ")) {
        return;
      }
      const auto tok = tokens_of(line);
      if (tok.size() < 6) {
        throw ParseError(name, no, "truncated index record");
      }
      unsigned synset_count = 0;
      unsigned pointer_count = 0;
      if (!parse_int(tok[2], synset_count) ||
          !parse_int(tok[3], pointer_count)) {
        throw ParseError(name, no, "bad synset_cnt or p_cnt");
      }
      const std::size_t first_offset = 4 + pointer_count + 2;
      if (tok.size() != first_offset + synset_count) {
        throw ParseError(name, no, "synset offset count mismatch");
      }
      auto& entries = index[text::lowercase_ascii(tok[0])];
      for (std::size_t k = first_offset; k < tok.size(); ++k) {
        SynsetId id{0, pos};
        if (!parse_int(tok[k], id.offset)) {
          throw ParseError(name, no,
                           "bad synset offset '" + std::string(tok[k]) + "'");
        }
        const auto it = graph.index_.find(id);
        if (it == graph.index_.end()) {
          throw IntegrityError(name + ":" + std::to_string(no) + ": lemma '" +
                               std::string(tok[0]) + "' points at unknown " +
                               to_string(id));
        }
        entries.push_back(it->second);
      }
    });
  }

  std::filesystem::path dir_;
  LoadOptions options_;
  std::string release_ = "unknown";
};

TaxonomyGraph TaxonomyGraph::load(const std::filesystem::path& dict_dir,
                                  const LoadOptions& options) {
  return WordNetLoader(dict_dir, options).run();
}

TaxonomyGraph TaxonomyGraph::from_synsets(std::vector<Synset> synsets,
                                          std::string release,
                                          const LoadOptions& options) {
  TaxonomyGraph graph;
  graph.release_ = std::move(release);
  graph.options_ = options;
  graph.synsets_ = std::move(synsets);
  for (const Synset& s : graph.synsets_) {
    if (s.lemmas.empty()) {
      throw ValidationError("synset " + to_string(s.id) + " has no lemmas");
    }
  }
  graph.finalize();
  for (std::uint32_t i = 0; i < graph.synsets_.size(); ++i) {
    const Synset& s = graph.synsets_[i];
    auto& index = graph.lemma_index_[pos_slot(s.id.pos)];
    for (const std::string& lemma : s.lemmas) {
      auto& entries = index[index_key_for_lemma(lemma)];
      if (std::find(entries.begin(), entries.end(), i) == entries.end()) {
        entries.push_back(i);
      }
    }
  }
  return graph;
}

void TaxonomyGraph::finalize() {
  index_.reserve(synsets_.size());
  for (std::uint32_t i = 0; i < synsets_.size(); ++i) {
    if (!index_.emplace(synsets_[i].id, i).second) {
      throw IntegrityError("duplicate synset " + to_string(synsets_[i].id));
    }
    ++counts_[pos_slot(synsets_[i].id.pos)];
  }

  parents_.assign(synsets_.size(), {});
  for (std::uint32_t i = 0; i < synsets_.size(); ++i) {
    for (SynsetId h : synsets_[i].hypernyms) {
      if (h.pos != synsets_[i].id.pos) {
        throw IntegrityError("hypernym of " + to_string(synsets_[i].id) +
                             " crosses part of speech");
      }
      const auto it = index_.find(h);
      if (it == index_.end()) {
        throw IntegrityError("dangling hypernym " + to_string(h) + " in " +
                             to_string(synsets_[i].id));
      }
      auto& p = parents_[i];
      if (std::find(p.begin(), p.end(), it->second) == p.end()) {
        p.push_back(it->second);
      }
    }
  }

  // Iterative DFS over hypernym edges. Depth is assigned in post-order; a
  // grey node reached again means a cycle.
  enum : std::uint8_t { kWhite, kGrey, kBlack };
  std::vector<std::uint8_t> colour(synsets_.size(), kWhite);
  depth_.assign(synsets_.size(), 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack;
  for (std::uint32_t start = 0; start < synsets_.size(); ++start) {
    if (colour[start] != kWhite) {
      continue;
    }
    stack.emplace_back(start, 0);
    colour[start] = kGrey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < parents_[node].size()) {
        const std::uint32_t parent = parents_[node][next++];
        if (colour[parent] == kGrey) {
          throw IntegrityError("hypernym cycle through " +
                               to_string(synsets_[parent].id));
        }
        if (colour[parent] == kWhite) {
          colour[parent] = kGrey;
          stack.emplace_back(parent, 0);
        }
        continue;
      }
      int d = 0;
      for (std::uint32_t parent : parents_[node]) {
        d = std::max(d, depth_[parent] + 1);
      }
      depth_[node] = d;
      colour[node] = kBlack;
      stack.pop_back();
    }
  }

  for (std::uint32_t i = 0; i < synsets_.size(); ++i) {
    const auto slot = pos_slot(synsets_[i].id.pos);
    longest_chain_[slot] = std::max(longest_chain_[slot], depth_[i]);
    if (parents_[i].empty()) {
      ++roots_[slot];
    }
  }
}

std::size_t TaxonomyGraph::size(PartOfSpeech pos) const {
  return counts_[pos_slot(pos)];
}

const Synset* TaxonomyGraph::find(SynsetId id) const {
  const auto it = index_.find(id);
  return it == index_.end() ? nullptr : &synsets_[it->second];
}

const Synset& TaxonomyGraph::at(SynsetId id) const {
  const Synset* s = find(id);
  if (s == nullptr) {
    throw ContractError("unknown synset " + to_string(id));
  }
  return *s;
}

std::uint32_t TaxonomyGraph::index_of(SynsetId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw ContractError("unknown synset " + to_string(id));
  }
  return it->second;
}

std::span<const std::uint32_t> TaxonomyGraph::parent_indices(
    std::uint32_t index) const {
  return parents_.at(index);
}

std::vector<const Synset*> TaxonomyGraph::lookup(
    std::string_view term, std::optional<PartOfSpeech> pos) const {
  std::vector<const Synset*> out;
  if (term.empty()) {
    return out;
  }
  std::string verbatim(term);
  std::replace(verbatim.begin(), verbatim.end(), ' ', '_');
  std::string underscored = verbatim;
  std::replace(underscored.begin(), underscored.end(), '-', '_');
  std::string joined = verbatim;
  std::erase(joined, '-');

  for (const std::string* key : {&verbatim, &underscored, &joined}) {
    if (key->empty()) {
      continue;
    }
    for (PartOfSpeech p : kAllPartsOfSpeech) {
      if (pos && *pos != p) {
        continue;
      }
      const auto& index = lemma_index_[pos_slot(p)];
      if (const auto it = index.find(*key); it != index.end()) {
        for (std::uint32_t i : it->second) {
          out.push_back(&synsets_[i]);
        }
      }
    }
    if (!out.empty()) {
      break;
    }
  }
  return out;
}

void TaxonomyGraph::require_taxonomy_pair(SynsetId a, SynsetId b) const {
  if (a.pos != b.pos) {
    throw ContractError("path distance between different parts of speech: " +
                        to_string(a) + " vs " + to_string(b));
  }
  if (!has_taxonomy(a.pos)) {
    throw UnsupportedPosError("no hypernym taxonomy for " +
                              std::string(pos_name(a.pos)));
  }
}

AncestorMap TaxonomyGraph::ancestors(SynsetId id) const {
  const std::uint32_t start = index_of(id);
  AncestorMap out;
  std::unordered_set<std::uint32_t> seen{start};
  std::deque<std::pair<std::uint32_t, int>> queue{{start, 0}};
  while (!queue.empty()) {
    const auto [node, dist] = queue.front();
    queue.pop_front();
    out.emplace_back(node, dist);
    for (std::uint32_t parent : parents_[node]) {
      if (seen.insert(parent).second) {
        queue.emplace_back(parent, dist + 1);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> TaxonomyGraph::shortest_path_distance(SynsetId a,
                                                         SynsetId b) const {
  require_taxonomy_pair(a, b);
  if (a == b) {
    index_of(a);
    return 0;
  }
  return closest_common_distance(ancestors(a), ancestors(b));
}

int TaxonomyGraph::longest_chain(PartOfSpeech pos) const {
  if (!has_taxonomy(pos)) {
    throw UnsupportedPosError("no hypernym taxonomy for " +
                              std::string(pos_name(pos)));
  }
  return longest_chain_[pos_slot(pos)];
}

int TaxonomyGraph::max_depth(PartOfSpeech pos) const {
  const int chain = longest_chain(pos);
  return root_count(pos) > 1 ? chain + 1 : chain;
}

std::size_t TaxonomyGraph::root_count(PartOfSpeech pos) const {
  return roots_[pos_slot(pos)];
}

int TaxonomyGraph::depth(SynsetId id) const { return depth_[index_of(id)]; }

}  // namespace stiglex
