#pragma once
// WordNet 3.0 plain-text database parser and the immutable sense
// inventory built from it. Database format reference:
// https://wordnet.princeton.edu/documentation/wndb5wn
//
// data.{noun,verb,adj,adv} line:
//   synset_offset lex_filenum ss_type w_cnt word lex_id [word lex_id...]
//   p_cnt [ptr...] [frames...] | gloss
// index.sense line:
//   sense_key synset_offset sense_number tag_cnt
//
// Copyright header lines start with two spaces and are skipped.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/pos.hpp"
#include "sense_reduce/text.hpp"

namespace sense_reduce {

struct SynsetId {
  Pos pos = Pos::Noun;
  uint32_t offset = 0;

  uint64_t packed() const {
    return (static_cast<uint64_t>(pos) << 32) | offset;
  }
  friend bool operator==(const SynsetId&, const SynsetId&) = default;
  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;
};

struct Synset {
  SynsetId id;
  std::vector<std::string> lemmas;   // canonical form, synset order
  std::string gloss;                 // definition text, example segments removed
  std::vector<std::string> examples; // quoted gloss segments, quotes stripped

  friend bool operator==(const Synset&, const Synset&) = default;
};

struct Sense {
  std::string sense_key;
  std::string lemma;
  SynsetId synset;
  int sense_number = 0;  // frequency rank for this lemma, 1-based

  friend bool operator==(const Sense&, const Sense&) = default;
};

// Split a raw gloss into definition text and example sentences.
// Segments between ';' whose trimmed content is wrapped in double
// quotes (and contains none inside) are examples; the rest rejoins
// into the definition.
struct GlossParts {
  std::string definition;
  std::vector<std::string> examples;
};

inline GlossParts split_gloss(std::string_view raw) {
  GlossParts out;
  for (const std::string& seg : split(raw, ';')) {
    std::string_view t = trim(seg);
    if (t.size() >= 2 && t.front() == '"' && t.back() == '"' &&
        t.substr(1, t.size() - 2).find('"') == std::string_view::npos) {
      std::string_view body = t.substr(1, t.size() - 2);
      if (!body.empty()) out.examples.emplace_back(body);
      continue;
    }
    if (t.empty()) continue;
    if (!out.definition.empty()) out.definition += "; ";
    out.definition += std::string(t);
  }
  return out;
}

// Counters for data oddities that are tolerated rather than fatal.
struct InventoryDiagnostics {
  size_t duplicate_lemma_synset = 0;  // two senses for the same (lemma, synset)
  size_t sense_lemma_not_in_synset = 0;

  friend bool operator==(const InventoryDiagnostics&, const InventoryDiagnostics&) = default;
};

struct InventoryStats {
  std::map<Pos, size_t> synsets_by_pos;
  std::map<Pos, size_t> senses_by_pos;
  std::map<Pos, size_t> examples_by_pos;
  size_t synsets = 0;
  size_t senses = 0;
  size_t examples = 0;
};

class InventoryBuilder;

// Immutable store of synsets, senses and lemma lookup. Safe to share
// across threads after construction.
class SenseInventory {
 public:
  SenseInventory() = default;
  SenseInventory(const SenseInventory&) = delete;
  SenseInventory& operator=(const SenseInventory&) = delete;
  SenseInventory(SenseInventory&&) = default;
  SenseInventory& operator=(SenseInventory&&) = default;

  const Synset* find_synset(SynsetId id) const {
    auto it = synsets_.find(id.packed());
    return it == synsets_.end() ? nullptr : &it->second;
  }

  const Sense* find_sense(const std::string& sense_key) const {
    auto it = senses_.find(sense_key);
    return it == senses_.end() ? nullptr : &it->second;
  }

  // All senses of (lemma, pos), ascending sense_number. Satellite
  // adjectives fold into the adjective class. Unknown lemma -> empty.
  const std::vector<const Sense*>& senses_of(std::string_view lemma, Pos pos) const {
    static const std::vector<const Sense*> empty;
    auto it = lemma_index_.find(index_key(canonical_lemma(lemma), pos));
    return it == lemma_index_.end() ? empty : it->second;
  }

  // Example sentences of the synset of `s`, gloss order.
  const std::vector<std::string>& examples_of(const Sense& s) const {
    const Sense* own = find_sense(s.sense_key);
    if (!own) throw UnknownSense(s.sense_key);
    const Synset* syn = find_synset(own->synset);
    if (!syn) throw UnknownSense(s.sense_key);
    return syn->examples;
  }

  const std::vector<std::string>& examples_of(const std::string& sense_key) const {
    const Sense* s = find_sense(sense_key);
    if (!s) throw UnknownSense(sense_key);
    return examples_of(*s);
  }

  const std::unordered_map<uint64_t, Synset>& synsets() const { return synsets_; }
  const std::unordered_map<std::string, Sense>& senses() const { return senses_; }
  size_t synset_count() const { return synsets_.size(); }
  size_t sense_count() const { return senses_.size(); }
  const InventoryDiagnostics& diagnostics() const { return diag_; }

  std::vector<SynsetId> sorted_synset_ids() const {
    std::vector<SynsetId> ids;
    ids.reserve(synsets_.size());
    for (const auto& [k, syn] : synsets_) ids.push_back(syn.id);
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  std::vector<const Sense*> sorted_senses() const {
    std::vector<const Sense*> out;
    out.reserve(senses_.size());
    for (const auto& [k, s] : senses_) out.push_back(&s);
    std::sort(out.begin(), out.end(),
              [](const Sense* a, const Sense* b) { return a->sense_key < b->sense_key; });
    return out;
  }

  InventoryStats stats() const {
    InventoryStats st;
    for (const auto& [k, syn] : synsets_) {
      st.synsets_by_pos[syn.id.pos]++;
      st.examples_by_pos[syn.id.pos] += syn.examples.size();
      st.synsets++;
      st.examples += syn.examples.size();
    }
    for (const auto& [k, s] : senses_) {
      st.senses_by_pos[s.synset.pos]++;
      st.senses++;
    }
    return st;
  }

  // Structural equality over synsets and senses (the lemma index is
  // derived data).
  friend bool operator==(const SenseInventory& a, const SenseInventory& b) {
    return a.synsets_ == b.synsets_ && a.senses_ == b.senses_;
  }

 private:
  friend class InventoryBuilder;

  static std::string index_key(std::string_view lemma, Pos pos) {
    std::string k(lemma);
    k.push_back('\x1f');
    k.push_back(pos_letter(fold_satellite(pos)));
    return k;
  }

  std::unordered_map<uint64_t, Synset> synsets_;
  std::unordered_map<std::string, Sense> senses_;
  std::unordered_map<std::string, std::vector<const Sense*>> lemma_index_;
  InventoryDiagnostics diag_;
};

// Accumulates synsets and senses, then links and freezes them into a
// SenseInventory. Shared by the file loader, the canonical-dump
// parser, and the synthetic world generator.
class InventoryBuilder {
 public:
  bool has_synset(SynsetId id) const { return synsets_.count(id.packed()) > 0; }
  bool has_sense(const std::string& key) const { return sense_keys_.count(key) > 0; }

  void add_synset(Synset syn) {
    if (syn.lemmas.empty())
      throw InvalidParameter("synset " + std::to_string(syn.id.offset) + " has no lemmas");
    if (!synsets_.emplace(syn.id.packed(), std::move(syn)).second)
      throw InvalidParameter("duplicate synset id");
  }

  void add_sense(Sense s) {
    if (s.sense_number <= 0)
      throw InvalidParameter("sense " + s.sense_key + " has non-positive sense number");
    if (!sense_keys_.insert(s.sense_key).second)
      throw InvalidParameter("duplicate sense key " + s.sense_key);
    senses_.push_back(std::move(s));
  }

  // Resolve sense -> synset links, build the lemma index, freeze.
  // A sense whose (pos, offset) does not resolve is a DanglingSense;
  // adjective/satellite keys may resolve to the sibling class, since
  // both live in data.adj and offsets there are unique.
  SenseInventory finish() {
    SenseInventory inv;
    inv.synsets_ = std::move(synsets_);

    std::unordered_set<std::string> lemma_synset_seen;  // dedup check
    for (Sense& s : senses_) {
      const Synset* syn = nullptr;
      auto it = inv.synsets_.find(s.synset.packed());
      if (it == inv.synsets_.end() &&
          (s.synset.pos == Pos::Adjective || s.synset.pos == Pos::AdjectiveSatellite)) {
        SynsetId sibling{s.synset.pos == Pos::Adjective ? Pos::AdjectiveSatellite
                                                        : Pos::Adjective,
                         s.synset.offset};
        it = inv.synsets_.find(sibling.packed());
        if (it != inv.synsets_.end()) s.synset = sibling;
      }
      if (it == inv.synsets_.end()) throw DanglingSense(s.sense_key);
      syn = &it->second;

      if (std::find(syn->lemmas.begin(), syn->lemmas.end(), s.lemma) == syn->lemmas.end())
        inv.diag_.sense_lemma_not_in_synset++;

      std::string pair_key = s.lemma + '\x1f' + std::to_string(s.synset.packed());
      if (!lemma_synset_seen.insert(std::move(pair_key)).second)
        inv.diag_.duplicate_lemma_synset++;

      const std::string key = s.sense_key;
      auto [sit, fresh] = inv.senses_.emplace(key, std::move(s));
      if (!fresh) throw InvalidParameter("duplicate sense key " + key);
    }
    senses_.clear();

    for (const auto& [k, s] : inv.senses_)
      inv.lemma_index_[SenseInventory::index_key(s.lemma, s.synset.pos)].push_back(&s);
    for (auto& [k, v] : inv.lemma_index_) {
      std::sort(v.begin(), v.end(), [](const Sense* a, const Sense* b) {
        if (a->sense_number != b->sense_number) return a->sense_number < b->sense_number;
        return a->sense_key < b->sense_key;
      });
    }
    return inv;
  }

 private:
  std::unordered_map<uint64_t, Synset> synsets_;
  std::vector<Sense> senses_;
  std::unordered_set<std::string> sense_keys_;  // keys already added
};

namespace detail {

inline bool is_header_line(std::string_view line) {
  return line.size() >= 2 && line[0] == ' ' && line[1] == ' ';
}

inline uint32_t parse_u32(std::string_view tok, const std::string& file, size_t line,
                          const char* what) {
  uint32_t v = 0;
  if (tok.empty()) throw ParseError(file, line, std::string("empty ") + what);
  for (char c : tok) {
    if (c < '0' || c > '9') throw ParseError(file, line, std::string("bad ") + what);
    v = v * 10 + static_cast<uint32_t>(c - '0');
  }
  return v;
}

inline int parse_hex(std::string_view tok, const std::string& file, size_t line,
                     const char* what) {
  int v = 0;
  if (tok.empty()) throw ParseError(file, line, std::string("empty ") + what);
  for (char c : tok) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw ParseError(file, line, std::string("bad ") + what);
    v = v * 16 + d;
  }
  return v;
}

// Strip the adjective syntactic marker: "galore(ip)" -> "galore".
inline std::string_view strip_marker(std::string_view word) {
  if (!word.empty() && word.back() == ')') {
    size_t open = word.rfind('(');
    if (open != std::string_view::npos) return word.substr(0, open);
  }
  return word;
}

inline void load_data_file(const std::filesystem::path& path, InventoryBuilder& builder) {
  const std::string fname = path.string();
  std::ifstream in(path);
  if (!in) throw MissingFile(fname);

  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || is_header_line(line)) continue;

    size_t bar = line.find(" | ");
    if (bar == std::string::npos) throw ParseError(fname, lineno, "no gloss separator '|'");
    std::string_view head(line.data(), bar);
    std::string_view gloss_raw(line.data() + bar + 3, line.size() - bar - 3);

    std::vector<Token> toks = whitespace_tokens(head);
    if (toks.size() < 4) throw ParseError(fname, lineno, "truncated synset line");

    Synset syn;
    syn.id.offset = parse_u32(toks[0].text, fname, lineno, "synset offset");
    auto pos = pos_from_letter(toks[2].text.size() == 1 ? toks[2].text[0] : '?');
    if (!pos) throw ParseError(fname, lineno, "bad ss_type '" + toks[2].text + "'");
    syn.id.pos = *pos;

    int w_cnt = parse_hex(toks[3].text, fname, lineno, "word count");
    if (w_cnt <= 0) throw ParseError(fname, lineno, "synset has no words");
    size_t t = 4;
    if (toks.size() < t + 2 * static_cast<size_t>(w_cnt) + 1)
      throw ParseError(fname, lineno, "truncated word list");
    for (int i = 0; i < w_cnt; ++i) {
      syn.lemmas.push_back(canonical_lemma(strip_marker(toks[t].text)));
      parse_hex(toks[t + 1].text, fname, lineno, "lex_id");
      t += 2;
    }

    uint32_t p_cnt = parse_u32(toks[t].text, fname, lineno, "pointer count");
    t += 1 + 4 * static_cast<size_t>(p_cnt);  // pointers are 4 tokens each
    if (t > toks.size()) throw ParseError(fname, lineno, "truncated pointer list");
    // verb frames (if any) sit between here and the gloss; nothing to keep

    GlossParts parts = split_gloss(gloss_raw);
    syn.gloss = std::move(parts.definition);
    syn.examples = std::move(parts.examples);

    if (builder.has_synset(syn.id)) throw ParseError(fname, lineno, "duplicate synset offset");
    builder.add_synset(std::move(syn));
  }
}

inline void load_index_sense(const std::filesystem::path& path, InventoryBuilder& builder) {
  const std::string fname = path.string();
  std::ifstream in(path);
  if (!in) throw MissingFile(fname);

  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || is_header_line(line)) continue;

    std::vector<Token> toks = whitespace_tokens(line);
    if (toks.size() < 3) throw ParseError(fname, lineno, "truncated sense line");

    Sense s;
    s.sense_key = toks[0].text;
    size_t pct = s.sense_key.find('%');
    if (pct == std::string::npos || pct == 0 || pct + 1 >= s.sense_key.size())
      throw ParseError(fname, lineno, "malformed sense key '" + s.sense_key + "'");
    s.lemma = canonical_lemma(std::string_view(s.sense_key).substr(0, pct));
    char digit = s.sense_key[pct + 1];
    auto pos = pos_from_ss_digit(digit - '0');
    if (!pos) throw ParseError(fname, lineno, "bad ss_type digit in sense key");
    s.synset.pos = *pos;
    s.synset.offset = parse_u32(toks[1].text, fname, lineno, "synset offset");
    s.sense_number = static_cast<int>(parse_u32(toks[2].text, fname, lineno, "sense number"));
    if (s.sense_number <= 0) throw ParseError(fname, lineno, "sense number must be positive");

    if (builder.has_sense(s.sense_key))
      throw ParseError(fname, lineno, "duplicate sense key '" + s.sense_key + "'");
    builder.add_sense(std::move(s));
  }
}

}  // namespace detail

// Load a WordNet 3.0 dict directory (data.{noun,verb,adj,adv} +
// index.sense) into a fully linked inventory. Deterministic.
inline SenseInventory load_inventory(const std::filesystem::path& dict_dir) {
  static const char* kDataFiles[] = {"data.noun", "data.verb", "data.adj", "data.adv"};
  for (const char* f : kDataFiles)
    if (!std::filesystem::exists(dict_dir / f)) throw MissingFile((dict_dir / f).string());
  if (!std::filesystem::exists(dict_dir / "index.sense"))
    throw MissingFile((dict_dir / "index.sense").string());

  InventoryBuilder builder;
  for (const char* f : kDataFiles) detail::load_data_file(dict_dir / f, builder);
  detail::load_index_sense(dict_dir / "index.sense", builder);
  return builder.finish();
}

// ---- canonical dump (line-oriented, tab-separated, UTF-8) ----
//
//   synset <pos> <offset> <lemma|lemma...> <gloss> <example>...
//   sense  <key> <lemma> <pos> <offset> <sense_number>
//
// Records are sorted (synsets by id, senses by key), so equal
// inventories produce byte-identical dumps.

inline void save_dump(const SenseInventory& inv, std::ostream& out) {
  for (SynsetId id : inv.sorted_synset_ids()) {
    const Synset& syn = *inv.find_synset(id);
    out << "synset\t" << pos_letter(id.pos) << '\t' << id.offset << '\t';
    for (size_t i = 0; i < syn.lemmas.size(); ++i) {
      if (i) out << '|';
      out << syn.lemmas[i];
    }
    out << '\t' << escape_field(syn.gloss);
    for (const std::string& ex : syn.examples) out << '\t' << escape_field(ex);
    out << '\n';
  }
  for (const Sense* s : inv.sorted_senses()) {
    out << "sense\t" << s->sense_key << '\t' << s->lemma << '\t'
        << pos_letter(s->synset.pos) << '\t' << s->synset.offset << '\t'
        << s->sense_number << '\n';
  }
}

inline SenseInventory parse_dump(std::istream& in) {
  InventoryBuilder builder;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f = split(line, '\t');
    if (f[0] == "synset") {
      if (f.size() < 5) throw ParseError("dump", lineno, "truncated synset record");
      Synset syn;
      auto pos = pos_from_letter(f[1].size() == 1 ? f[1][0] : '?');
      if (!pos) throw ParseError("dump", lineno, "bad pos letter");
      syn.id.pos = *pos;
      syn.id.offset = detail::parse_u32(f[2], "dump", lineno, "offset");
      syn.lemmas = split(f[3], '|');
      syn.gloss = unescape_field(f[4]);
      for (size_t i = 5; i < f.size(); ++i) syn.examples.push_back(unescape_field(f[i]));
      builder.add_synset(std::move(syn));
    } else if (f[0] == "sense") {
      if (f.size() != 6) throw ParseError("dump", lineno, "truncated sense record");
      Sense s;
      s.sense_key = f[1];
      s.lemma = f[2];
      auto pos = pos_from_letter(f[3].size() == 1 ? f[3][0] : '?');
      if (!pos) throw ParseError("dump", lineno, "bad pos letter");
      s.synset.pos = *pos;
      s.synset.offset = detail::parse_u32(f[4], "dump", lineno, "offset");
      s.sense_number = static_cast<int>(detail::parse_u32(f[5], "dump", lineno, "sense number"));
      builder.add_sense(std::move(s));
    } else {
      throw ParseError("dump", lineno, "unknown record type '" + f[0] + "'");
    }
  }
  return builder.finish();
}

}  // namespace sense_reduce
