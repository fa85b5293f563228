#pragma once
// Dataset loaders for the three public releases, plus the unified
// instance dump the CLI convert command writes.
//
//   WiC v1.0:   <target> <pos> <i1-i2> <sentence1> <sentence2>   (tab-sep)
//               gold file: one T/F line per data line
//   MCL-WiC:    JSON array of {id, lemma, pos, sentence1, sentence2,
//               start1, end1, start2, end2}; tag file: <id> <T/F>
//   WiC-TSV:    examples file <target> <token_pos> <context>, aligned
//               definitions file, aligned labels file (optional)
//
// Loaders are deterministic; instances come out in file order.

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/task_model.hpp"

namespace sense_reduce {

namespace detail {

inline std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingFile(path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  // a single trailing blank line is a file terminator, not a record
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

inline std::string split_stem(const std::filesystem::path& path) {
  std::string stem = path.filename().string();
  size_t dot = stem.find('.');
  if (dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
  return stem;
}

inline std::string padded_id(const std::string& stem, size_t index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%06zu", index);
  return stem + ":" + buf;
}

inline std::optional<bool> parse_tf(std::string_view s) {
  std::string_view t = trim(s);
  if (t == "T") return true;
  if (t == "F") return false;
  return std::nullopt;
}

// Token index -> byte span under whitespace tokenization.
inline std::pair<size_t, size_t> token_span(const std::string& sentence, size_t token_index,
                                            const std::string& where) {
  std::vector<Token> toks = whitespace_tokens(sentence);
  if (token_index >= toks.size())
    throw SpanError(where, "token index " + std::to_string(token_index) +
                               " out of range (" + std::to_string(toks.size()) + " tokens)");
  return {toks[token_index].start, toks[token_index].end};
}

}  // namespace detail

// Warnings collected while loading (surface/lemma mismatches are
// tolerated: real data contains tokenization artifacts).
struct LoadWarnings {
  size_t surface_lemma_mismatch = 0;
};

// ---- WiC v1.0 ----

inline std::vector<WicInstance> load_wic(const std::filesystem::path& data_path,
                                         const std::filesystem::path& gold_path = {},
                                         LoadWarnings* warnings = nullptr) {
  const std::string fname = data_path.string();
  std::vector<std::string> data = detail::read_lines(data_path);

  std::vector<std::optional<bool>> gold(data.size());
  if (!gold_path.empty()) {
    std::vector<std::string> gl = detail::read_lines(gold_path);
    if (gl.size() != data.size())
      throw LengthMismatch("data vs gold line counts", data.size(), gl.size());
    for (size_t i = 0; i < gl.size(); ++i) {
      auto tf = detail::parse_tf(gl[i]);
      if (!tf) throw FormatError(gold_path.string(), i + 1, "gold label must be T or F");
      gold[i] = tf;
    }
  }

  const std::string stem = detail::split_stem(data_path);
  std::vector<WicInstance> out;
  out.reserve(data.size());
  for (size_t i = 0; i < data.size(); ++i) {
    const size_t lineno = i + 1;
    std::vector<std::string> cols = split(data[i], '\t');
    if (cols.size() != 5)
      throw FormatError(fname, lineno,
                        "expected 5 tab-separated columns, got " + std::to_string(cols.size()));

    WicInstance inst;
    inst.id = detail::padded_id(stem, i);
    inst.target.lemma = canonical_lemma(cols[0]);
    if (inst.target.lemma.empty()) throw FormatError(fname, lineno, "empty target word");
    auto pos = pos_from_tag(cols[1]);
    if (!pos) throw FormatError(fname, lineno, "unknown POS tag '" + cols[1] + "'");
    inst.target.pos = *pos;

    std::vector<std::string> idx = split(cols[2], '-');
    if (idx.size() != 2) throw FormatError(fname, lineno, "bad index pair '" + cols[2] + "'");
    size_t i1, i2;
    try {
      i1 = std::stoul(idx[0]);
      i2 = std::stoul(idx[1]);
    } catch (const std::exception&) {
      throw FormatError(fname, lineno, "bad index pair '" + cols[2] + "'");
    }

    auto [s1, e1] = detail::token_span(cols[3], i1, inst.id + "/sentence1");
    auto [s2, e2] = detail::token_span(cols[4], i2, inst.id + "/sentence2");
    inst.context1 = make_context(cols[3], s1, e1, inst.id + "/sentence1");
    inst.context2 = make_context(cols[4], s2, e2, inst.id + "/sentence2");
    inst.gold = gold[i];

    if (warnings) {
      std::string l = inst.target.lemma;
      if (to_lower(inst.context1.surface).find(l.substr(0, 3)) == std::string::npos ||
          to_lower(inst.context2.surface).find(l.substr(0, 3)) == std::string::npos)
        warnings->surface_lemma_mismatch++;
    }
    out.push_back(std::move(inst));
  }
  return out;
}

// ---- MCL-WiC (English monolingual) ----

inline std::vector<WicInstance> load_mclwic(const std::filesystem::path& json_path,
                                            const std::filesystem::path& tags_path = {}) {
  const std::string fname = json_path.string();
  std::ifstream in(json_path);
  if (!in) throw MissingFile(fname);

  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fname, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError(fname, 0, "expected a JSON array of records");

  auto get_str = [&](const nlohmann::json& rec, const char* field, size_t n) -> std::string {
    if (!rec.contains(field))
      throw FormatError(fname, n, std::string("record missing field '") + field + "'");
    const auto& v = rec[field];
    if (v.is_string()) return v.get<std::string>();
    throw FormatError(fname, n, std::string("field '") + field + "' must be a string");
  };
  auto get_offset = [&](const nlohmann::json& rec, const char* field, size_t n) -> size_t {
    if (!rec.contains(field))
      throw FormatError(fname, n, std::string("record missing field '") + field + "'");
    const auto& v = rec[field];
    if (v.is_number_unsigned() || v.is_number_integer()) {
      auto x = v.get<long long>();
      if (x < 0) throw FormatError(fname, n, std::string("negative offset in '") + field + "'");
      return static_cast<size_t>(x);
    }
    if (v.is_string()) {
      try {
        return std::stoul(v.get<std::string>());
      } catch (const std::exception&) {
        throw FormatError(fname, n, std::string("bad offset in '") + field + "'");
      }
    }
    throw FormatError(fname, n, std::string("field '") + field + "' must be a number");
  };

  std::vector<WicInstance> out;
  out.reserve(doc.size());
  size_t n = 0;
  for (const auto& rec : doc) {
    ++n;
    if (!rec.is_object()) throw FormatError(fname, n, "record is not an object");
    WicInstance inst;
    inst.id = get_str(rec, "id", n);
    inst.target.lemma = canonical_lemma(get_str(rec, "lemma", n));
    if (inst.target.lemma.empty()) throw FormatError(fname, n, "empty lemma");
    std::string tag = get_str(rec, "pos", n);
    auto pos = pos_from_tag(tag);
    if (!pos) throw FormatError(fname, n, "unknown POS tag '" + tag + "'");
    inst.target.pos = *pos;

    // character offsets taken verbatim from the record
    inst.context1 = make_context(get_str(rec, "sentence1", n), get_offset(rec, "start1", n),
                                 get_offset(rec, "end1", n), inst.id + "/sentence1");
    inst.context2 = make_context(get_str(rec, "sentence2", n), get_offset(rec, "start2", n),
                                 get_offset(rec, "end2", n), inst.id + "/sentence2");
    out.push_back(std::move(inst));
  }

  if (!tags_path.empty()) {
    std::unordered_map<std::string, bool> tags;
    std::vector<std::string> lines = detail::read_lines(tags_path);
    for (size_t i = 0; i < lines.size(); ++i) {
      if (trim(lines[i]).empty()) continue;
      std::vector<Token> toks = whitespace_tokens(lines[i]);
      if (toks.size() != 2)
        throw FormatError(tags_path.string(), i + 1, "expected '<id> <T/F>'");
      auto tf = detail::parse_tf(toks[1].text);
      if (!tf) throw FormatError(tags_path.string(), i + 1, "tag must be T or F");
      if (!tags.emplace(toks[0].text, *tf).second)
        throw FormatError(tags_path.string(), i + 1, "duplicate tag for id " + toks[0].text);
    }
    std::unordered_map<std::string, char> known;
    for (auto& inst : out) {
      known.emplace(inst.id, 0);
      auto it = tags.find(inst.id);
      if (it == tags.end()) throw MissingTag(inst.id);
      inst.gold = it->second;
    }
    for (const auto& [id, tf] : tags)
      if (!known.count(id)) throw UnknownTagId(id);
  }
  return out;
}

// ---- WiC-TSV (definition sub-task) ----

inline std::vector<TsvInstance> load_wictsv(const std::filesystem::path& examples_path,
                                            const std::filesystem::path& definitions_path,
                                            const std::filesystem::path& labels_path = {}) {
  const std::string fname = examples_path.string();
  std::vector<std::string> examples = detail::read_lines(examples_path);
  std::vector<std::string> definitions = detail::read_lines(definitions_path);
  if (definitions.size() != examples.size())
    throw LengthMismatch("examples vs definitions line counts", examples.size(),
                         definitions.size());

  std::vector<std::optional<bool>> gold(examples.size());
  if (!labels_path.empty()) {
    std::vector<std::string> labels = detail::read_lines(labels_path);
    if (labels.size() != examples.size())
      throw LengthMismatch("examples vs labels line counts", examples.size(), labels.size());
    for (size_t i = 0; i < labels.size(); ++i) {
      auto tf = detail::parse_tf(labels[i]);
      if (!tf) throw FormatError(labels_path.string(), i + 1, "label must be T or F");
      gold[i] = tf;
    }
  }

  const std::string stem = detail::split_stem(examples_path);
  std::vector<TsvInstance> out;
  out.reserve(examples.size());
  for (size_t i = 0; i < examples.size(); ++i) {
    const size_t lineno = i + 1;
    std::vector<std::string> cols = split(examples[i], '\t');
    // target word, target token position, context; extra columns
    // (hypernym variants of the release) are ignored
    if (cols.size() < 3)
      throw FormatError(fname, lineno,
                        "expected >=3 tab-separated columns, got " + std::to_string(cols.size()));

    TsvInstance inst;
    inst.id = detail::padded_id(stem, i);
    inst.target.lemma = canonical_lemma(cols[0]);
    if (inst.target.lemma.empty()) throw FormatError(fname, lineno, "empty target word");
    // the release carries no POS column; leave it unset

    size_t tok_idx;
    try {
      tok_idx = std::stoul(cols[1]);
    } catch (const std::exception&) {
      throw FormatError(fname, lineno, "bad token position '" + cols[1] + "'");
    }
    auto [s, e] = detail::token_span(cols[2], tok_idx, inst.id);
    inst.context = make_context(cols[2], s, e, inst.id);

    std::string def(trim(definitions[i]));
    if (def.empty())
      throw FormatError(definitions_path.string(), lineno, "empty definition");
    inst.candidate = sense_ref_definition(std::move(def));
    inst.gold = gold[i];
    out.push_back(std::move(inst));
  }
  return out;
}

// ---- unified instance dump ----
//
// One line per instance, tab-separated:
//   task id lemma pos span1 text1 span2 text2 candidate gold
// Absent fields are "-". Text fields are backslash-escaped. POS "-"
// when the dataset carries none.

namespace detail {

inline std::string span_str(const Context& c) {
  return std::to_string(c.start) + "-" + std::to_string(c.end);
}

inline std::string pos_str(const std::optional<Pos>& p) {
  return p ? std::string(1, pos_letter(*p)) : "-";
}

}  // namespace detail

inline void write_unified(std::ostream& out, const WicInstance& i) {
  out << "wic\t" << i.id << '\t' << i.target.lemma << '\t' << detail::pos_str(i.target.pos)
      << '\t' << detail::span_str(i.context1) << '\t' << escape_field(i.context1.text) << '\t'
      << detail::span_str(i.context2) << '\t' << escape_field(i.context2.text) << "\t-\t"
      << (i.gold ? (*i.gold ? "T" : "F") : "-") << '\n';
}

inline void write_unified(std::ostream& out, const WsdInstance& i) {
  out << "wsd\t" << i.id << '\t' << i.target.lemma << '\t' << detail::pos_str(i.target.pos)
      << '\t' << detail::span_str(i.context) << '\t' << escape_field(i.context.text)
      << "\t-\t-\t-\t" << (i.gold ? escape_field(*i.gold) : "-") << '\n';
}

inline void write_unified(std::ostream& out, const TsvInstance& i) {
  std::string cand = i.candidate.is_key() ? *i.candidate.sense_key
                                          : "def:" + *i.candidate.definition;
  out << "tsv\t" << i.id << '\t' << i.target.lemma << '\t' << detail::pos_str(i.target.pos)
      << '\t' << detail::span_str(i.context) << '\t' << escape_field(i.context.text)
      << "\t-\t-\t" << escape_field(cand) << '\t'
      << (i.gold ? (*i.gold ? "T" : "F") : "-") << '\n';
}

}  // namespace sense_reduce
