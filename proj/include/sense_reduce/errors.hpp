#pragma once
// Error taxonomy. Everything derives from Error (a runtime_error), so
// callers can catch broadly; loaders and solvers throw the specific
// types. ReductionError subtypes carry enough detail to reproduce
// the failing call.

#include <stdexcept>
#include <string>
#include <vector>

namespace sense_reduce {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- inventory / file loading ----

struct MissingFile : Error {
  explicit MissingFile(const std::string& path)
      : Error("missing file: " + path), path(path) {}
  std::string path;
};

struct ParseError : Error {
  ParseError(const std::string& file, size_t line, const std::string& reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason),
        file(file), line(line), reason(reason) {}
  std::string file;
  size_t line;
  std::string reason;
};

struct DanglingSense : Error {
  explicit DanglingSense(const std::string& sense_key)
      : Error("sense key references absent synset: " + sense_key),
        sense_key(sense_key) {}
  std::string sense_key;
};

struct UnknownSense : Error {
  explicit UnknownSense(const std::string& sense_key)
      : Error("unknown sense key: " + sense_key), sense_key(sense_key) {}
  std::string sense_key;
};

// ---- dataset loading ----

struct FormatError : Error {
  FormatError(const std::string& file, size_t line, const std::string& reason)
      : Error(file + ":" + std::to_string(line) + ": " + reason),
        file(file), line(line), reason(reason) {}
  std::string file;
  size_t line;
  std::string reason;
};

struct SpanError : Error {
  SpanError(const std::string& where, const std::string& reason)
      : Error(where + ": " + reason), where(where), reason(reason) {}
  std::string where;
  std::string reason;
};

struct LengthMismatch : Error {
  LengthMismatch(const std::string& what, size_t lhs, size_t rhs)
      : Error(what + ": " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
        lhs(lhs), rhs(rhs) {}
  size_t lhs;
  size_t rhs;
};

struct UnknownTagId : Error {
  explicit UnknownTagId(const std::string& id)
      : Error("tag for unknown instance id: " + id), id(id) {}
  std::string id;
};

struct MissingTag : Error {
  explicit MissingTag(const std::string& id)
      : Error("no tag for instance id: " + id), id(id) {}
  std::string id;
};

struct InvalidParameter : Error {
  using Error::Error;
};

// ---- reduction failures (solver-level, caught per instance) ----

struct ReductionError : Error {
  using Error::Error;
};

struct ZeroTrue : ReductionError {
  explicit ZeroTrue(const std::string& instance_id)
      : ReductionError("no candidate sense verified for instance " + instance_id),
        instance_id(instance_id) {}
  std::string instance_id;
};

struct MultiTrue : ReductionError {
  MultiTrue(const std::string& instance_id, std::vector<std::string> sense_keys)
      : ReductionError(describe(instance_id, sense_keys)),
        instance_id(instance_id), sense_keys(std::move(sense_keys)) {}
  std::string instance_id;
  std::vector<std::string> sense_keys;

 private:
  static std::string describe(const std::string& id, const std::vector<std::string>& keys) {
    std::string s = "multiple senses verified for instance " + id + ":";
    for (const auto& k : keys) s += " " + k;
    return s;
  }
};

struct NoExample : ReductionError {
  explicit NoExample(const std::string& sense_key)
      : ReductionError("no example context for sense " + sense_key),
        sense_key(sense_key) {}
  std::string sense_key;
};

struct AbstainedUpstream : ReductionError {
  explicit AbstainedUpstream(const std::string& instance_id)
      : ReductionError("upstream solver abstained on instance " + instance_id),
        instance_id(instance_id) {}
  std::string instance_id;
};

struct UnresolvedDefinition : ReductionError {
  explicit UnresolvedDefinition(const std::string& definition)
      : ReductionError("definition matches no inventory gloss: " + definition),
        definition(definition) {}
  std::string definition;
};

struct UnknownLemma : ReductionError {
  UnknownLemma(const std::string& lemma, const std::string& pos)
      : ReductionError("no senses for lemma '" + lemma + "' (" + pos + ")"),
        lemma(lemma) {}
  std::string lemma;
};

struct UnknownContext : ReductionError {
  explicit UnknownContext(const std::string& text)
      : ReductionError("context not part of this world: " + text), text(text) {}
  std::string text;
};

// ---- evaluation ----

struct EmptyDataset : Error {
  EmptyDataset() : Error("empty dataset") {}
};

struct OutOfRange : Error {
  using Error::Error;
};

struct InvalidCounts : Error {
  using Error::Error;
};

struct NoScored : Error {
  NoScored() : Error("no scored instances (all abstained or failed)") {}
};

struct MissingGold : Error {
  explicit MissingGold(const std::string& instance_id)
      : Error("missing gold label for instance " + instance_id),
        instance_id(instance_id) {}
  std::string instance_id;
};

}  // namespace sense_reduce
