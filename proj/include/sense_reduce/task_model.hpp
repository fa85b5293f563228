#pragma once
// The three task instance shapes and the solver contracts. Instances
// are immutable values; solvers are pure functions of instance plus
// captured configuration (including any seed), so results never depend
// on evaluation order.

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/pos.hpp"
#include "sense_reduce/text.hpp"

namespace sense_reduce {

using SenseKey = std::string;

// A sentence with one marked target occurrence, [start,end) byte span.
struct Context {
  std::string text;
  size_t start = 0;
  size_t end = 0;
  std::string surface;  // text.substr(start, end-start), kept denormalized

  friend bool operator==(const Context&, const Context&) = default;
};

// Validates span bounds and the surface invariant. `where` names the
// instance for error messages.
inline Context make_context(std::string text, size_t start, size_t end,
                            const std::string& where) {
  if (start >= end || end > text.size())
    throw SpanError(where, "span [" + std::to_string(start) + "," + std::to_string(end) +
                               ") out of range for length " + std::to_string(text.size()));
  std::string surface = text.substr(start, end - start);
  if (surface.find('\t') != std::string::npos || surface.find('\n') != std::string::npos)
    throw SpanError(where, "target surface contains tab or newline");
  Context c;
  c.text = std::move(text);
  c.start = start;
  c.end = end;
  c.surface = std::move(surface);
  return c;
}

struct TargetWord {
  std::string lemma;        // canonical: lowercase, underscores
  std::optional<Pos> pos;   // absent for datasets that carry no POS tag

  friend bool operator==(const TargetWord&, const TargetWord&) = default;
};

struct WsdInstance {
  std::string id;
  Context context;
  TargetWord target;
  std::optional<SenseKey> gold;
};

// Candidate sense: exactly one of sense_key / definition is set.
struct SenseRef {
  std::optional<SenseKey> sense_key;
  std::optional<std::string> definition;

  bool is_key() const { return sense_key.has_value(); }
  friend bool operator==(const SenseRef&, const SenseRef&) = default;
};

inline SenseRef sense_ref_key(SenseKey k) {
  SenseRef r;
  r.sense_key = std::move(k);
  return r;
}

inline SenseRef sense_ref_definition(std::string d) {
  SenseRef r;
  r.definition = std::move(d);
  return r;
}

struct TsvInstance {
  std::string id;
  Context context;
  TargetWord target;
  SenseRef candidate;
  std::optional<bool> gold;
};

struct WicInstance {
  std::string id;
  Context context1;
  Context context2;
  TargetWord target;
  std::optional<bool> gold;
};

// Solver contracts. A WSD solver may abstain (nullopt); the binary
// tasks answer every instance or throw a ReductionError subtype.
using WsdSolver = std::function<std::optional<SenseKey>(const WsdInstance&)>;
using TsvSolver = std::function<bool(const TsvInstance&)>;
using WicSolver = std::function<bool(const WicInstance&)>;

}  // namespace sense_reduce
