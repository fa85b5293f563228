#pragma once
// Sentence-to-example matching: an index over every example sentence
// in the inventory, keyed by a normalized form, plus the WSD solver
// built on it (match, otherwise abstain or guess uniformly).

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/rng.hpp"
#include "sense_reduce/task_model.hpp"
#include "sense_reduce/text.hpp"
#include "sense_reduce/wordnet.hpp"

namespace sense_reduce {

namespace detail {

// Strips one straight or curly quote from either end, if present.
// Returns true when something was removed.
inline bool strip_edge_quotes(std::string& s) {
  bool changed = false;
  auto drop_front = [&](size_t n) { s.erase(0, n); changed = true; };
  auto drop_back = [&](size_t n) { s.erase(s.size() - n); changed = true; };
  static const char* kCurly[] = {"\xe2\x80\x9c", "\xe2\x80\x9d",
                                 "\xe2\x80\x98", "\xe2\x80\x99"};
  if (!s.empty() && (s.front() == '"' || s.front() == '\'')) drop_front(1);
  for (const char* q : kCurly)
    if (s.size() >= 3 && s.compare(0, 3, q) == 0) drop_front(3);
  if (!s.empty() && (s.back() == '"' || s.back() == '\'' || s.back() == '.' ||
                     s.back() == '!' || s.back() == '?' || s.back() == ';'))
    drop_back(1);
  for (const char* q : kCurly)
    if (s.size() >= 3 && s.compare(s.size() - 3, 3, q) == 0) drop_back(3);
  return changed;
}

}  // namespace detail

// Lowercases ASCII, collapses whitespace runs to single spaces, and
// repeatedly strips terminal punctuation (. ! ? ;) and surrounding
// quotes until stable. Idempotent.
inline std::string normalize_sentence(std::string_view raw) {
  std::string s = collapse_ws(to_lower(raw));
  for (;;) {
    bool changed = detail::strip_edge_quotes(s);
    std::string t = std::string(trim(s));
    if (t.size() != s.size()) {
      s = std::move(t);
      changed = true;
    }
    if (!changed) break;
  }
  return s;
}

enum class BackoffKind { Abstain, RandomUniform };

struct BackoffPolicy {
  BackoffKind kind = BackoffKind::Abstain;
  uint64_t seed = 0;

  static BackoffPolicy abstain() { return {BackoffKind::Abstain, 0}; }
  static BackoffPolicy random_uniform(uint64_t seed) {
    return {BackoffKind::RandomUniform, seed};
  }
};

// One index entry: this normalized sentence is an example of
// sense_key, whose lemma is a member of the example's synset.
class ExampleIndex {
 public:
  struct Entry {
    std::string lemma;
    SenseKey sense_key;
    Pos pos;
  };

  ExampleIndex() = default;
  ExampleIndex(const ExampleIndex&) = delete;
  ExampleIndex& operator=(const ExampleIndex&) = delete;
  ExampleIndex(ExampleIndex&& o) noexcept
      : map_(std::move(o.map_)),
        raw_(std::move(o.raw_)),
        casefold_(std::move(o.casefold_)),
        entries_(o.entries_),
        sentence_refs_(o.sentence_refs_),
        ambiguous_(o.ambiguous_.load()) {}

  static ExampleIndex build(const SenseInventory& inv) {
    ExampleIndex idx;
    for (const SynsetId& id : inv.sorted_synset_ids()) {
      const Synset& syn = *inv.find_synset(id);
      for (const std::string& ex : syn.examples) {
        idx.raw_.insert(ex);
        idx.casefold_.insert(collapse_ws(to_lower(ex)));
        const std::string norm = normalize_sentence(ex);
        ++idx.sentence_refs_;
        for (const std::string& lemma : syn.lemmas) {
          const Sense* sense = nullptr;
          for (const Sense* s : inv.senses_of(lemma, id.pos)) {
            if (s->synset == id) {
              sense = s;
              break;
            }
          }
          if (!sense) continue;
          idx.map_[norm].push_back({lemma, sense->sense_key, id.pos});
          ++idx.entries_;
        }
      }
    }
    return idx;
  }

  // The sense of the target word, when the sentence is (after
  // normalization) an example sentence and exactly one sense of the
  // target is attested for it. Multiple distinct senses count as an
  // ambiguous hit and yield nullopt.
  std::optional<SenseKey> match(std::string_view sentence,
                                const TargetWord& target) const {
    bool ambiguous = false;
    auto r = match_impl(sentence, target, ambiguous);
    if (ambiguous) ++ambiguous_;
    return r;
  }

  size_t entry_count() const { return entries_; }
  size_t sentence_count() const { return map_.size(); }
  uint64_t ambiguous_count() const { return ambiguous_.load(); }

  // Rung membership for diagnostics: is the sentence an example under
  // progressively stronger normalization?
  bool contains_raw(std::string_view s) const {
    return raw_.count(std::string(s)) > 0;
  }
  bool contains_casefold(std::string_view s) const {
    return casefold_.count(collapse_ws(to_lower(s))) > 0;
  }
  bool contains_norm(std::string_view s) const {
    return map_.count(normalize_sentence(s)) > 0;
  }

  std::optional<SenseKey> match_counted(std::string_view sentence,
                                        const TargetWord& target,
                                        uint64_t& ambiguous_out) const {
    bool ambiguous = false;
    auto r = match_impl(sentence, target, ambiguous);
    if (ambiguous) {
      ++ambiguous_out;
      ++ambiguous_;
    }
    return r;
  }

 private:
  std::optional<SenseKey> match_impl(std::string_view sentence,
                                     const TargetWord& target,
                                     bool& ambiguous) const {
    auto it = map_.find(normalize_sentence(sentence));
    if (it == map_.end()) return std::nullopt;
    std::optional<SenseKey> found;
    bool multiple = false;
    for (const Entry& e : it->second) {
      if (e.lemma != target.lemma) continue;
      if (target.pos && !pos_compatible(e.pos, *target.pos)) continue;
      if (found && *found != e.sense_key) multiple = true;
      if (!found) found = e.sense_key;
    }
    if (multiple) {
      ambiguous = true;
      return std::nullopt;
    }
    return found;
  }

  std::unordered_map<std::string, std::vector<Entry>> map_;
  std::unordered_set<std::string> raw_;
  std::unordered_set<std::string> casefold_;
  size_t entries_ = 0;
  size_t sentence_refs_ = 0;
  mutable std::atomic<uint64_t> ambiguous_{0};
};

// WSD by example matching. Unmatched instances abstain or draw a sense
// uniformly at random, deterministically in (seed, instance id).
inline WsdSolver matching_wsd_solver(const ExampleIndex& idx,
                                     const SenseInventory& inv,
                                     BackoffPolicy policy) {
  const ExampleIndex* xp = &idx;
  const SenseInventory* ip = &inv;
  return [xp, ip, policy](const WsdInstance& inst) -> std::optional<SenseKey> {
    if (auto m = xp->match(inst.context.text, inst.target)) return m;
    if (policy.kind == BackoffKind::Abstain) return std::nullopt;
    std::vector<const Sense*> senses;
    if (inst.target.pos) {
      senses = ip->senses_of(inst.target.lemma, *inst.target.pos);
    } else {
      for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb}) {
        auto part = ip->senses_of(inst.target.lemma, p);
        senses.insert(senses.end(), part.begin(), part.end());
      }
    }
    if (senses.empty())
      throw UnknownLemma(inst.target.lemma,
                         inst.target.pos ? pos_name(*inst.target.pos) : "any");
    size_t k = draw_index(policy.seed, inst.id, senses.size());
    return senses[k]->sense_key;
  };
}

struct MatchStats {
  size_t n = 0;
  size_t n_both_matched = 0;
  size_t n_side1 = 0;
  size_t n_side2 = 0;
  uint64_t n_ambiguous = 0;
  double fraction = 0.0;
  // sentence-membership fractions per normalization rung (both sides)
  double rung_raw = 0.0;
  double rung_casefold = 0.0;
  double rung_norm = 0.0;
};

inline MatchStats match_stats(const ExampleIndex& idx,
                              const std::vector<WicInstance>& data) {
  if (data.empty()) throw EmptyDataset();
  MatchStats st;
  st.n = data.size();
  size_t raw = 0, casefold = 0, norm = 0;
  for (const WicInstance& inst : data) {
    auto m1 = idx.match_counted(inst.context1.text, inst.target, st.n_ambiguous);
    auto m2 = idx.match_counted(inst.context2.text, inst.target, st.n_ambiguous);
    if (m1) ++st.n_side1;
    if (m2) ++st.n_side2;
    if (m1 && m2) ++st.n_both_matched;
    if (idx.contains_raw(inst.context1.text) &&
        idx.contains_raw(inst.context2.text))
      ++raw;
    if (idx.contains_casefold(inst.context1.text) &&
        idx.contains_casefold(inst.context2.text))
      ++casefold;
    if (idx.contains_norm(inst.context1.text) &&
        idx.contains_norm(inst.context2.text))
      ++norm;
  }
  st.fraction = static_cast<double>(st.n_both_matched) / static_cast<double>(st.n);
  st.rung_raw = static_cast<double>(raw) / static_cast<double>(st.n);
  st.rung_casefold = static_cast<double>(casefold) / static_cast<double>(st.n);
  st.rung_norm = static_cast<double>(norm) / static_cast<double>(st.n);
  return st;
}

inline double match_fraction(const ExampleIndex& idx,
                             const std::vector<WicInstance>& data) {
  return match_stats(idx, data).fraction;
}

}  // namespace sense_reduce
