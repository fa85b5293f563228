#pragma once
// The three task reductions. Each adapter wraps a solver for one task
// into a solver for another; instance-level converters are exposed
// separately so datasets can be rewritten as well as solved.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/matcher.hpp"
#include "sense_reduce/synthetic.hpp"
#include "sense_reduce/task_model.hpp"
#include "sense_reduce/wordnet.hpp"

namespace sense_reduce {

// Supplies an example context for a sense, for the TSV -> WiC
// direction. Returns nullopt when the sense has no usable example.
using ExampleProvider = std::function<std::optional<Context>(const SenseKey&)>;

namespace detail {

// Candidate surface forms for locating a lemma inside an example
// sentence: the lemma itself plus a few regular inflections.
inline std::vector<std::string> surface_forms(const std::string& lemma) {
  std::string base = lemma;
  for (char& c : base)
    if (c == '_') c = ' ';
  std::vector<std::string> forms = {base, base + "s", base + "es",
                                    base + "ed", base + "ing"};
  if (base.size() > 1 && base.back() == 'e') {
    std::string stem = base.substr(0, base.size() - 1);
    forms.push_back(stem + "ing");  // bake -> baking
    forms.push_back(base + "d");    // bake -> baked
  }
  if (base.size() > 1 && base.back() == 'y') {
    std::string stem = base.substr(0, base.size() - 1);
    forms.push_back(stem + "ies");  // carry -> carries
    forms.push_back(stem + "ied");  // carry -> carried
  }
  return forms;
}

inline std::optional<Context> locate_target(const std::string& sentence,
                                            const std::string& lemma,
                                            const std::string& source) {
  for (const std::string& form : surface_forms(lemma)) {
    if (auto span = find_word(sentence, form))
      return make_context(sentence, span->first, span->second, source);
  }
  return std::nullopt;
}

}  // namespace detail

// Default provider: the first example of the sense's synset in which
// the lemma (or a regular inflection of it) can be located.
inline ExampleProvider default_example_provider(const SenseInventory& inv) {
  const SenseInventory* ip = &inv;
  return [ip](const SenseKey& key) -> std::optional<Context> {
    const Sense* sense = ip->find_sense(key);
    if (!sense) throw UnknownSense(key);
    const Synset* syn = ip->find_synset(sense->synset);
    if (!syn) throw UnknownSense(key);
    for (const std::string& ex : syn->examples) {
      if (auto ctx = detail::locate_target(ex, sense->lemma, "wordnet-example"))
        return ctx;
    }
    return std::nullopt;
  };
}

// Resolves a TSV candidate to a sense key. Key-form candidates pass
// through; definition-form candidates are matched against the
// definitions of the target lemma's senses by normalized equality.
inline SenseKey resolve_candidate(const SenseInventory& inv,
                                  const TsvInstance& inst) {
  if (inst.candidate.is_key()) return *inst.candidate.sense_key;

  const std::string want = normalize_sentence(*inst.candidate.definition);
  std::vector<const Sense*> senses;
  if (inst.target.pos) {
    senses = inv.senses_of(inst.target.lemma, *inst.target.pos);
  } else {
    for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb}) {
      auto part = inv.senses_of(inst.target.lemma, p);
      senses.insert(senses.end(), part.begin(), part.end());
    }
  }
  const Sense* found = nullptr;
  for (const Sense* s : senses) {
    // syn.gloss is already the bare definition, examples split off
    const Synset& syn = *inv.find_synset(s->synset);
    if (normalize_sentence(syn.gloss) == want) {
      if (found && found->synset != s->synset)
        throw UnresolvedDefinition(*inst.candidate.definition);
      if (!found) found = s;
    }
  }
  if (!found) throw UnresolvedDefinition(*inst.candidate.definition);
  return found->sense_key;
}

// --- instance-level conversions -------------------------------------

// WiC -> two WSD instances, one per side.
inline std::pair<WsdInstance, WsdInstance> wsd_instances_of(
    const WicInstance& inst) {
  WsdInstance a{inst.id + "#1", inst.context1, inst.target, std::nullopt};
  WsdInstance b{inst.id + "#2", inst.context2, inst.target, std::nullopt};
  return {std::move(a), std::move(b)};
}

// WSD -> one TSV instance per candidate sense of the target lemma, in
// sense-number order. Throws UnknownLemma when the inventory has no
// senses for the target.
inline std::vector<TsvInstance> tsv_candidates_of(const WsdInstance& inst,
                                                  const SenseInventory& inv) {
  std::vector<const Sense*> senses;
  if (inst.target.pos) {
    senses = inv.senses_of(inst.target.lemma, *inst.target.pos);
  } else {
    for (Pos p : {Pos::Noun, Pos::Verb, Pos::Adjective, Pos::Adverb}) {
      auto part = inv.senses_of(inst.target.lemma, p);
      senses.insert(senses.end(), part.begin(), part.end());
    }
  }
  if (senses.empty())
    throw UnknownLemma(inst.target.lemma,
                       inst.target.pos ? pos_name(*inst.target.pos) : "any");
  std::vector<TsvInstance> out;
  out.reserve(senses.size());
  for (const Sense* s : senses) {
    TsvInstance t;
    t.id = inst.id + "#" + s->sense_key;
    t.context = inst.context;
    t.target = inst.target;
    t.candidate = sense_ref_key(s->sense_key);
    out.push_back(std::move(t));
  }
  return out;
}

// TSV -> one WiC instance pairing the instance context with an example
// context of the candidate sense. Throws NoExample when the provider
// has nothing for the sense.
inline WicInstance wic_instance_of(const TsvInstance& inst,
                                   const ExampleProvider& examples,
                                   const SenseInventory& inv) {
  const SenseKey key = resolve_candidate(inv, inst);
  std::optional<Context> ex = examples(key);
  if (!ex) throw NoExample(key);
  WicInstance w;
  w.id = inst.id + "#ex";
  w.context1 = inst.context;
  w.context2 = std::move(*ex);
  w.target = inst.target;
  return w;
}

// --- solver adapters -------------------------------------------------

// WiC via WSD: disambiguate both sides, answer True iff the senses
// agree. An abstention on either side propagates as AbstainedUpstream.
inline WicSolver wic_via_wsd(WsdSolver wsd) {
  return [wsd = std::move(wsd)](const WicInstance& inst) -> bool {
    auto [a, b] = wsd_instances_of(inst);
    std::optional<SenseKey> s1 = wsd(a);
    std::optional<SenseKey> s2 = wsd(b);
    if (!s1 || !s2) throw AbstainedUpstream(inst.id);
    return *s1 == *s2;
  };
}

// WSD via TSV: ask the verifier about every candidate sense; exactly
// one True names the sense, otherwise the outcome is reported as a
// reduction error rather than a guess.
inline WsdSolver wsd_via_tsv(TsvSolver tsv, const SenseInventory& inv) {
  const SenseInventory* ip = &inv;
  return [tsv = std::move(tsv), ip](const WsdInstance& inst)
             -> std::optional<SenseKey> {
    std::vector<SenseKey> verified;
    for (const TsvInstance& cand : tsv_candidates_of(inst, *ip)) {
      if (tsv(cand)) verified.push_back(*cand.candidate.sense_key);
    }
    if (verified.empty()) throw ZeroTrue(inst.id);
    if (verified.size() > 1) throw MultiTrue(inst.id, verified);
    return verified.front();
  };
}

// TSV via WiC: pair the context with an example of the candidate sense
// and ask whether the target is used in the same way.
inline TsvSolver tsv_via_wic(WicSolver wic, ExampleProvider examples,
                             const SenseInventory& inv) {
  const SenseInventory* ip = &inv;
  return [wic = std::move(wic), examples = std::move(examples),
          ip](const TsvInstance& inst) -> bool {
    return wic(wic_instance_of(inst, examples, *ip));
  };
}

// --- gold oracles for synthetic worlds -------------------------------

struct GoldSolvers {
  WsdSolver wsd;
  TsvSolver tsv;
  WicSolver wic;
};

// Solvers that read the generated gold assignment. Contexts are looked
// up by text, which is unique per world.
inline GoldSolvers make_gold_solvers(const SyntheticWorld& world) {
  const SyntheticWorld* wp = &world;
  auto gold_of = [wp](const Context& c) -> const SenseKey& {
    auto it = wp->gold_sense_of_context.find(c.text);
    if (it == wp->gold_sense_of_context.end()) throw UnknownContext(c.text);
    return it->second;
  };
  GoldSolvers g;
  g.wsd = [gold_of](const WsdInstance& inst) -> std::optional<SenseKey> {
    return gold_of(inst.context);
  };
  g.tsv = [gold_of, wp](const TsvInstance& inst) -> bool {
    return gold_of(inst.context) == resolve_candidate(wp->inventory, inst);
  };
  g.wic = [gold_of](const WicInstance& inst) -> bool {
    return gold_of(inst.context1) == gold_of(inst.context2);
  };
  return g;
}

}  // namespace sense_reduce
