#pragma once
// Generated miniature worlds: an inventory plus a gold sense
// assignment for every context, with the three task datasets derived
// so that gold labels are consistent by construction. Used to verify
// the reductions exhaustively without external data.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "sense_reduce/errors.hpp"
#include "sense_reduce/rng.hpp"
#include "sense_reduce/task_model.hpp"
#include "sense_reduce/wordnet.hpp"

namespace sense_reduce {

struct SyntheticWorld {
  SenseInventory inventory;
  // context text -> gold sense key; texts are unique by construction
  std::unordered_map<std::string, SenseKey> gold_sense_of_context;
  std::vector<WsdInstance> wsd;
  std::vector<TsvInstance> tsv;
  std::vector<WicInstance> wic;
};

// Deterministic for a given seed. Every lemma gets senses_per_lemma
// senses and every sense examples_per_sense example contexts, all of
// which also appear as gloss examples of the sense's synset. WiC
// pairs are all within-lemma context pairs (i < j); TSV instances are
// every (context, candidate sense of its lemma) pair.
inline SyntheticWorld generate_synthetic_world(uint64_t seed, int n_lemmas,
                                               int senses_per_lemma,
                                               int examples_per_sense) {
  if (n_lemmas < 1) throw InvalidParameter("n_lemmas must be >= 1");
  if (senses_per_lemma < 1) throw InvalidParameter("senses_per_lemma must be >= 1");
  if (examples_per_sense < 1) throw InvalidParameter("examples_per_sense must be >= 1");

  SyntheticWorld world;
  InventoryBuilder builder;

  struct Ctx {
    std::string text;
    size_t start, end;
    SenseKey sense;
  };
  std::vector<std::vector<Ctx>> contexts_by_lemma(static_cast<size_t>(n_lemmas));
  std::vector<std::vector<SenseKey>> senses_by_lemma(static_cast<size_t>(n_lemmas));

  uint32_t next_offset = 1000;
  size_t counter = 0;
  for (int li = 0; li < n_lemmas; ++li) {
    const std::string lemma = "word" + std::to_string(li);
    for (int si = 0; si < senses_per_lemma; ++si) {
      char keybuf[16];
      std::snprintf(keybuf, sizeof(keybuf), "%02d", si);
      const SenseKey key = lemma + "%1:00:" + keybuf + "::";

      Synset syn;
      syn.id = {Pos::Noun, next_offset++};
      syn.lemmas = {lemma};
      syn.gloss = "meaning " + std::to_string(si + 1) + " of " + lemma;
      for (int ei = 0; ei < examples_per_sense; ++ei) {
        // unique, pre-normalized text containing the lemma verbatim
        uint64_t tag = splitmix64(seed ^ (0x5157ULL + counter));
        char hex[12];
        std::snprintf(hex, sizeof(hex), "%08llx", static_cast<unsigned long long>(tag & 0xffffffffULL));
        std::string text = "the " + lemma + " appeared in sample " +
                           std::to_string(counter) + "x" + hex;
        contexts_by_lemma[li].push_back({text, 4, 4 + lemma.size(), key});
        world.gold_sense_of_context.emplace(text, key);
        syn.examples.push_back(std::move(text));
        ++counter;
      }
      builder.add_synset(std::move(syn));

      Sense s;
      s.sense_key = key;
      s.lemma = lemma;
      s.synset = {Pos::Noun, next_offset - 1};
      s.sense_number = si + 1;
      builder.add_sense(std::move(s));
      senses_by_lemma[li].push_back(key);
    }
  }
  world.inventory = builder.finish();

  size_t wsd_n = 0, tsv_n = 0, wic_n = 0;
  for (int li = 0; li < n_lemmas; ++li) {
    const std::string lemma = "word" + std::to_string(li);
    const TargetWord target{lemma, Pos::Noun};
    const auto& ctxs = contexts_by_lemma[li];

    for (const Ctx& c : ctxs) {
      WsdInstance w;
      w.id = "syn-wsd-" + std::to_string(wsd_n++);
      w.context = make_context(c.text, c.start, c.end, "synthetic");
      w.target = target;
      w.gold = c.sense;
      world.wsd.push_back(std::move(w));

      for (const SenseKey& cand : senses_by_lemma[li]) {
        TsvInstance t;
        t.id = "syn-tsv-" + std::to_string(tsv_n++);
        t.context = make_context(c.text, c.start, c.end, "synthetic");
        t.target = target;
        t.candidate = sense_ref_key(cand);
        t.gold = (cand == c.sense);
        world.tsv.push_back(std::move(t));
      }
    }

    for (size_t i = 0; i < ctxs.size(); ++i) {
      for (size_t j = i + 1; j < ctxs.size(); ++j) {
        WicInstance w;
        w.id = "syn-wic-" + std::to_string(wic_n++);
        w.context1 = make_context(ctxs[i].text, ctxs[i].start, ctxs[i].end, "synthetic");
        w.context2 = make_context(ctxs[j].text, ctxs[j].start, ctxs[j].end, "synthetic");
        w.target = target;
        w.gold = (ctxs[i].sense == ctxs[j].sense);
        world.wic.push_back(std::move(w));
      }
    }
  }
  return world;
}

}  // namespace sense_reduce
