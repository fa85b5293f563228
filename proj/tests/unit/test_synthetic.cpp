#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <string>

#include <sense_reduce/synthetic.hpp>

using namespace sense_reduce;

TEST_CASE("generator rejects degenerate shapes") {
  CHECK_THROWS_AS(generate_synthetic_world(1, 0, 1, 1), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic_world(1, 1, 0, 1), InvalidParameter);
  CHECK_THROWS_AS(generate_synthetic_world(1, 1, 1, 0), InvalidParameter);
}

TEST_CASE("world sizes follow the shape arithmetic") {
  struct Shape {
    int lemmas, senses, examples;
  };
  for (Shape sh : {Shape{1, 1, 1}, Shape{2, 3, 1}, Shape{5, 3, 2}, Shape{4, 1, 4}}) {
    SyntheticWorld w = generate_synthetic_world(9, sh.lemmas, sh.senses, sh.examples);
    const size_t L = sh.lemmas, S = sh.senses, E = sh.examples;
    const size_t per_lemma = S * E;
    CHECK(w.inventory.synset_count() == L * S);
    CHECK(w.inventory.sense_count() == L * S);
    CHECK(w.inventory.stats().examples == L * S * E);
    CHECK(w.wsd.size() == L * S * E);
    CHECK(w.tsv.size() == L * S * E * S);
    CHECK(w.wic.size() == L * per_lemma * (per_lemma - 1) / 2);
    CHECK(w.gold_sense_of_context.size() == L * S * E);  // texts unique
  }
}

TEST_CASE("same seed rebuilds the identical world") {
  SyntheticWorld a = generate_synthetic_world(42, 3, 2, 2);
  SyntheticWorld b = generate_synthetic_world(42, 3, 2, 2);
  CHECK(a.inventory == b.inventory);
  REQUIRE(a.wsd.size() == b.wsd.size());
  for (size_t i = 0; i < a.wsd.size(); ++i) {
    CHECK(a.wsd[i].id == b.wsd[i].id);
    CHECK(a.wsd[i].context.text == b.wsd[i].context.text);
    CHECK(a.wsd[i].gold == b.wsd[i].gold);
  }
  REQUIRE(a.wic.size() == b.wic.size());
  for (size_t i = 0; i < a.wic.size(); ++i) CHECK(a.wic[i].gold == b.wic[i].gold);
}

TEST_CASE("seed changes the context texts but not the frame") {
  SyntheticWorld a = generate_synthetic_world(1, 3, 2, 2);
  SyntheticWorld b = generate_synthetic_world(2, 3, 2, 2);
  REQUIRE(a.wsd.size() == b.wsd.size());
  bool any_text_differs = false;
  for (size_t i = 0; i < a.wsd.size(); ++i) {
    CHECK(a.wsd[i].id == b.wsd[i].id);
    CHECK(a.wsd[i].gold == b.wsd[i].gold);  // gold structure is shape-determined
    any_text_differs |= a.wsd[i].context.text != b.wsd[i].context.text;
  }
  CHECK(any_text_differs);
}

TEST_CASE("gold assignments are internally consistent") {
  SyntheticWorld w = generate_synthetic_world(7, 10, 4, 3);

  std::set<std::string> ids;
  for (const WsdInstance& inst : w.wsd) {
    CHECK(ids.insert(inst.id).second);
    REQUIRE(inst.gold.has_value());
    auto it = w.gold_sense_of_context.find(inst.context.text);
    REQUIRE(it != w.gold_sense_of_context.end());
    CHECK(it->second == *inst.gold);
    // the gold key is a sense of the target lemma
    bool among = false;
    for (const Sense* s : w.inventory.senses_of(inst.target.lemma, Pos::Noun))
      among |= s->sense_key == *inst.gold;
    CHECK(among);
    // the context doubles as a gloss example of its gold synset
    const Sense* s = w.inventory.find_sense(*inst.gold);
    REQUIRE(s);
    const auto& examples = w.inventory.examples_of(*s);
    CHECK(std::count(examples.begin(), examples.end(), inst.context.text) == 1);
    CHECK(inst.context.surface == inst.target.lemma);
  }

  size_t true_count = 0;
  for (const TsvInstance& inst : w.tsv) {
    CHECK(ids.insert(inst.id).second);
    REQUIRE(inst.gold.has_value());
    REQUIRE(inst.candidate.is_key());
    bool expect = w.gold_sense_of_context.at(inst.context.text) == *inst.candidate.sense_key;
    CHECK(*inst.gold == expect);
    true_count += *inst.gold;
  }
  CHECK(true_count == w.wsd.size());  // exactly one true candidate per context

  for (const WicInstance& inst : w.wic) {
    CHECK(ids.insert(inst.id).second);
    REQUIRE(inst.gold.has_value());
    bool expect = w.gold_sense_of_context.at(inst.context1.text) ==
                  w.gold_sense_of_context.at(inst.context2.text);
    CHECK(*inst.gold == expect);
    CHECK(inst.context1.text != inst.context2.text);
  }
}

TEST_CASE("smallest worlds carry the expected labels") {
  // one sense, two examples: the only pair is a same-sense pair
  SyntheticWorld same = generate_synthetic_world(1, 1, 1, 2);
  REQUIRE(same.wic.size() == 1);
  CHECK(same.wic[0].gold == std::optional<bool>(true));

  // two senses, one example each: the only pair crosses senses
  SyntheticWorld cross = generate_synthetic_world(1, 1, 2, 1);
  REQUIRE(cross.wic.size() == 1);
  CHECK(cross.wic[0].gold == std::optional<bool>(false));
  CHECK(cross.wsd[0].gold == SenseKey("word0%1:00:00::"));
  CHECK(cross.wsd[1].gold == SenseKey("word0%1:00:01::"));
}
