#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>
#include <string>

#include <sense_reduce/wordnet.hpp>

using namespace sense_reduce;

namespace {

const std::string kFix = SR_FIXTURES_DIR;

// Independent oracle: count records straight off the fixture text,
// without going through the parser.
size_t count_data_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  size_t n = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty() && !(line.size() >= 2 && line[0] == ' ' && line[1] == ' ')) ++n;
  return n;
}

SenseInventory load_mini() { return load_inventory(kFix + "/mini_wordnet"); }

}  // namespace

TEST_CASE("tiny inventory parses") {
  SenseInventory inv = load_inventory(kFix + "/tiny_wordnet");
  CHECK(inv.synset_count() == 1);
  CHECK(inv.sense_count() == 1);
  const Synset* syn = inv.find_synset({Pos::Noun, 1740});
  REQUIRE(syn);
  CHECK(syn->gloss == "a domestic animal");
  REQUIRE(syn->examples.size() == 1);
  CHECK(syn->examples[0] == "the dog barked");
  REQUIRE(inv.senses_of("dog", Pos::Noun).size() == 1);
  CHECK(inv.senses_of("dog", Pos::Noun)[0]->sense_key == "dog%1:03:00::");
}

TEST_CASE("missing files are reported up front") {
  CHECK_THROWS_AS(load_inventory(kFix + "/no_such_dir"), MissingFile);
  // a directory that exists but holds no WordNet files
  CHECK_THROWS_AS(load_inventory(kFix + "/wic"), MissingFile);
}

TEST_CASE("mini inventory counts match a raw line scan") {
  SenseInventory inv = load_mini();
  size_t expected_synsets = 0;
  for (const char* f : {"data.noun", "data.verb", "data.adj", "data.adv"})
    expected_synsets += count_data_lines(kFix + "/mini_wordnet/" + f);
  size_t expected_senses = count_data_lines(kFix + "/mini_wordnet/index.sense");
  CHECK(inv.synset_count() == expected_synsets);
  CHECK(inv.sense_count() == expected_senses);
  // hand-tallied fixture shape
  CHECK(inv.synset_count() == 18);
  CHECK(inv.sense_count() == 26);
}

TEST_CASE("mini inventory per-pos stats") {
  SenseInventory inv = load_mini();
  InventoryStats st = inv.stats();
  CHECK(st.synsets_by_pos[Pos::Noun] == 11);
  CHECK(st.synsets_by_pos[Pos::Verb] == 3);
  CHECK(st.synsets_by_pos[Pos::Adjective] == 2);
  CHECK(st.synsets_by_pos[Pos::AdjectiveSatellite] == 1);
  CHECK(st.synsets_by_pos[Pos::Adverb] == 1);
  CHECK(st.examples == 17);
  CHECK(inv.diagnostics().duplicate_lemma_synset == 0);
  CHECK(inv.diagnostics().sense_lemma_not_in_synset == 0);
}

TEST_CASE("gloss splits into definition and quoted examples") {
  GlossParts p = split_gloss("a domestic animal; \"the dog barked\"");
  CHECK(p.definition == "a domestic animal");
  REQUIRE(p.examples.size() == 1);
  CHECK(p.examples[0] == "the dog barked");

  p = split_gloss("move while supporting; \"You must carry it\"; \"carry the bags\"");
  CHECK(p.definition == "move while supporting");
  REQUIRE(p.examples.size() == 2);
  CHECK(p.examples[1] == "carry the bags");

  p = split_gloss("a long depression in the ocean floor");
  CHECK(p.examples.empty());
  CHECK(p.definition == "a long depression in the ocean floor");

  // unquoted segments after the first re-join into the definition
  p = split_gloss("first part; second part; \"quoted usage\"");
  CHECK(p.definition == "first part; second part");
  REQUIRE(p.examples.size() == 1);
}

TEST_CASE("adjective markers are stripped from lemmas") {
  SenseInventory inv = load_mini();
  REQUIRE(inv.senses_of("galore", Pos::Adjective).size() == 1);
  const Synset* syn = inv.find_synset({Pos::Adjective, 203000});
  REQUIRE(syn);
  CHECK(syn->lemmas == std::vector<std::string>{"galore"});
}

TEST_CASE("satellite adjectives fold into the adjective class") {
  SenseInventory inv = load_mini();
  auto via_a = inv.senses_of("fast", Pos::Adjective);
  auto via_s = inv.senses_of("fast", Pos::AdjectiveSatellite);
  REQUIRE(via_a.size() == 1);
  CHECK(via_a == via_s);
  CHECK(via_a[0]->sense_key == "fast%5:00:00:quick:00");
  CHECK(via_a[0]->synset.pos == Pos::AdjectiveSatellite);
}

TEST_CASE("adjective sense keys resolve to satellite synsets when needed") {
  // brisk is keyed %3 (adjective) but its synset is stored as 's'
  SenseInventory inv = load_mini();
  const Sense* s = inv.find_sense("brisk%3:00:00::");
  REQUIRE(s);
  CHECK(s->synset.pos == Pos::AdjectiveSatellite);
  CHECK(s->synset.offset == 202000);
}

TEST_CASE("multiword lemmas are addressable") {
  SenseInventory inv = load_mini();
  REQUIRE(inv.senses_of("ice_cream", Pos::Noun).size() == 1);
  // spaces canonicalize to underscores on lookup
  CHECK(inv.senses_of("ice cream", Pos::Noun).size() == 1);
}

TEST_CASE("senses come back in sense-number order") {
  SenseInventory inv = load_mini();
  auto senses = inv.senses_of("board", Pos::Noun);
  REQUIRE(senses.size() == 3);
  CHECK(senses[0]->sense_number == 1);
  CHECK(senses[0]->sense_key == "board%1:14:00::");
  CHECK(senses[1]->sense_key == "board%1:06:00::");
  CHECK(senses[2]->sense_key == "board%1:13:00::");
}

TEST_CASE("examples_of reaches the synset examples") {
  SenseInventory inv = load_mini();
  const auto& ex = inv.examples_of(std::string("carry%2:35:00::"));
  REQUIRE(ex.size() == 2);
  CHECK(ex[0] == "You must carry your camping gear");
  CHECK_THROWS_AS(inv.examples_of(std::string("ghost%1:03:00::")), UnknownSense);
}

TEST_CASE("unknown lookups return empty or null") {
  SenseInventory inv = load_mini();
  CHECK(inv.senses_of("zebra", Pos::Noun).empty());
  CHECK(inv.senses_of("board", Pos::Verb).empty());
  CHECK(inv.find_synset({Pos::Noun, 99999999}) == nullptr);
  CHECK(inv.find_sense("none%1:00:00::") == nullptr);
}

TEST_CASE("builder rejects duplicates and dangling senses") {
  InventoryBuilder b;
  Synset syn;
  syn.id = {Pos::Noun, 42};
  syn.lemmas = {"thing"};
  syn.gloss = "a thing";
  b.add_synset(syn);
  CHECK_THROWS_AS(b.add_synset(syn), InvalidParameter);

  Sense s;
  s.sense_key = "thing%1:03:00::";
  s.lemma = "thing";
  s.synset = {Pos::Noun, 42};
  s.sense_number = 1;
  b.add_sense(s);
  CHECK_THROWS_AS(b.add_sense(s), InvalidParameter);

  Sense dangling;
  dangling.sense_key = "ghost%1:03:00::";
  dangling.lemma = "ghost";
  dangling.synset = {Pos::Noun, 777};
  dangling.sense_number = 1;
  b.add_sense(dangling);
  CHECK_THROWS_AS(b.finish(), DanglingSense);
}

TEST_CASE("builder flags duplicate lemma-synset pairs as a diagnostic") {
  InventoryBuilder b;
  Synset syn;
  syn.id = {Pos::Noun, 1};
  syn.lemmas = {"w"};
  syn.gloss = "g";
  b.add_synset(std::move(syn));
  for (int i = 0; i < 2; ++i) {
    Sense s;
    s.sense_key = "w%1:0" + std::to_string(i) + ":00::";
    s.lemma = "w";
    s.synset = {Pos::Noun, 1};
    s.sense_number = i + 1;
    b.add_sense(std::move(s));
  }
  SenseInventory inv = b.finish();
  CHECK(inv.diagnostics().duplicate_lemma_synset == 1);
  CHECK(inv.sense_count() == 2);
}

TEST_CASE("malformed data lines raise ParseError with location") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sr_badwn";
  fs::create_directories(dir);
  for (const char* f : {"data.verb", "data.adj", "data.adv"})
    std::ofstream(dir / f) << "  1 header\n";
  std::ofstream(dir / "index.sense") << "";
  std::ofstream(dir / "data.noun") << "00001000 03 n 01 dog 0 000 no gloss separator\n";
  try {
    load_inventory(dir);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("data.noun") != std::string::npos);
    CHECK(std::string(e.what()).find(":1") != std::string::npos);
  }
  fs::remove_all(dir);
}

TEST_CASE("dump round-trips and is deterministic") {
  SenseInventory a = load_mini();
  SenseInventory b = load_mini();
  std::ostringstream da, db;
  save_dump(a, da);
  save_dump(b, db);
  CHECK(da.str() == db.str());  // double load, identical bytes

  std::istringstream in(da.str());
  SenseInventory c = parse_dump(in);
  CHECK(a == c);
  std::ostringstream dc;
  save_dump(c, dc);
  CHECK(dc.str() == da.str());
}
