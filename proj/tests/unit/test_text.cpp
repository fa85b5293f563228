#include <catch2/catch_amalgamated.hpp>

#include <sense_reduce/text.hpp>

using namespace sense_reduce;

TEST_CASE("trim removes surrounding whitespace only") {
  CHECK(trim("  a b \t\n") == "a b");
  CHECK(trim("") == "");
  CHECK(trim(" \t ") == "");
  CHECK(trim("x") == "x");
}

TEST_CASE("collapse_ws folds runs and trims") {
  CHECK(collapse_ws("  a\t\tb  c \n") == "a b c");
  CHECK(collapse_ws("one two") == "one two");
  CHECK(collapse_ws("") == "");
}

TEST_CASE("split keeps empty fields") {
  auto f = split("a\t\tb\t", '\t');
  REQUIRE(f.size() == 4);
  CHECK(f[0] == "a");
  CHECK(f[1] == "");
  CHECK(f[2] == "b");
  CHECK(f[3] == "");
}

TEST_CASE("whitespace tokens carry exact byte spans") {
  const std::string s = "He nailed  boards .";
  auto toks = whitespace_tokens(s);
  REQUIRE(toks.size() == 4);
  for (const Token& t : toks) CHECK(s.substr(t.start, t.end - t.start) == t.text);
  CHECK(toks[2].text == "boards");
  CHECK(toks[2].start == 11);
  CHECK(toks[2].end == 17);
}

TEST_CASE("canonical lemma lowercases and joins with underscores") {
  CHECK(canonical_lemma("Ice Cream") == "ice_cream");
  CHECK(canonical_lemma("  Board ") == "board");
  CHECK(canonical_lemma("ice_cream") == "ice_cream");
}

TEST_CASE("find_word honors word boundaries") {
  CHECK(find_word("he nailed boards across", "boards") ==
        std::make_pair(size_t{10}, size_t{16}));
  // "board" occurs only inside "boards"
  CHECK(!find_word("he nailed boards across", "board").has_value());
  CHECK(find_word("Room and Board.", "board") == std::make_pair(size_t{9}, size_t{14}));
  CHECK(find_word("we had ice cream for dessert", "ice cream") ==
        std::make_pair(size_t{7}, size_t{16}));
  CHECK(!find_word("abc", "").has_value());
  CHECK(!find_word("", "x").has_value());
}

TEST_CASE("escape and unescape round-trip control characters") {
  const std::string nasty = "a\tb\\c\nd\re";
  CHECK(unescape_field(escape_field(nasty)) == nasty);
  CHECK(escape_field(nasty).find('\t') == std::string::npos);
  CHECK(escape_field(nasty).find('\n') == std::string::npos);
  CHECK(escape_field("plain") == "plain");
}
