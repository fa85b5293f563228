#pragma once
// Part-of-speech tags as used by WordNet database files and the
// WiC-family datasets. AdjectiveSatellite folds into Adjective for
// lemma lookup and compatibility checks; it stays distinct for
// synset identity (data.adj holds both 'a' and 's' synsets).

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sense_reduce {

enum class Pos : unsigned char {
  Noun,
  Verb,
  Adjective,
  AdjectiveSatellite,
  Adverb,
};

// WordNet ss_type letter: n v a s r.
inline char pos_letter(Pos p) {
  switch (p) {
    case Pos::Noun: return 'n';
    case Pos::Verb: return 'v';
    case Pos::Adjective: return 'a';
    case Pos::AdjectiveSatellite: return 's';
    case Pos::Adverb: return 'r';
  }
  return '?';
}

inline std::optional<Pos> pos_from_letter(char c) {
  switch (c) {
    case 'n': return Pos::Noun;
    case 'v': return Pos::Verb;
    case 'a': return Pos::Adjective;
    case 's': return Pos::AdjectiveSatellite;
    case 'r': return Pos::Adverb;
    default: return std::nullopt;
  }
}

// Sense-key ss_type digit: 1=n 2=v 3=a 4=r 5=s.
inline std::optional<Pos> pos_from_ss_digit(int d) {
  switch (d) {
    case 1: return Pos::Noun;
    case 2: return Pos::Verb;
    case 3: return Pos::Adjective;
    case 4: return Pos::Adverb;
    case 5: return Pos::AdjectiveSatellite;
    default: return std::nullopt;
  }
}

inline Pos fold_satellite(Pos p) {
  return p == Pos::AdjectiveSatellite ? Pos::Adjective : p;
}

// Two tags are lookup-compatible when they fold to the same class.
inline bool pos_compatible(Pos a, Pos b) {
  return fold_satellite(a) == fold_satellite(b);
}

// Dataset tag -> Pos. Accepts the short tags N/V/ADJ/ADV and the long
// forms the MCL-WiC release uses, case-insensitively.
inline std::optional<Pos> pos_from_tag(std::string_view tag) {
  std::string up;
  up.reserve(tag.size());
  for (char c : tag) up.push_back(static_cast<char>(c >= 'a' && c <= 'z' ? c - 32 : c));
  if (up == "N" || up == "NOUN") return Pos::Noun;
  if (up == "V" || up == "VERB") return Pos::Verb;
  if (up == "ADJ" || up == "ADJECTIVE") return Pos::Adjective;
  if (up == "ADV" || up == "ADVERB") return Pos::Adverb;
  return std::nullopt;
}

inline std::string pos_name(Pos p) {
  switch (p) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adjective: return "adjective";
    case Pos::AdjectiveSatellite: return "adjective_satellite";
    case Pos::Adverb: return "adverb";
  }
  return "?";
}

}  // namespace sense_reduce
