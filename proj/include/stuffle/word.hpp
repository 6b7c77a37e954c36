#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "stuffle/errors.hpp"
#include "stuffle/rational.hpp"

namespace stuffle {

/// Alphabet letters are 1-based positive indices.
using Letter = unsigned;

/// Words store one byte per letter, which bounds usable indices to 255.
/// Every alphabet in this toolkit (finite tables, truncated countable
/// alphabets) stays far below that; parsing rejects larger indices.
inline constexpr Letter kMaxLetter = 255;

/// A word over the alphabet; the empty word is the algebra unit.
/// basic_string gives small-buffer storage and the lexicographic order
/// (proper prefixes are smaller) via its comparison operators.
using Word = std::basic_string<unsigned char>;

inline Word word_from(std::initializer_list<Letter> letters) {
  Word w;
  w.reserve(letters.size());
  for (Letter l : letters) w.push_back(static_cast<unsigned char>(l));
  return w;
}

inline Word prepend(Letter a, const Word& w) {
  Word r;
  r.reserve(w.size() + 1);
  r.push_back(static_cast<unsigned char>(a));
  r.append(w);
  return r;
}

inline Word run(Letter a, std::size_t n) {
  return Word(n, static_cast<unsigned char>(a));
}

/// Total lexicographic order with letters compared by index.
std::strong_ordering lex_compare(const Word& u, const Word& v);

/// All alphabet^n words of length n, lexicographically ascending.
std::vector<Word> words_of_length(unsigned n, unsigned alphabet);

/// The length(w)+1 ordered splittings w = uv, from (empty, w) to (w, empty).
std::vector<std::pair<Word, Word>> deconcat_splits(const Word& w);

/// How words are spelled in text, per alphabet.
struct Naming {
  enum class Kind { Letters, XIndexed, Custom };
  Kind kind = Kind::Letters;
  std::vector<std::string> names;  // Custom: names[i-1] spells letter i

  static Naming letters() { return {}; }
  static Naming x_indexed() { return {Kind::XIndexed, {}}; }
  static Naming custom(std::vector<std::string> n) {
    return {Kind::Custom, std::move(n)};
  }
};

/// Accepted syntaxes: "_" for the empty word; lowercase letter strings
/// ("abba", letters a..z = 1..26); dotted numerals ("1.2.2.1"); x-indexed
/// ("x1x2"); or the naming's custom tokens, longest match first ("ppb").
Word parse_word(const std::string& text, const Naming& naming = {});

/// Inverse of parse_word under the same naming; empty word renders "_".
/// Letter naming falls back to dotted numerals when any index exceeds 26.
std::string render_word(const Word& w, const Naming& naming = {});

}  // namespace stuffle
