#include "stuffle/word.hpp"

#include <algorithm>
#include <cctype>

namespace stuffle {

std::strong_ordering lex_compare(const Word& u, const Word& v) {
  return u <=> v;
}

std::vector<Word> words_of_length(unsigned n, unsigned alphabet) {
  if (alphabet < 1) throw PreconditionError("alphabet size must be >= 1");
  if (alphabet > kMaxLetter) throw PreconditionError("alphabet too large");
  std::vector<Word> out;
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= alphabet;
  out.reserve(total);
  Word w(n, static_cast<unsigned char>(1));
  while (true) {
    out.push_back(w);
    // odometer with most-significant position first keeps lex order
    unsigned pos = n;
    while (pos > 0) {
      if (w[pos - 1] < alphabet) {
        ++w[pos - 1];
        std::fill(w.begin() + pos, w.end(), static_cast<unsigned char>(1));
        break;
      }
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

std::vector<std::pair<Word, Word>> deconcat_splits(const Word& w) {
  std::vector<std::pair<Word, Word>> out;
  out.reserve(w.size() + 1);
  for (std::size_t i = 0; i <= w.size(); ++i)
    out.emplace_back(w.substr(0, i), w.substr(i));
  return out;
}

namespace {

void push_letter(Word& w, unsigned long idx, const std::string& text) {
  if (idx < 1 || idx > kMaxLetter)
    throw ParseError("letter index out of range in \"" + text + "\"");
  w.push_back(static_cast<unsigned char>(idx));
}

Word parse_dotted(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i) throw ParseError("bad word: " + text);
    push_letter(w, std::stoul(text.substr(i, j - i)), text);
    i = j;
    if (i < text.size()) {
      if (text[i] != '.') throw ParseError("bad word: " + text);
      ++i;
      if (i == text.size()) throw ParseError("bad word: " + text);
    }
  }
  return w;
}

Word parse_x_indexed(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != 'x') throw ParseError("bad word: " + text);
    std::size_t j = ++i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    if (j == i) throw ParseError("bad word: " + text);
    push_letter(w, std::stoul(text.substr(i, j - i)), text);
    i = j;
  }
  return w;
}

bool try_parse_custom(const std::string& text, const Naming& naming, Word& w) {
  // greedy longest-match tokenization over the naming's spellings
  w.clear();
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t best = 0;
    Letter best_letter = 0;
    for (std::size_t l = 0; l < naming.names.size(); ++l) {
      const std::string& name = naming.names[l];
      if (name.empty() || name.size() < best) continue;
      if (text.compare(i, name.size(), name) == 0 && name.size() > best) {
        best = name.size();
        best_letter = static_cast<Letter>(l + 1);
      }
    }
    if (best == 0) return false;
    w.push_back(static_cast<unsigned char>(best_letter));
    i += best;
  }
  return true;
}

}  // namespace

Word parse_word(const std::string& text, const Naming& naming) {
  if (text.empty()) throw ParseError("empty word text (use \"_\")");
  if (text == "_") return {};
  if (naming.kind == Naming::Kind::Custom) {
    Word w;
    if (try_parse_custom(text, naming, w)) return w;
  }
  if (text.size() >= 2 && text[0] == 'x' &&
      std::isdigit(static_cast<unsigned char>(text[1])))
    return parse_x_indexed(text);
  if (std::isdigit(static_cast<unsigned char>(text[0])))
    return parse_dotted(text);
  Word w;
  for (char ch : text) {
    if (ch < 'a' || ch > 'z') throw ParseError("bad word: " + text);
    w.push_back(static_cast<unsigned char>(ch - 'a' + 1));
  }
  return w;
}

std::string render_word(const Word& w, const Naming& naming) {
  if (w.empty()) return "_";
  std::string out;
  switch (naming.kind) {
    case Naming::Kind::Custom: {
      bool ok = true;
      for (unsigned char l : w)
        if (l < 1 || l > naming.names.size()) ok = false;
      if (ok) {
        for (unsigned char l : w) out += naming.names[l - 1];
        return out;
      }
      break;  // fall through to the generic spellings
    }
    case Naming::Kind::XIndexed: {
      for (unsigned char l : w) out += "x" + std::to_string(unsigned{l});
      return out;
    }
    case Naming::Kind::Letters:
      break;
  }
  bool small = std::all_of(w.begin(), w.end(),
                           [](unsigned char l) { return l <= 26; });
  if (small) {
    for (unsigned char l : w) out += static_cast<char>('a' + l - 1);
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(unsigned{w[i]});
  }
  return out;
}

}  // namespace stuffle
