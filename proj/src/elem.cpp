#include "stuffle/elem.hpp"

namespace stuffle {

namespace {

void append_term(std::string& out, const Rational& c, const std::string& word,
                 bool first) {
  if (!first) out += " + ";
  if (c == Rational(1)) {
    out += word;
  } else if (c == Rational(-1)) {
    out += "-" + word;
  } else {
    out += c.str() + "*" + word;
  }
}

}  // namespace

std::string Elem::render(const Naming& naming) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    append_term(out, c, render_word(w, naming), first);
    first = false;
  }
  return out;
}

std::string TensorElem::render(const Naming& naming) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    append_term(out, c,
                render_word(k.first, naming) + "⊗" +
                    render_word(k.second, naming),
                first);
    first = false;
  }
  return out;
}

}  // namespace stuffle
