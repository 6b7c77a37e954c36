#pragma once

#include <map>
#include <string>
#include <vector>

#include "stuffle/word.hpp"

namespace stuffle {

/// Finite linear combination of words with exact rational coefficients.
/// Canonical form: zero coefficients are never stored; iteration runs in
/// lexicographic ascending word order.
class Elem {
public:
  using Terms = std::map<Word, Rational>;

  Elem() = default;
  static Elem of_word(const Word& w, const Rational& c = 1) {
    Elem e;
    e.add_term(w, c);
    return e;
  }

  void add_term(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
      terms_.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Elem& operator+=(const Elem& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  friend Elem operator+(Elem a, const Elem& b) { return a += b; }

  Elem scaled(const Rational& k) const {
    Elem r;
    if (k.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * k);
    return r;
  }

  /// Prepend one letter to every word; preserves term order.
  Elem prefixed(Letter a) const {
    Elem r;
    for (const auto& [w, c] : terms_)
      r.terms_.emplace_hint(r.terms_.end(), prepend(a, w), c);
    return r;
  }

  /// Append one letter to every word.
  Elem suffixed(Letter a) const {
    Elem r;
    for (const auto& [w, c] : terms_) {
      Word s = w;
      s.push_back(static_cast<unsigned char>(a));
      r.terms_.emplace(std::move(s), c);
    }
    return r;
  }

  Rational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  std::vector<Word> support() const {
    std::vector<Word> r;
    r.reserve(terms_.size());
    for (const auto& [w, c] : terms_) r.push_back(w);
    return r;
  }

  friend bool operator==(const Elem& a, const Elem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

  /// "+"-joined "coeff*word" terms in lex order; unit coefficients drop the
  /// "coeff*"; the zero element renders "0".
  std::string render(const Naming& naming = {}) const;

private:
  Terms terms_;
};

inline Elem elem_add(const Elem& a, const Elem& b) { return a + b; }
inline Elem elem_scale(const Rational& k, const Elem& x) { return x.scaled(k); }

/// Linear combination of word pairs (tensors u (x) v).
class TensorElem {
public:
  using Key = std::pair<Word, Word>;
  using Terms = std::map<Key, Rational>;

  TensorElem() = default;
  static TensorElem of_pair(const Word& u, const Word& v,
                            const Rational& c = 1) {
    TensorElem t;
    t.add_term(u, v, c);
    return t;
  }

  void add_term(const Word& u, const Word& v, const Rational& c) {
    if (c.is_zero()) return;
    Key k{u, v};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  TensorElem& operator+=(const TensorElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  friend TensorElem operator+(TensorElem a, const TensorElem& b) {
    return a += b;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }

  friend bool operator==(const TensorElem& a, const TensorElem& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TensorElem& a, const TensorElem& b) {
    return !(a == b);
  }

  std::string render(const Naming& naming = {}) const;

private:
  Terms terms_;
};

}  // namespace stuffle
