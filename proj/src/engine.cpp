#include "stuffle/engine.hpp"

namespace stuffle {

namespace {

/// acc += k * (a prefixed to every word of e)
void add_prefixed(Elem& acc, const Elem& e, Letter a, const Rational& k) {
  for (const auto& [w, c] : e.terms()) acc.add_term(prepend(a, w), c * k);
}

void add_suffixed(Elem& acc, const Elem& e, Letter a, const Rational& k) {
  for (const auto& [w, c] : e.terms()) {
    Word s = w;
    s.push_back(static_cast<unsigned char>(a));
    acc.add_term(s, c * k);
  }
}

void add_scaled(Elem& acc, const Elem& e, const Rational& k) {
  for (const auto& [w, c] : e.terms()) acc.add_term(w, c * k);
}

}  // namespace

const Elem& ProductContext::product_memo(const Word& u, const Word& v) {
  auto key = std::make_pair(u, v);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  Elem result;
  if (u.empty()) {
    result = Elem::of_word(v);
  } else if (v.empty()) {
    result = Elem::of_word(u);
  } else {
    const Letter a = u[0], b = v[0];
    const Word ut = u.substr(1);
    const Word vt = v.substr(1);
    const Rational c1 = table_->f1(a, b);
    const Rational c2 = table_->f2(a, b);
    if (!c1.is_zero()) add_prefixed(result, product_memo(ut, v), a, c1);
    if (!c2.is_zero()) add_prefixed(result, product_memo(u, vt), b, c2);
    if (const F3Term* t3 = table_->f3(a, b)) {
      if (t3->overflow)
        throw OverflowError("f3(" + std::to_string(a) + "," +
                            std::to_string(b) +
                            ") exceeds the truncation bound");
      if (!t3->coeff.is_zero()) {
        if (t3->letter < 1 || t3->letter > table_->alphabet_size())
          throw PreconditionError("f3 letter outside the alphabet");
        add_prefixed(result, product_memo(ut, vt), t3->letter, t3->coeff);
      }
    }
  }
  return memo_.emplace(std::move(key), std::move(result)).first->second;
}

const Elem& ProductContext::end_memo(const Word& u, const Word& v) {
  auto key = std::make_pair(u, v);
  if (auto it = end_memo_.find(key); it != end_memo_.end()) return it->second;

  Elem result;
  if (u.empty()) {
    result = Elem::of_word(v);
  } else if (v.empty()) {
    result = Elem::of_word(u);
  } else {
    const Letter a = u.back(), b = v.back();
    const Word uh = u.substr(0, u.size() - 1);
    const Word vh = v.substr(0, v.size() - 1);
    const Rational c1 = table_->f1(a, b);
    const Rational c2 = table_->f2(a, b);
    if (!c1.is_zero()) add_suffixed(result, end_memo(uh, v), a, c1);
    if (!c2.is_zero()) add_suffixed(result, end_memo(u, vh), b, c2);
  }
  return end_memo_.emplace(std::move(key), std::move(result)).first->second;
}

void ProductContext::require_shuffle_type(const char* op) const {
  if (!table_->f3_empty())
    throw PreconditionError(std::string(op) +
                            " requires an empty contracting map");
}

void ProductContext::require_dendriform(const char* op) const {
  require_shuffle_type(op);
  for (Letter a = 1; a <= table_->alphabet_size(); ++a) {
    const Rational& d = table_->f1(a, a);
    if (d != Rational(0) && d != Rational(1))
      throw PreconditionError(std::string(op) +
                              " requires f1(a⊗a) in {0,1} for every letter");
  }
}

Elem ProductContext::product(const Word& u, const Word& v) {
  return product_memo(u, v);
}

Elem ProductContext::product(const Elem& x, const Elem& y) {
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, product_memo(u, v), cu * cv);
  return result;
}

Elem ProductContext::power(const Elem& x, unsigned p) {
  if (p < 1) throw PreconditionError("power wants a positive exponent");
  Elem r = x;
  for (unsigned i = 1; i < p; ++i) r = product(r, x);
  return r;
}

Elem ProductContext::end_product(const Word& u, const Word& v) {
  require_shuffle_type("end product");
  return end_memo(u, v);
}

Elem ProductContext::end_product(const Elem& x, const Elem& y) {
  require_shuffle_type("end product");
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, end_memo(u, v), cu * cv);
  return result;
}

Elem ProductContext::dendri_left(const Word& u, const Word& v) {
  require_dendriform("dendriform splitting");
  if (u.empty() || v.empty())
    throw PreconditionError("dendriform products want non-empty words");
  Elem result;
  const Rational c1 = table_->f1(u[0], v[0]);
  if (!c1.is_zero()) add_prefixed(result, product_memo(u.substr(1), v), u[0], c1);
  return result;
}

Elem ProductContext::dendri_right(const Word& u, const Word& v) {
  require_dendriform("dendriform splitting");
  if (u.empty() || v.empty())
    throw PreconditionError("dendriform products want non-empty words");
  Elem result;
  const Rational c2 = table_->f2(u[0], v[0]);
  if (!c2.is_zero()) add_prefixed(result, product_memo(u, v.substr(1)), v[0], c2);
  return result;
}

Elem ProductContext::dendri_left(const Elem& x, const Elem& y) {
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, dendri_left(u, v), cu * cv);
  return result;
}

Elem ProductContext::dendri_right(const Elem& x, const Elem& y) {
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, dendri_right(u, v), cu * cv);
  return result;
}

Elem ProductContext::wedge(const Word& u, const Word& v) {
  require_dendriform("end dendriform splitting");
  if (u.empty() || v.empty())
    throw PreconditionError("dendriform products want non-empty words");
  Elem result;
  const Rational c1 = table_->f1(u.back(), v.back());
  if (!c1.is_zero())
    add_suffixed(result, end_memo(u.substr(0, u.size() - 1), v), u.back(), c1);
  return result;
}

Elem ProductContext::vee(const Word& u, const Word& v) {
  require_dendriform("end dendriform splitting");
  if (u.empty() || v.empty())
    throw PreconditionError("dendriform products want non-empty words");
  Elem result;
  const Rational c2 = table_->f2(u.back(), v.back());
  if (!c2.is_zero())
    add_suffixed(result, end_memo(u, v.substr(0, v.size() - 1)), v.back(), c2);
  return result;
}

Elem ProductContext::wedge(const Elem& x, const Elem& y) {
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, wedge(u, v), cu * cv);
  return result;
}

Elem ProductContext::vee(const Elem& x, const Elem& y) {
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, vee(u, v), cu * cv);
  return result;
}

Elem ProductContext::quadri(const Word& u, const Word& v, Corner corner) {
  require_shuffle_type("quadri corner");
  if (u.size() < 2 || v.size() < 2)
    throw PreconditionError("quadri corners want words of length >= 2");
  const Letter a = u[0], c = u.back();
  const Letter b = v[0], d = v.back();
  const Word u_mid = u.substr(1, u.size() - 2);
  const Word u_tail = u.substr(1);                  // u'c
  const Word u_head = u.substr(0, u.size() - 1);    // au'
  const Word v_mid = v.substr(1, v.size() - 2);
  const Word v_tail = v.substr(1);
  const Word v_head = v.substr(0, v.size() - 1);

  Elem inner;
  Letter front = 0, back = 0;
  switch (corner) {
    case Corner::NW:  // a(u' □ bv'd)c
      inner = product_memo(u_mid, v);
      front = a;
      back = c;
      break;
    case Corner::SW:  // a(u'c □ bv')d
      inner = product_memo(u_tail, v_head);
      front = a;
      back = d;
      break;
    case Corner::NE:  // b(au' □ v'd)c
      inner = product_memo(u_head, v_tail);
      front = b;
      back = c;
      break;
    case Corner::SE:  // b(au'c □ v')d
      inner = product_memo(u, v_mid);
      front = b;
      back = d;
      break;
  }
  return inner.prefixed(front).suffixed(back);
}

Elem ProductContext::quadri(const Elem& x, const Elem& y, Corner corner) {
  Elem result;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms())
      add_scaled(result, quadri(u, v, corner), cu * cv);
  return result;
}

TensorElem ProductContext::tensor_product(const TensorElem& s,
                                          const TensorElem& t) {
  TensorElem result;
  for (const auto& [ks, cs] : s.terms())
    for (const auto& [kt, ct] : t.terms()) {
      const Elem& left = product_memo(ks.first, kt.first);
      const Elem& right = product_memo(ks.second, kt.second);
      const Rational c = cs * ct;
      for (const auto& [w1, c1] : left.terms())
        for (const auto& [w2, c2] : right.terms())
          result.add_term(w1, w2, c * c1 * c2);
    }
  return result;
}

TensorElem deconcat(const Word& w) {
  TensorElem t;
  for (auto& [u, v] : deconcat_splits(w)) t.add_term(u, v, 1);
  return t;
}

TensorElem deconcat(const Elem& x) {
  TensorElem t;
  for (const auto& [w, c] : x.terms())
    for (auto& [u, v] : deconcat_splits(w)) t.add_term(u, v, c);
  return t;
}

Elem stuffle_product(const StuffleTable& t, const Word& u, const Word& v) {
  ProductContext ctx(t);
  return ctx.product(u, v);
}

Elem end_product(const StuffleTable& t, const Word& u, const Word& v) {
  ProductContext ctx(t);
  return ctx.end_product(u, v);
}

}  // namespace stuffle
