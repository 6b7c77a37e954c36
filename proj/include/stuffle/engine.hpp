#pragma once

#include <map>

#include "stuffle/table.hpp"

namespace stuffle {

enum class Corner { NW, SW, NE, SE };

/// Evaluates products against one table, memoizing word-pair results for its
/// own lifetime. Results are identical with or without the memo (the product
/// is a pure function of the table and the words); keep one context per
/// logical task so memory stays bounded by that task's subproblem space.
class ProductContext {
public:
  explicit ProductContext(const StuffleTable& t) : table_(&t) {}

  const StuffleTable& table() const { return *table_; }

  /// The first-letter recursion:
  ///   au □ bv = f1(a⊗b) a(u□bv) + f2(a⊗b) b(au□v) + f3(a⊗b)(u□v),
  /// with the empty word as unit.
  Elem product(const Word& u, const Word& v);
  Elem product(const Elem& x, const Elem& y);

  /// Left-iterated power x□x□...□x (bracketing fixed left-to-right, which
  /// matters only for non-associative candidate tables).
  Elem power(const Elem& x, unsigned p);

  /// The last-letter recursion
  ///   ua □E vb = f1(a⊗b)(u□E vb)a + f2(a⊗b)(ua□E v)b.
  /// Requires an empty contracting map.
  Elem end_product(const Word& u, const Word& v);
  Elem end_product(const Elem& x, const Elem& y);

  /// Dendriform halves of the front recursion on non-empty words:
  ///   au ≺ bv = f1(a⊗b) a(u□bv),   au ≻ bv = f2(a⊗b) b(au□v).
  /// Require empty f3 and diagonal f1 values in {0,1}.
  Elem dendri_left(const Word& u, const Word& v);
  Elem dendri_right(const Word& u, const Word& v);
  Elem dendri_left(const Elem& x, const Elem& y);
  Elem dendri_right(const Elem& x, const Elem& y);

  /// Dendriform halves of the end recursion:
  ///   ua ∧ vb = f1(a⊗b)(u□E vb)a,   ua ∨ vb = f2(a⊗b)(ua□E v)b.
  Elem wedge(const Word& u, const Word& v);
  Elem vee(const Word& u, const Word& v);
  Elem wedge(const Elem& x, const Elem& y);
  Elem vee(const Elem& x, const Elem& y);

  /// Quadri corner products for words of length >= 2 (writing u = a u' c,
  /// v = b v' d):
  ///   NW = a(u'□bv'd)c, SW = a(u'c□bv')d, NE = b(au'□v'd)c, SE = b(au'c□v')d.
  /// The classical construction uses the all-ones table; other tables are
  /// accepted for diagnostics.
  Elem quadri(const Word& u, const Word& v, Corner corner);
  Elem quadri(const Elem& x, const Elem& y, Corner corner);

  /// Slotwise product on tensors: (u1⊗u2)·(v1⊗v2) = (u1□v1)⊗(u2□v2).
  TensorElem tensor_product(const TensorElem& s, const TensorElem& t);

private:
  const Elem& product_memo(const Word& u, const Word& v);
  const Elem& end_memo(const Word& u, const Word& v);
  void require_shuffle_type(const char* op) const;
  void require_dendriform(const char* op) const;

  const StuffleTable* table_;
  std::map<std::pair<Word, Word>, Elem> memo_, end_memo_;
};

/// Deconcatenation coproduct: all prefix⊗suffix splits, coefficient 1 each.
TensorElem deconcat(const Word& w);
TensorElem deconcat(const Elem& x);

/// One-shot conveniences (fresh context per call).
Elem stuffle_product(const StuffleTable& t, const Word& u, const Word& v);
Elem end_product(const StuffleTable& t, const Word& u, const Word& v);

}  // namespace stuffle
