#pragma once

#include <optional>

#include "stuffle/engine.hpp"
#include "stuffle/report.hpp"

namespace stuffle {

/// u□v = v□u for every word pair with total length <= bound, scanned by
/// ascending total length then lexicographically (minimal witness first).
CheckReport check_commutative(const StuffleTable& t, int bound);

/// (w1□w2)□w3 = w1□(w2□w3) for every word triple with total length <= bound.
CheckReport check_associative(const StuffleTable& t, int bound);

/// The finite polynomial relations on f1/f2 entries that characterize
/// commutative-and-associative shuffle-type products (empty f3 required):
///  1. f2(x⊗y) = f1(y⊗x) for x != y;
///  2. per letter a, either f1(a⊗a)=f2(a⊗a) ∈ {0,1} with
///       (i)  f1(a⊗b) f1(b⊗a) [f1(a⊗a)-1] = 0
///       (ii) f1(a⊗a) f1(a⊗b) [f1(a⊗b)-1] = 0
///       (iii)f1(a⊗a) f1(b⊗a) [f1(b⊗a)-1] = 0          (all b != a),
///     or f1(a⊗a)+f2(a⊗a)=1 with f1(a⊗b)=1, f1(b⊗a)=0   (all b != a);
///  3. f1(a⊗b) f1(b⊗c) [f1(a⊗c)-1] = 0 for distinct a, b, c.
CheckReport check_characterization(const StuffleTable& t);

/// The three dendriform axioms on non-empty word triples up to the total
/// length bound, using the front splitting. Requires the characterization
/// to hold and diagonal f1 values in {0,1}.
CheckReport check_dendriform(const StuffleTable& t, int bound);

/// The nine quadri axioms on word triples (each word length in
/// [2, max_word_len], total length <= bound) over the given alphabet size;
/// max_word_len 0 means bound-4. By default the corners are built on the
/// classical shuffle; `diagnostic` wires the same axiom evaluation to
/// another table instead.
CheckReport check_quadri(int bound, unsigned alphabet = 2,
                         const StuffleTable* diagnostic = nullptr,
                         int max_word_len = 0);

/// Searches every mirror-constrained end table with entries in `grid` for one
/// whose end product equals t's front product on all pairs with total length
/// <= bound; returns the first match in tuple order, or nothing.
std::optional<StuffleTable> check_end_equality(const StuffleTable& t,
                                               const std::vector<Rational>& grid,
                                               int bound);

/// Desk-scale Hopf compatibility with the deconcatenation coproduct:
/// commutativity and associativity of the product at the bound, plus
/// Δ(u□v) = Δ(u)□Δ(v) for all pairs with total length <= bound. The product
/// laws are part of the check because a bialgebra needs an associative
/// product, and Δ-compatibility alone is insensitive to the contracting map.
CheckReport check_hopf_compat(const StuffleTable& t, int bound);

/// Table-entry relations every commutative-and-associative contracting
/// product must satisfy: the induced f1/f2 pass the characterization; f3 is
/// commutative and associative on the letter span; and the conditional
/// constraint groups tying f3 support to f1/f2 values. One of them reads
/// f1²(x⊗a) = f1(x⊗b), which looks like a typo for the unsquared form but is
/// not: brute force over tables with f3(a⊗a) = λb and f1(x⊗a) = k outside
/// {0,1} accepts exactly f1(x⊗b) = k². The checker follows the squared form
/// and notes any table where the two forms disagree.
CheckReport check_stuffle_relations(const StuffleTable& t);

}  // namespace stuffle
