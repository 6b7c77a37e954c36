#pragma once

#include "stuffle/classify.hpp"

namespace stuffle {

/// The two-letter product with tuple (1,0,1,1,1,1), the one whose leading
/// words drive the square-zero certificates.
StuffleTable c9_table();

/// The set of words appearing in u□v, computed by the support recursion
/// (follow a branch whenever its weight is nonzero), deduplicated, lex
/// ascending. Requires empty f3. On tables with nonnegative entries — every
/// table in the catalogue — this equals the support of the full product; on
/// sign-mixed tables it is the cancellation-free upper support.
std::vector<Word> spectrum(const StuffleTable& t, const Word& u, const Word& v);

/// max(u □9 v): the greatest word of the product support under the
/// lexicographic order, by the run-length recursion (no product expansion).
/// Alphabet {a,b}; empty inputs resolve via the unit.
Word max_word_greedy(const Word& u, const Word& v);

/// For words of length n ascending, verifies the strict leading-word
/// inequality max(w1□9 w2) < max(w□9 w) for all w1 <= w2 <= w with w1 < w,
/// by keeping a running maximum. A nonzero time budget (seconds) turns an
/// overrun into a failed report with a "time budget exceeded" note.
CheckReport leading_statement(unsigned n, double budget_seconds = 0.0);

/// Whether the degree-n square-zero space for the (1,0,1,1,1,1) product is
/// certified to be {0}: the leading-word statement holds and the coefficient
/// of max(w□w) in w□w is nonzero for every length-n word w.
struct Certificate {
  bool proven_zero = false;
  std::string reason;
};
Certificate square_zero_certificate(unsigned n, double budget_seconds = 0.0);

/// Verifies the closed forms for p-th powers of short words under the
/// (1,0,1,1,1,1) product:
///   (aa)^p = (2p)!/2^p a..a          (ab)^p = (p!)² a..ab..b
///   (ba)^p = p! ba..ba               (bb)^p = (2p)!/2^p b..b
/// and in degree 3
///   (aaa)^p = (3p)!/6^p a..a         (aab)^p = (2p)!p!/2^p a..ab..b
///   (aba)^p = (p!)² a..aba..ba       (abb)^p = (2p)!p!/2^p a..ab..b
///   (baa)^p = p! baa..baa            (bbb)^p = (3p)!/6^p b..b.
/// Runtime bound p <= 4.
CheckReport power_closed_form_check(unsigned p);

}  // namespace stuffle
