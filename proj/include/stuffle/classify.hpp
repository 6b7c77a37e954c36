#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stuffle/checks.hpp"

namespace stuffle {

/// A matched family pattern: alphabet size, printed index, and the values
/// bound to the pattern's parameters (k, m, alpha).
struct FamilyId {
  unsigned alphabet = 0;
  unsigned index = 0;
  std::map<std::string, Rational> params;

  std::string str() const;
};

/// Number of families in the catalogue for alphabet size c (2 -> 10, 3 -> 47).
unsigned family_count(unsigned c);

/// Instantiates catalogue family `index` with the given parameter values
/// (k, m must be nonzero where the pattern uses them).
StuffleTable family_table(unsigned c, unsigned index, const Rational& k = 1,
                          const Rational& m = 1, const Rational& alpha = 0);

/// Matches a shuffle-type table (empty f3, mirror-consistent f2) against the
/// family catalogue in printed order; the first matching pattern wins.
std::optional<FamilyId> match_family(const StuffleTable& t);

/// All tables with f1/f2 tuple entries drawn from `grid` and empty f3 that
/// pass the characterization; each is cross-validated by brute-force
/// commutativity and associativity at total length cross_check_bound
/// (0 disables). Sorted by tuple.
std::vector<StuffleTable> enumerate_weak_shuffles(
    unsigned c, const std::vector<Rational>& grid, int cross_check_bound = 6);

/// All symmetric contracting maps with coefficients in grid\{0} and letters
/// in the alphabet that are commutative and associative as bilinear products
/// on the letter span. Sorted canonically.
std::vector<F3Map> enumerate_f3_tables(unsigned c,
                                       const std::vector<Rational>& grid);

/// Whether an f3 map is commutative/associative on the letter span.
bool f3_commutative(const F3Map& f3, unsigned c);
bool f3_associative(const F3Map& f3, unsigned c);

/// A diagonal word-indexed rescaling w -> scalar(w)·w with nonzero scalars
/// (hence invertible). The three shapes used by the normalization maps:
///  - PsiLeadingRun: 1/n! on a leading run of `a` of length n;
///  - Phi1: 1/k^n when w = a^n w' with w' starting with b;
///  - Phi2: 1/k^(number of a's before the first b) when only a's and other
///    non-b letters precede that b.
struct DiagonalMap {
  enum class Kind { Identity, PsiLeadingRun, Phi1, Phi2 };
  Kind kind = Kind::Identity;
  Letter a = 0, b = 0;
  Rational k = 1;

  Rational scalar(const Word& w) const;
  Elem apply(const Elem& x) const;
  std::string str() const;
};

/// The diagonal normalization for the unique letter a with f1(a⊗a) outside
/// {0,1}: returns (psi, target table with f1(a⊗a)=f2(a⊗a)=1).
std::pair<DiagonalMap, StuffleTable> iso_psi(const StuffleTable& t, Letter a);

/// The diagonal normalization for an off-diagonal slot f1(a⊗b) = k outside
/// {0,1}: returns (phi1 or phi2, target table with that slot set to 1).
std::pair<DiagonalMap, StuffleTable> iso_phi(const StuffleTable& t, Letter a,
                                             Letter b, int variant);

/// Checks map(u □src v) = map(u) □tgt map(v) on all word pairs with total
/// length <= bound.
CheckReport verify_morphism(const DiagonalMap& map, const StuffleTable& source,
                            const StuffleTable& target, int bound);

/// Result of the square-zero kernel computation in one degree.
struct SquareZeroResult {
  bool resolved = false;
  unsigned dim = 0;
  std::vector<Word> basis;             // spanning words when resolved
  std::vector<std::string> residual;   // unresolved constraints otherwise

  std::string str(const Naming& naming = {}) const;
};

/// Expands (Σ λ_w w)² over indeterminate coefficients into quadratic
/// constraints and eliminates by the single-square rule: any constraint
/// c·λ_w² = 0 with c != 0 forces λ_w = 0; substitute and repeat. Returns the
/// solution space dimension when every constraint resolves, otherwise the
/// remaining constraints.
SquareZeroResult square_zero_dim(const StuffleTable& t, unsigned degree);

}  // namespace stuffle
