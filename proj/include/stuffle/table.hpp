#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stuffle/elem.hpp"
#include "stuffle/report.hpp"

namespace stuffle {

/// One contracting-map entry: f3(i⊗j) = coeff · letter.  `overflow` marks a
/// rule-generated letter that fell outside a truncated alphabet; consuming
/// such an entry in a computation raises OverflowError instead of silently
/// truncating.
struct F3Term {
  Rational coeff;
  Letter letter = 0;
  bool overflow = false;

  friend bool operator==(const F3Term& a, const F3Term& b) {
    return a.coeff == b.coeff && a.letter == b.letter &&
           a.overflow == b.overflow;
  }
};

using F3Map = std::map<std::pair<Letter, Letter>, F3Term>;

/// Finite specification of a candidate product: scalar weight tables f1, f2
/// and the sparse letter-valued contracting map f3 over alphabet {1..size}.
/// Plain data; nothing here assumes the candidate is commutative or
/// associative — the checkers decide that.
class StuffleTable {
public:
  explicit StuffleTable(unsigned alphabet_size,
                        Naming naming = Naming::letters());

  unsigned alphabet_size() const { return size_; }

  const Rational& f1(Letter i, Letter j) const { return f1_[idx(i, j)]; }
  const Rational& f2(Letter i, Letter j) const { return f2_[idx(i, j)]; }
  void set_f1(Letter i, Letter j, const Rational& v) { f1_[idx(i, j)] = v; }
  void set_f2(Letter i, Letter j, const Rational& v) { f2_[idx(i, j)] = v; }

  /// nullptr when f3(i⊗j) = 0.
  const F3Term* f3(Letter i, Letter j) const {
    auto it = f3_.find({i, j});
    return it == f3_.end() ? nullptr : &it->second;
  }
  void set_f3(Letter i, Letter j, const Rational& coeff, Letter g);
  void set_f3_overflow(Letter i, Letter j);
  void clear_f3(Letter i, Letter j) { f3_.erase({i, j}); }
  bool f3_empty() const { return f3_.empty(); }
  const F3Map& f3_entries() const { return f3_; }

  const Naming& naming() const { return naming_; }
  void set_naming(Naming n) { naming_ = std::move(n); }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  /// Equality of the algebraic data (naming and display name excluded).
  friend bool operator==(const StuffleTable& a, const StuffleTable& b) {
    return a.size_ == b.size_ && a.f1_ == b.f1_ && a.f2_ == b.f2_ &&
           a.f3_ == b.f3_;
  }

private:
  std::size_t idx(Letter i, Letter j) const;

  unsigned size_;
  std::vector<Rational> f1_, f2_;
  F3Map f3_;
  Naming naming_;
  std::string name_;
};

/// Builds a table from the flat tuple convention used for small alphabets.
/// c = 2: (f1(ab), f1(ba), f1(aa), f2(aa), f1(bb), f2(bb)).
/// c = 3: (f1(ab), f1(ba), f1(bc), f1(cb), f1(ac), f1(ca),
///         f1(aa), f2(aa), f1(bb), f2(bb), f1(cc), f2(cc)).
/// Off-diagonal f2 is filled by the commutativity constraint
/// f2(x⊗y) := f1(y⊗x).
StuffleTable table_from_tuple(unsigned c, const std::vector<Rational>& tuple,
                              const F3Map& f3 = {});

/// The inverse of table_from_tuple on its image (c in {2, 3}).
std::vector<Rational> table_tuple(const StuffleTable& t);

/// Shape and range sanity: dimensions, nonzero f3 coefficients, f3 letters
/// within the alphabet (overflow markers are legal — they are the sound
/// truncation signal for rule-based specs).
CheckReport validate_table(const StuffleTable& t);

/// Classical shuffle table on c letters: f1 = f2 ≡ 1, no contraction.
StuffleTable classical_table(unsigned c);

/// Everything-zero table on c letters.
StuffleTable null_table(unsigned c);

/// A named product rule on a (possibly countable) alphabet, truncated at
/// max_index. Known names: shuffle, stuffle, hoffman_ihara, sz, bz, null.
struct RuleSpec {
  std::string name;
  unsigned max_index = 0;

  struct Value {
    Rational f1, f2;
    Rational f3_coeff;  // zero when no contraction
    Letter f3_letter = 0;
    bool f3_overflow = false;
  };

  /// The defining recursion weights at one letter pair.
  Value rule(Letter i, Letter j) const;

  /// The induced finite table over {1..max_index} (rule letters beyond the
  /// bound become overflow markers).
  StuffleTable to_table() const;
};

/// Built-in rule by name. sz fixes the alphabet {y=1, p=2} and bz fixes
/// {y=1, p=2, pb=3}; max_index only sizes the countable-alphabet rules.
RuleSpec builtin_spec(const std::string& name, unsigned max_index = 9);

/// JSON spec-file round trip. The table form is
///   {"alphabet": 2, "f1": [["1","1"],["0","1"]], "f2": [...],
///    "f3": [{"i":1,"j":1,"coeff":"1","letter":2}]}
/// with 1-based rows/columns and rationals as strings.
std::string table_to_json(const StuffleTable& t);
StuffleTable table_from_json(const std::string& json_text);

/// Loads either a table file or a builtin reference
/// {"builtin": "stuffle", "max_index": 9}.
StuffleTable load_spec_text(const std::string& json_text);

}  // namespace stuffle
