#include "stuffle/classify.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "stuffle/parallel.hpp"

namespace stuffle {

namespace {

const Rational kZero(0), kOne(1);

enum class Slot : unsigned char { Zero, One, K, M, A, OneMinusA };

// Tuple slot order:
//   c=2: (f1(ab), f1(ba), f1(aa), f2(aa), f1(bb), f2(bb))
//   c=3: (f1(ab), f1(ba), f1(bc), f1(cb), f1(ac), f1(ca),
//         f1(aa), f2(aa), f1(bb), f2(bb), f1(cc), f2(cc))
std::vector<Slot> pattern(const char* spec) {
  std::vector<Slot> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "0")
      out.push_back(Slot::Zero);
    else if (tok == "1")
      out.push_back(Slot::One);
    else if (tok == "k")
      out.push_back(Slot::K);
    else if (tok == "m")
      out.push_back(Slot::M);
    else if (tok == "a")
      out.push_back(Slot::A);
    else if (tok == "1-a")
      out.push_back(Slot::OneMinusA);
    else
      throw std::logic_error("bad family pattern token: " + tok);
  }
  return out;
}

const std::vector<std::vector<Slot>>& families(unsigned c) {
  static const std::vector<std::vector<Slot>> two = {
      pattern("0,0,0,0,0,0"),     pattern("k,0,0,0,0,0"),
      pattern("1,0,1,1,0,0"),     pattern("1,0,0,0,1,1"),
      pattern("0,0,1,1,0,0"),     pattern("0,0,1,1,1,1"),
      pattern("1,0,a,1-a,0,0"),   pattern("1,0,a,1-a,1,1"),
      pattern("1,0,1,1,1,1"),     pattern("1,1,1,1,1,1"),
  };
  static const std::vector<std::vector<Slot>> three = {
      pattern("0,0,0,0,0,0,0,0,0,0,0,0"),      // C1
      pattern("0,0,0,0,0,0,1,1,0,0,0,0"),      // C2
      pattern("0,0,0,0,0,0,1,1,1,1,0,0"),      // C3
      pattern("0,0,0,0,0,0,1,1,1,1,1,1"),      // C4
      pattern("k,0,0,0,0,0,0,0,0,0,0,0"),      // C5
      pattern("k,0,0,0,0,0,0,0,0,0,1,1"),      // C6
      pattern("1,0,0,0,0,0,1,1,0,0,0,0"),      // C7
      pattern("1,0,0,0,0,0,0,0,1,1,0,0"),      // C8
      pattern("1,0,0,0,0,0,1,1,1,1,0,0"),      // C9
      pattern("1,0,0,0,0,0,1,1,0,0,1,1"),      // C10
      pattern("1,0,0,0,0,0,0,0,1,1,1,1"),      // C11
      pattern("1,0,0,0,0,0,1,1,1,1,1,1"),      // C12
      pattern("1,1,0,0,0,0,1,1,1,1,0,0"),      // C13
      pattern("1,1,0,0,0,0,1,1,1,1,1,1"),      // C14
      pattern("k,0,0,m,0,0,0,0,0,0,0,0"),      // C15
      pattern("k,0,0,1,0,0,0,0,0,0,1,1"),      // C16
      pattern("1,0,0,1,0,0,0,0,1,1,0,0"),      // C17
      pattern("1,0,0,1,0,0,1,1,1,1,0,0"),      // C18
      pattern("1,0,0,1,0,0,1,1,0,0,1,1"),      // C19
      pattern("1,0,0,1,0,0,1,1,1,1,1,1"),      // C20
      pattern("k,0,0,0,m,0,0,0,0,0,0,0"),      // C21
      pattern("1,0,0,0,1,0,1,1,0,0,0,0"),      // C22
      pattern("1,0,0,0,1,0,a,1-a,0,0,0,0"),    // C23
      pattern("k,0,0,0,1,0,0,0,0,0,1,1"),      // C24
      pattern("1,0,0,0,1,0,1,1,1,1,0,0"),      // C25
      pattern("1,0,0,0,1,0,a,1-a,1,1,0,0"),    // C26
      pattern("1,0,0,0,1,0,0,0,1,1,1,1"),      // C27
      pattern("1,0,0,0,1,0,1,1,1,1,1,1"),      // C28
      pattern("1,0,0,0,1,0,a,1-a,1,1,1,1"),    // C29
      pattern("k,0,m,0,1,0,0,0,0,0,0,0"),      // C30
      pattern("1,0,k,0,1,0,1,1,0,0,0,0"),      // C31
      pattern("1,0,1,0,1,0,0,0,1,1,0,0"),      // C32
      pattern("k,0,1,0,1,0,0,0,0,0,1,1"),      // C33
      pattern("1,0,1,0,1,0,1,1,1,1,0,0"),      // C34
      pattern("1,0,1,0,1,0,1,1,0,0,1,1"),      // C35
      pattern("1,0,1,0,1,0,0,0,1,1,1,1"),      // C36
      pattern("1,0,1,0,1,0,1,1,1,1,1,1"),      // C37
      pattern("1,0,k,0,1,0,a,1-a,0,0,0,0"),    // C38
      pattern("1,0,1,0,1,0,a,1-a,1,1,0,0"),    // C39
      pattern("1,0,1,0,1,0,a,1-a,0,0,1,1"),    // C40
      pattern("1,0,1,0,1,0,a,1-a,1,1,1,1"),    // C41
      pattern("1,1,1,0,1,0,1,1,1,1,0,0"),      // C42
      pattern("1,1,1,0,1,0,1,1,1,1,1,1"),      // C43
      pattern("1,1,0,1,0,1,1,1,1,1,0,0"),      // C44
      pattern("1,1,0,1,0,1,1,1,1,1,1,1"),      // C45
      pattern("1,1,0,1,0,1,1,1,1,1,a,1-a"),    // C46
      pattern("1,1,1,1,1,1,1,1,1,1,1,1"),      // C47
  };
  if (c == 2) return two;
  if (c == 3) return three;
  throw PreconditionError("family catalogue covers alphabets of size 2 and 3");
}

bool pattern_uses(const std::vector<Slot>& p, Slot s) {
  return std::find(p.begin(), p.end(), s) != p.end();
}

}  // namespace

std::string FamilyId::str() const {
  std::string out = "C" + std::to_string(index);
  if (!params.empty()) {
    out += "[";
    bool first = true;
    for (const auto& [name, v] : params) {
      if (!first) out += ",";
      out += name + "=" + v.str();
      first = false;
    }
    out += "]";
  }
  return out;
}

unsigned family_count(unsigned c) {
  return static_cast<unsigned>(families(c).size());
}

StuffleTable family_table(unsigned c, unsigned index, const Rational& k,
                          const Rational& m, const Rational& alpha) {
  const auto& cat = families(c);
  if (index < 1 || index > cat.size())
    throw PreconditionError("family index out of range");
  const auto& pat = cat[index - 1];
  if (pattern_uses(pat, Slot::K) && k.is_zero())
    throw PreconditionError("parameter k must be nonzero");
  if (pattern_uses(pat, Slot::M) && m.is_zero())
    throw PreconditionError("parameter m must be nonzero");
  std::vector<Rational> tuple;
  tuple.reserve(pat.size());
  for (Slot s : pat) {
    switch (s) {
      case Slot::Zero: tuple.push_back(0); break;
      case Slot::One: tuple.push_back(1); break;
      case Slot::K: tuple.push_back(k); break;
      case Slot::M: tuple.push_back(m); break;
      case Slot::A: tuple.push_back(alpha); break;
      case Slot::OneMinusA: tuple.push_back(kOne - alpha); break;
    }
  }
  StuffleTable t = table_from_tuple(c, tuple);
  FamilyId id{c, index, {}};
  if (pattern_uses(pat, Slot::K)) id.params["k"] = k;
  if (pattern_uses(pat, Slot::M)) id.params["m"] = m;
  if (pattern_uses(pat, Slot::A)) id.params["alpha"] = alpha;
  t.set_name(id.str());
  return t;
}

std::optional<FamilyId> match_family(const StuffleTable& t) {
  if (!t.f3_empty())
    throw PreconditionError("family matching wants an empty f3");
  const unsigned c = t.alphabet_size();
  if (c != 2 && c != 3) return std::nullopt;
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = 1; j <= c; ++j)
      if (i != j && t.f2(i, j) != t.f1(j, i)) return std::nullopt;
  const std::vector<Rational> tuple = table_tuple(t);
  const auto& cat = families(c);
  for (unsigned fi = 0; fi < cat.size(); ++fi) {
    const auto& pat = cat[fi];
    bool ok = true;
    std::optional<Rational> k, m, alpha;
    for (std::size_t s = 0; s < pat.size() && ok; ++s) {
      const Rational& v = tuple[s];
      switch (pat[s]) {
        case Slot::Zero: ok = v == kZero; break;
        case Slot::One: ok = v == kOne; break;
        case Slot::K:
          ok = !v.is_zero() && (!k || *k == v);
          if (ok) k = v;
          break;
        case Slot::M:
          ok = !v.is_zero() && (!m || *m == v);
          if (ok) m = v;
          break;
        case Slot::A:
          ok = !alpha || *alpha == v;
          if (ok) alpha = v;
          break;
        case Slot::OneMinusA:
          ok = !alpha || *alpha == kOne - v;
          if (ok) alpha = kOne - v;
          break;
      }
    }
    if (!ok) continue;
    FamilyId id{c, fi + 1, {}};
    if (k) id.params["k"] = *k;
    if (m) id.params["m"] = *m;
    if (alpha) id.params["alpha"] = *alpha;
    return id;
  }
  return std::nullopt;
}

namespace {

bool characterization_holds(const StuffleTable& t) {
  const unsigned c = t.alphabet_size();
  for (Letter a = 1; a <= c; ++a) {
    const Rational& d1 = t.f1(a, a);
    const Rational& d2 = t.f2(a, a);
    bool equal_ok = d1 == d2 && (d1 == kZero || d1 == kOne);
    if (equal_ok) {
      for (Letter b = 1; b <= c && equal_ok; ++b) {
        if (b == a) continue;
        if (!(t.f1(a, b) * t.f1(b, a) * (d1 - kOne)).is_zero() ||
            !(d1 * t.f1(a, b) * (t.f1(a, b) - kOne)).is_zero() ||
            !(d1 * t.f1(b, a) * (t.f1(b, a) - kOne)).is_zero())
          equal_ok = false;
      }
    }
    if (equal_ok) continue;
    bool split_ok = d1 + d2 == kOne;
    for (Letter b = 1; b <= c && split_ok; ++b) {
      if (b == a) continue;
      if (t.f1(a, b) != kOne || t.f1(b, a) != kZero) split_ok = false;
    }
    if (!split_ok) return false;
  }
  for (Letter a = 1; a <= c; ++a)
    for (Letter b = 1; b <= c; ++b)
      for (Letter x = 1; x <= c; ++x) {
        if (a == b || b == x || a == x) continue;
        if (!(t.f1(a, b) * t.f1(b, x) * (t.f1(a, x) - kOne)).is_zero())
          return false;
      }
  return true;
}

}  // namespace

std::vector<StuffleTable> enumerate_weak_shuffles(
    unsigned c, const std::vector<Rational>& grid, int cross_check_bound) {
  if (c != 2 && c != 3)
    throw PreconditionError("enumeration covers alphabets of size 2 and 3");
  std::vector<Rational> values = grid;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  if (values.empty()) throw PreconditionError("empty value grid");

  const unsigned slots = c == 2 ? 6 : 12;
  std::size_t total = 1;
  for (unsigned i = 0; i < slots; ++i) total *= values.size();

  auto tuple_at = [&](std::size_t index) {
    std::vector<Rational> tuple(slots);
    for (unsigned s = slots; s-- > 0;) {
      tuple[s] = values[index % values.size()];
      index /= values.size();
    }
    return tuple;  // last slot varies fastest: ascending tuple order
  };

  std::vector<char> passes(total, 0);
  parallel_for(total, [&](std::size_t i) {
    passes[i] = characterization_holds(table_from_tuple(c, tuple_at(i))) ? 1 : 0;
  });

  std::vector<StuffleTable> out;
  for (std::size_t i = 0; i < total; ++i) {
    if (!passes[i]) continue;
    StuffleTable t = table_from_tuple(c, tuple_at(i));
    if (cross_check_bound > 0) {
      if (!check_commutative(t, cross_check_bound).pass ||
          !check_associative(t, cross_check_bound).pass)
        throw std::logic_error(
            "characterization accepted a table that brute force rejects");
    }
    if (auto id = match_family(t)) t.set_name(id->str());
    out.push_back(std::move(t));
  }
  return out;
}

bool f3_commutative(const F3Map& f3, unsigned c) {
  auto value = [&](Letter i, Letter j) -> F3Term {
    auto it = f3.find({i, j});
    return it == f3.end() ? F3Term{} : it->second;
  };
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = i + 1; j <= c; ++j) {
      F3Term a = value(i, j), b = value(j, i);
      if (a.coeff != b.coeff) return false;
      if (!a.coeff.is_zero() && a.letter != b.letter) return false;
    }
  return true;
}

bool f3_associative(const F3Map& f3, unsigned c) {
  auto value = [&](Letter i, Letter j) -> F3Term {
    auto it = f3.find({i, j});
    return it == f3.end() ? F3Term{} : it->second;
  };
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = 1; j <= c; ++j)
      for (Letter k = 1; k <= c; ++k) {
        F3Term left{}, ij = value(i, j);
        if (!ij.coeff.is_zero()) {
          F3Term o = value(ij.letter, k);
          if (!o.coeff.is_zero()) left = {ij.coeff * o.coeff, o.letter, false};
        }
        F3Term right{}, jk = value(j, k);
        if (!jk.coeff.is_zero()) {
          F3Term o = value(i, jk.letter);
          if (!o.coeff.is_zero())
            right = {jk.coeff * o.coeff, o.letter, false};
        }
        if (left.coeff != right.coeff) return false;
        if (!left.coeff.is_zero() && left.letter != right.letter) return false;
      }
  return true;
}

std::vector<F3Map> enumerate_f3_tables(unsigned c,
                                       const std::vector<Rational>& grid) {
  if (c < 1 || c > 4)
    throw PreconditionError("f3 enumeration covers small alphabets");
  std::vector<Rational> coeffs;
  for (const Rational& v : grid)
    if (!v.is_zero()) coeffs.push_back(v);
  std::sort(coeffs.begin(), coeffs.end());
  coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());

  // per unordered pair: value 0 or coeff·letter, in a fixed ascending order
  std::vector<std::pair<Letter, Letter>> pairs;
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = i; j <= c; ++j) pairs.emplace_back(i, j);
  std::vector<F3Term> options = {F3Term{}};
  for (const Rational& v : coeffs)
    for (Letter g = 1; g <= c; ++g) options.push_back(F3Term{v, g, false});

  std::vector<F3Map> out;
  std::vector<unsigned> odo(pairs.size(), 0);
  while (true) {
    F3Map cand;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const F3Term& term = options[odo[p]];
      if (!term.coeff.is_zero()) {
        cand[{pairs[p].first, pairs[p].second}] = term;
        cand[{pairs[p].second, pairs[p].first}] = term;
      }
    }
    if (f3_commutative(cand, c) && f3_associative(cand, c))
      out.push_back(std::move(cand));
    std::size_t pos = pairs.size();
    while (pos > 0) {
      if (++odo[pos - 1] < options.size()) break;
      odo[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
  }
  return out;
}

namespace {

Rational rational_pow(const Rational& base, unsigned n) {
  Rational r(1);
  for (unsigned i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace

Rational DiagonalMap::scalar(const Word& w) const {
  switch (kind) {
    case Kind::Identity:
      return 1;
    case Kind::PsiLeadingRun: {
      std::size_t n = 0;
      while (n < w.size() && w[n] == a) ++n;
      return Rational(1, factorial(static_cast<unsigned>(n)));
    }
    case Kind::Phi1: {
      std::size_t n = 0;
      while (n < w.size() && w[n] == a) ++n;
      if (n < w.size() && w[n] == b && n > 0)
        return Rational(1) / rational_pow(k, static_cast<unsigned>(n));
      return 1;
    }
    case Kind::Phi2: {
      std::size_t count = 0, i = 0;
      while (i < w.size() && w[i] != b) {
        if (w[i] == a) ++count;
        ++i;
      }
      if (i < w.size() && count > 0)
        return Rational(1) / rational_pow(k, static_cast<unsigned>(count));
      return 1;
    }
  }
  return 1;
}

Elem DiagonalMap::apply(const Elem& x) const {
  Elem out;
  for (const auto& [w, c] : x.terms()) out.add_term(w, c * scalar(w));
  return out;
}

std::string DiagonalMap::str() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::PsiLeadingRun:
      return "psi(a=" + std::to_string(a) + ")";
    case Kind::Phi1:
      return "phi1(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
             ",k=" + k.str() + ")";
    case Kind::Phi2:
      return "phi2(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
             ",k=" + k.str() + ")";
  }
  return "?";
}

std::pair<DiagonalMap, StuffleTable> iso_psi(const StuffleTable& t, Letter a) {
  const Rational& v = t.f1(a, a);
  if (v == kZero || v == kOne)
    throw PreconditionError(
        "psi normalizes the letter with f1(a⊗a) outside {0,1}");
  if (t.f2(a, a) != kOne - v)
    throw PreconditionError("psi expects f2(a⊗a) = 1 - f1(a⊗a)");
  for (Letter x = 1; x <= t.alphabet_size(); ++x)
    if (x != a && !(t.f1(x, x) == kZero || t.f1(x, x) == kOne))
      throw PreconditionError("psi wants a unique letter outside {0,1}");
  StuffleTable target = t;
  target.set_f1(a, a, 1);
  target.set_f2(a, a, 1);
  target.set_name("");
  DiagonalMap map{DiagonalMap::Kind::PsiLeadingRun, a, 0, 1};
  return {map, std::move(target)};
}

std::pair<DiagonalMap, StuffleTable> iso_phi(const StuffleTable& t, Letter a,
                                             Letter b, int variant) {
  if (a == b) throw PreconditionError("phi wants two distinct letters");
  if (variant != 1 && variant != 2)
    throw PreconditionError("phi variant must be 1 or 2");
  const Rational k = t.f1(a, b);
  if (k == kZero || k == kOne)
    throw PreconditionError(
        "phi normalizes a slot with f1(a⊗b) outside {0,1}");
  StuffleTable target = t;
  target.set_f1(a, b, 1);
  target.set_f2(b, a, 1);
  target.set_name("");
  DiagonalMap map{variant == 1 ? DiagonalMap::Kind::Phi1
                               : DiagonalMap::Kind::Phi2,
                  a, b, k};
  return {map, std::move(target)};
}

CheckReport verify_morphism(const DiagonalMap& map, const StuffleTable& source,
                            const StuffleTable& target, int bound) {
  if (source.alphabet_size() != target.alphabet_size())
    throw PreconditionError("morphism endpoints need equal alphabets");
  ProductContext src(source), tgt(target);
  const Naming& naming = source.naming();
  for (int s = 2; s <= bound; ++s)
    for (int l1 = 1; l1 <= s - 1; ++l1)
      for (const Word& u : words_of_length(l1, source.alphabet_size()))
        for (const Word& v : words_of_length(s - l1, source.alphabet_size())) {
          Elem lhs = map.apply(src.product(u, v));
          Elem rhs = tgt.product(u, v).scaled(map.scalar(u) * map.scalar(v));
          if (lhs != rhs)
            return CheckReport::failed(
                "morphism " + map.str(), bound,
                "map(u □ v) = map(u) □' map(v)",
                {render_word(u, naming), render_word(v, naming)},
                lhs.render(naming), rhs.render(naming));
        }
  return CheckReport::passed("morphism " + map.str(), bound);
}

std::string SquareZeroResult::str(const Naming& naming) const {
  if (!resolved) {
    std::string out = "unresolved;";
    for (const auto& r : residual) out += " " + r;
    return out;
  }
  std::string out = "dim " + std::to_string(dim);
  if (!basis.empty()) {
    out += ", span(";
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (i) out += ", ";
      out += render_word(basis[i], naming);
    }
    out += ")";
  }
  return out;
}

SquareZeroResult square_zero_dim(const StuffleTable& t, unsigned degree) {
  const auto words = words_of_length(degree, t.alphabet_size());
  const std::size_t n = words.size();
  ProductContext ctx(t);

  // coefficient of each product word, as a quadratic form in the lambdas
  using Mono = std::pair<unsigned, unsigned>;  // i <= j
  std::map<Word, std::map<Mono, Rational>> constraints;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      Mono mono = {std::min(i, j), std::max(i, j)};
      const Elem prod = ctx.product(words[i], words[j]);
      for (const auto& [w, c] : prod.terms()) {
        auto& poly = constraints[w];
        auto it = poly.find(mono);
        if (it == poly.end())
          poly.emplace(mono, c);
        else {
          it->second += c;
          if (it->second.is_zero()) poly.erase(it);
        }
      }
    }

  std::vector<char> forced(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [w, poly] : constraints) {
      Mono single{};
      Rational coeff;
      unsigned alive = 0;
      for (const auto& [mono, c] : poly) {
        if (forced[mono.first] || forced[mono.second]) continue;
        ++alive;
        single = mono;
        coeff = c;
        if (alive > 1) break;
      }
      if (alive == 1 && single.first == single.second && !coeff.is_zero()) {
        forced[single.first] = 1;
        changed = true;
      }
    }
  }

  SquareZeroResult result;
  std::vector<std::string> residual;
  for (const auto& [w, poly] : constraints) {
    std::string line;
    for (const auto& [mono, c] : poly) {
      if (forced[mono.first] || forced[mono.second]) continue;
      if (!line.empty()) line += " + ";
      line += c.str() + "*l[" + render_word(words[mono.first], t.naming()) +
              "]l[" + render_word(words[mono.second], t.naming()) + "]";
    }
    if (!line.empty())
      residual.push_back(render_word(w, t.naming()) + ": " + line);
  }
  if (!residual.empty()) {
    result.residual = std::move(residual);
    return result;
  }
  result.resolved = true;
  for (unsigned i = 0; i < n; ++i)
    if (!forced[i]) result.basis.push_back(words[i]);
  result.dim = static_cast<unsigned>(result.basis.size());
  return result;
}

}  // namespace stuffle
