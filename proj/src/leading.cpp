#include "stuffle/leading.hpp"

#include <chrono>
#include <set>

namespace stuffle {

StuffleTable c9_table() { return family_table(2, 9); }

namespace {

using SpectrumMemo = std::map<std::pair<Word, Word>, std::set<Word>>;

const std::set<Word>& spectrum_rec(const StuffleTable& t, const Word& u,
                                   const Word& v, SpectrumMemo& memo) {
  auto key = std::make_pair(u, v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::set<Word> out;
  if (u.empty()) {
    out.insert(v);
  } else if (v.empty()) {
    out.insert(u);
  } else {
    if (!t.f1(u[0], v[0]).is_zero())
      for (const Word& w : spectrum_rec(t, u.substr(1), v, memo))
        out.insert(prepend(u[0], w));
    if (!t.f2(u[0], v[0]).is_zero())
      for (const Word& w : spectrum_rec(t, u, v.substr(1), memo))
        out.insert(prepend(v[0], w));
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

}  // namespace

std::vector<Word> spectrum(const StuffleTable& t, const Word& u,
                           const Word& v) {
  if (!t.f3_empty())
    throw PreconditionError("spectrum wants a shuffle-type table (empty f3)");
  SpectrumMemo memo;
  const std::set<Word>& s = spectrum_rec(t, u, v, memo);
  return {s.begin(), s.end()};
}

namespace {

constexpr Letter kA = 1, kB = 2;

std::size_t run_length(const Word& w, std::size_t from, Letter l) {
  std::size_t n = from;
  while (n < w.size() && w[n] == l) ++n;
  return n - from;
}

Word greedy(const Word& u, const Word& v) {
  if (u.empty()) return v;
  if (v.empty()) return u;
  if (u[0] == kA && v[0] == kA) {
    std::size_t p = run_length(u, 0, kA), q = run_length(v, 0, kA);
    return run(kA, p + q) + greedy(u.substr(p), v.substr(q));
  }
  if (u[0] == kA) {
    std::size_t p = run_length(u, 0, kA);
    return run(kA, p) + greedy(u.substr(p), v);
  }
  if (v[0] == kA) return greedy(v, u);

  // both start with b: compare the a-runs behind the leading b-runs
  std::size_t alpha = run_length(u, 0, kB);
  std::size_t p = run_length(u, alpha, kA);
  std::size_t beta = run_length(v, 0, kB);
  std::size_t q = run_length(v, beta, kA);
  if (p == 0) return u + v;  // u is a pure b-run
  if (q == 0) return v + u;
  const Word u1 = u.substr(alpha + p);
  const Word v1 = v.substr(beta + q);
  const Word head = run(kB, alpha + beta - 1);
  if (q < p) return head + run(kA, q) + greedy(run(kB, 1) + run(kA, p) + u1, v1);
  if (p < q) return head + run(kA, p) + greedy(u1, run(kB, 1) + run(kA, q) + v1);
  // tie: the recursion splits both ways; keep the larger candidate
  Word cand1 = head + run(kA, q) + greedy(run(kB, 1) + run(kA, p) + u1, v1);
  Word cand2 = head + run(kA, p) + greedy(u1, run(kB, 1) + run(kA, q) + v1);
  return std::max(cand1, cand2);
}

}  // namespace

Word max_word_greedy(const Word& u, const Word& v) {
  for (unsigned char l : u)
    if (l != kA && l != kB)
      throw PreconditionError("greedy maximum is defined over {a,b}");
  for (unsigned char l : v)
    if (l != kA && l != kB)
      throw PreconditionError("greedy maximum is defined over {a,b}");
  return greedy(u, v);
}

CheckReport leading_statement(unsigned n, double budget_seconds) {
  if (n < 1) throw PreconditionError("degree must be >= 1");
  const auto start = std::chrono::steady_clock::now();
  auto over_budget = [&] {
    if (budget_seconds <= 0) return false;
    std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    return dt.count() > budget_seconds;
  };

  const std::vector<Word> words = words_of_length(n, 2);
  // running maximum of max(w1 □ w2) over pairs w1 <= w2 <= w[k] with w1 < w[k]
  Word run_max;
  std::pair<std::size_t, std::size_t> run_arg{0, 0};
  Word prev_diag = greedy(words[0], words[0]);
  std::pair<std::size_t, std::size_t> prev_arg{0, 0};
  for (std::size_t k = 1; k < words.size(); ++k) {
    if (over_budget()) {
      CheckReport r = CheckReport::failed("leading-statement", (int)n,
                                          "time budget exceeded", {}, "", "");
      r.notes.push_back("stopped after " + std::to_string(k) + " of " +
                        std::to_string(words.size()) + " words");
      return r;
    }
    if (run_max < prev_diag) {
      run_max = prev_diag;
      run_arg = prev_arg;
    }
    for (std::size_t i = 0; i < k; ++i) {
      Word cand = greedy(words[i], words[k]);
      if (run_max < cand) {
        run_max = cand;
        run_arg = {i, k};
      }
    }
    Word diag = greedy(words[k], words[k]);
    if (!(run_max < diag))
      return CheckReport::failed(
          "leading-statement", (int)n, "max(w1□w2) < max(w□w)",
          {render_word(words[run_arg.first]), render_word(words[run_arg.second]),
           render_word(words[k])},
          render_word(run_max), render_word(diag));
    prev_diag = diag;
    prev_arg = {k, k};
  }
  return CheckReport::passed("leading-statement", (int)n);
}

Certificate square_zero_certificate(unsigned n, double budget_seconds) {
  CheckReport stmt = leading_statement(n, budget_seconds);
  if (!stmt.pass) {
    bool timeout = stmt.identity == "time budget exceeded";
    return {false, timeout ? "time budget exceeded"
                           : "leading-word statement fails: " + stmt.identity};
  }
  // the diagonal coefficients: max(w□w) must really occur in w□w
  StuffleTable table = c9_table();
  ProductContext ctx(table);
  for (const Word& w : words_of_length(n, 2)) {
    Elem sq = ctx.product(w, w);
    if (sq.is_zero()) return {false, "w□w vanished at " + render_word(w)};
    const Word& true_max = sq.terms().rbegin()->first;
    if (true_max != greedy(w, w))
      return {false, "greedy maximum disagrees with the product support at " +
                         render_word(w)};
    // map entries are nonzero by canonical form, so the coefficient of the
    // maximum is nonzero; nonnegativity of the table makes this no accident
  }
  return {true, "leading-word statement and nonzero diagonal coefficients"};
}

CheckReport power_closed_form_check(unsigned p) {
  if (p < 1 || p > 4)
    throw PreconditionError("closed-form power check runs for 1 <= p <= 4");
  StuffleTable table = c9_table();
  ProductContext ctx(table);

  Word ba = word_from({kB, kA});
  Word baa = word_from({kB, kA, kA});
  auto repeat = [](const Word& w, unsigned times) {
    Word out;
    for (unsigned i = 0; i < times; ++i) out += w;
    return out;
  };

  struct Case {
    Word base;
    Rational coeff;
    Word expect;
  };
  const Rational half_fact2p(factorial(2 * p), 1LL << p);
  const Rational sixth_fact3p(factorial(3 * p),
                              [&] {
                                long long d = 1;
                                for (unsigned i = 0; i < p; ++i) d *= 6;
                                return d;
                              }());
  const Rational fact_sq(factorial(p) * factorial(p));
  const Case cases[] = {
      {word_from({kA, kA}), half_fact2p, run(kA, 2 * p)},
      {word_from({kA, kB}), fact_sq, run(kA, p) + run(kB, p)},
      {ba, Rational(factorial(p)), repeat(ba, p)},
      {word_from({kB, kB}), half_fact2p, run(kB, 2 * p)},
      {word_from({kA, kA, kA}), sixth_fact3p, run(kA, 3 * p)},
      {word_from({kA, kA, kB}), Rational(factorial(2 * p), 1LL << p) * factorial(p),
       run(kA, 2 * p) + run(kB, p)},
      {word_from({kA, kB, kA}), fact_sq, run(kA, p) + repeat(ba, p)},
      {word_from({kA, kB, kB}), Rational(factorial(2 * p), 1LL << p) * factorial(p),
       run(kA, p) + run(kB, 2 * p)},
      {baa, Rational(factorial(p)), repeat(baa, p)},
      {word_from({kB, kB, kB}), sixth_fact3p, run(kB, 3 * p)},
  };
  for (const Case& cs : cases) {
    Elem got = ctx.power(Elem::of_word(cs.base), p);
    Elem want = Elem::of_word(cs.expect, cs.coeff);
    if (got != want)
      return CheckReport::failed(
          "power-closed-form", (int)p, "w^p closed form",
          {render_word(cs.base)}, got.render(), want.render());
  }
  return CheckReport::passed("power-closed-form", (int)p);
}

}  // namespace stuffle
