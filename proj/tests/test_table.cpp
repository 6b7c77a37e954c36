#include <doctest.h>

#include <random>
#include <set>

#include "stuffle/table.hpp"

using namespace stuffle;

TEST_CASE("tuple construction fills the mirror f2 entries") {
  // (f1(ab), f1(ba), f1(aa), f2(aa), f1(bb), f2(bb))
  StuffleTable c9 = table_from_tuple(2, {1, 0, 1, 1, 1, 1});
  CHECK(c9.f1(1, 2) == Rational(1));
  CHECK(c9.f1(2, 1) == Rational(0));
  CHECK(c9.f2(1, 2) == Rational(0));  // = f1(ba)
  CHECK(c9.f2(2, 1) == Rational(1));  // = f1(ab)
  CHECK(c9.f1(1, 1) == Rational(1));
  CHECK(c9.f2(2, 2) == Rational(1));
  CHECK(c9.f3_empty());

  StuffleTable all1 = table_from_tuple(3, {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(all1 == classical_table(3));

  CHECK_THROWS_AS(table_from_tuple(2, {1, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(table_from_tuple(4, std::vector<Rational>(12, 1)),
                  PreconditionError);
}

TEST_CASE("table_tuple inverts table_from_tuple") {
  std::vector<Rational> t2 = {1, 0, Rational(1, 2), Rational(1, 2), 0, 0};
  CHECK(table_tuple(table_from_tuple(2, t2)) == t2);
  std::vector<Rational> t3 = {2, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1};
  CHECK(table_tuple(table_from_tuple(3, t3)) == t3);
}

TEST_CASE("tuple construction is injective over the 2-letter 0/1 grid") {
  std::set<std::vector<Rational>> seen;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<Rational> tuple(6);
    for (int s = 0; s < 6; ++s) tuple[s] = (mask >> s) & 1;
    seen.insert(table_tuple(table_from_tuple(2, tuple)));
  }
  CHECK(seen.size() == 64);
}

TEST_CASE("validation catches bad contracting entries") {
  StuffleTable good = table_from_tuple(2, {1, 0, 1, 1, 1, 1});
  CHECK(validate_table(good).pass);

  StuffleTable bad_letter(2);
  bad_letter.set_f3(1, 1, 1, 5);
  CheckReport r = validate_table(bad_letter);
  CHECK(!r.pass);
  CHECK(r.identity == "letter out of range");

  StuffleTable zero_coeff(2);
  zero_coeff.set_f3(1, 2, 0, 1);
  r = validate_table(zero_coeff);
  CHECK(!r.pass);
  CHECK(r.identity == "zero f3 coefficient");

  StuffleTable marker(2);
  marker.set_f3_overflow(2, 2);
  CHECK(validate_table(marker).pass);  // markers are the truncation signal
}

TEST_CASE("builtin rules reproduce the defining recursions") {
  RuleSpec stuffle_rule = builtin_spec("stuffle", 9);
  auto v = stuffle_rule.rule(1, 2);
  CHECK(v.f1 == Rational(1));
  CHECK(v.f2 == Rational(1));
  CHECK(v.f3_coeff == Rational(1));
  CHECK(v.f3_letter == 3);
  auto big = stuffle_rule.rule(5, 5);
  CHECK(big.f3_overflow);

  RuleSpec sz = builtin_spec("sz");
  auto yp = sz.rule(1, 2);
  CHECK(yp.f1 == Rational(1));
  CHECK(yp.f2 == Rational(0));
  CHECK(yp.f3_coeff == Rational(0));
  auto pp = sz.rule(2, 2);
  CHECK(pp.f3_coeff == Rational(1));
  CHECK(pp.f3_letter == 2);

  RuleSpec bz = builtin_spec("bz");
  auto pbpb = bz.rule(3, 3);
  CHECK(pbpb.f1 == Rational(1));
  CHECK(pbpb.f2 == Rational(1));
  CHECK(pbpb.f3_coeff == Rational(-1));
  CHECK(pbpb.f3_letter == 3);
  auto ppb = bz.rule(2, 3);
  CHECK(ppb.f3_coeff == Rational(0));

  RuleSpec hi = builtin_spec("hoffman_ihara", 12);
  auto h = hi.rule(3, 4);
  CHECK(h.f3_coeff == Rational(-1));
  CHECK(h.f3_letter == 7);

  CHECK_THROWS_AS(builtin_spec("nope"), PreconditionError);
}

TEST_CASE("builtin induced tables validate and mirror their rules") {
  for (const char* name : {"shuffle", "stuffle", "hoffman_ihara", "sz", "bz",
                           "null"}) {
    RuleSpec spec = builtin_spec(name, 6);
    StuffleTable t = spec.to_table();
    CHECK(validate_table(t).pass);
    for (Letter i = 1; i <= t.alphabet_size(); ++i)
      for (Letter j = 1; j <= t.alphabet_size(); ++j) {
        auto v = spec.rule(i, j);
        CHECK(t.f1(i, j) == v.f1);
        CHECK(t.f2(i, j) == v.f2);
      }
  }
  CHECK(builtin_spec("sz").to_table().alphabet_size() == 2);
  CHECK(builtin_spec("bz").to_table().alphabet_size() == 3);
  CHECK(builtin_spec("null", 2).to_table().f3_empty());
}

TEST_CASE("json serialization round trips, including markers") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> val(-2, 2), den(1, 3), pick(0, 5);
  for (int iter = 0; iter < 60; ++iter) {
    unsigned c = 2 + iter % 2;
    StuffleTable t(c);
    for (Letter i = 1; i <= c; ++i)
      for (Letter j = 1; j <= c; ++j) {
        t.set_f1(i, j, Rational(val(rng), den(rng)));
        t.set_f2(i, j, Rational(val(rng), den(rng)));
        int p = pick(rng);
        if (p == 0)
          t.set_f3(i, j, Rational(1 + (val(rng) & 1)), 1 + (j % c));
        else if (p == 1)
          t.set_f3_overflow(i, j);
      }
    CHECK(table_from_json(table_to_json(t)) == t);
  }
}

TEST_CASE("spec files load tables and builtin references") {
  const char* sample =
      R"({"alphabet": 2, "f1": [["1","1"],["0","1"]], "f2": [["1","1"],["0","1"]],
          "f3": [{"i":1,"j":1,"coeff":"1","letter":2}]})";
  StuffleTable t = load_spec_text(sample);
  CHECK(t.alphabet_size() == 2);
  CHECK(t.f1(1, 2) == Rational(1));
  CHECK(t.f2(2, 1) == Rational(0));
  REQUIRE(t.f3(1, 1) != nullptr);
  CHECK(t.f3(1, 1)->letter == 2);

  StuffleTable sz = load_spec_text(R"({"builtin": "sz"})");
  CHECK(sz.alphabet_size() == 2);
  StuffleTable st = load_spec_text(R"({"builtin": "stuffle", "max_index": 4})");
  CHECK(st.alphabet_size() == 4);

  CHECK_THROWS_AS(load_spec_text("not json"), ParseError);
  CHECK_THROWS_AS(load_spec_text(R"({"alphabet": 2})"), ParseError);
  CHECK_THROWS_AS(load_spec_text(R"({"builtin": "nope"})"), PreconditionError);
}
