#include "stuffle/table.hpp"

#include <json.hpp>

namespace stuffle {

StuffleTable::StuffleTable(unsigned alphabet_size, Naming naming)
    : size_(alphabet_size),
      f1_(std::size_t(alphabet_size) * alphabet_size, Rational(0)),
      f2_(std::size_t(alphabet_size) * alphabet_size, Rational(0)),
      naming_(std::move(naming)) {
  if (alphabet_size < 1 || alphabet_size > kMaxLetter)
    throw PreconditionError("alphabet size out of range");
}

std::size_t StuffleTable::idx(Letter i, Letter j) const {
  if (i < 1 || i > size_ || j < 1 || j > size_)
    throw PreconditionError("letter outside the table's alphabet");
  return std::size_t(i - 1) * size_ + (j - 1);
}

void StuffleTable::set_f3(Letter i, Letter j, const Rational& coeff,
                          Letter g) {
  idx(i, j);  // range-check the pair; g is validated by validate_table
  f3_[{i, j}] = F3Term{coeff, g, false};
}

void StuffleTable::set_f3_overflow(Letter i, Letter j) {
  idx(i, j);
  f3_[{i, j}] = F3Term{Rational(0), 0, true};
}

StuffleTable table_from_tuple(unsigned c, const std::vector<Rational>& tuple,
                              const F3Map& f3) {
  StuffleTable t(c);
  if (c == 2) {
    if (tuple.size() != 6)
      throw PreconditionError("alphabet 2 takes a 6-slot tuple");
    t.set_f1(1, 2, tuple[0]);
    t.set_f1(2, 1, tuple[1]);
    t.set_f1(1, 1, tuple[2]);
    t.set_f2(1, 1, tuple[3]);
    t.set_f1(2, 2, tuple[4]);
    t.set_f2(2, 2, tuple[5]);
  } else if (c == 3) {
    if (tuple.size() != 12)
      throw PreconditionError("alphabet 3 takes a 12-slot tuple");
    t.set_f1(1, 2, tuple[0]);
    t.set_f1(2, 1, tuple[1]);
    t.set_f1(2, 3, tuple[2]);
    t.set_f1(3, 2, tuple[3]);
    t.set_f1(1, 3, tuple[4]);
    t.set_f1(3, 1, tuple[5]);
    t.set_f1(1, 1, tuple[6]);
    t.set_f2(1, 1, tuple[7]);
    t.set_f1(2, 2, tuple[8]);
    t.set_f2(2, 2, tuple[9]);
    t.set_f1(3, 3, tuple[10]);
    t.set_f2(3, 3, tuple[11]);
  } else {
    throw PreconditionError("tuples are defined for alphabets of size 2 or 3");
  }
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = 1; j <= c; ++j)
      if (i != j) t.set_f2(i, j, t.f1(j, i));
  for (const auto& [key, term] : f3) {
    if (term.overflow)
      t.set_f3_overflow(key.first, key.second);
    else
      t.set_f3(key.first, key.second, term.coeff, term.letter);
  }
  return t;
}

std::vector<Rational> table_tuple(const StuffleTable& t) {
  const unsigned c = t.alphabet_size();
  if (c == 2)
    return {t.f1(1, 2), t.f1(2, 1), t.f1(1, 1),
            t.f2(1, 1), t.f1(2, 2), t.f2(2, 2)};
  if (c == 3)
    return {t.f1(1, 2), t.f1(2, 1), t.f1(2, 3), t.f1(3, 2),
            t.f1(1, 3), t.f1(3, 1), t.f1(1, 1), t.f2(1, 1),
            t.f1(2, 2), t.f2(2, 2), t.f1(3, 3), t.f2(3, 3)};
  throw PreconditionError("tuples are defined for alphabets of size 2 or 3");
}

CheckReport validate_table(const StuffleTable& t) {
  for (const auto& [key, term] : t.f3_entries()) {
    std::string at = "f3(" + std::to_string(key.first) + "," +
                     std::to_string(key.second) + ")";
    if (term.overflow) continue;
    if (term.coeff.is_zero())
      return CheckReport::failed("validate", 0, "zero f3 coefficient", {at},
                                 "0", "nonzero");
    if (term.letter < 1 || term.letter > t.alphabet_size())
      return CheckReport::failed("validate", 0, "letter out of range", {at},
                                 std::to_string(term.letter),
                                 "1.." + std::to_string(t.alphabet_size()));
  }
  return CheckReport::passed("validate", 0);
}

StuffleTable classical_table(unsigned c) {
  StuffleTable t(c);
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = 1; j <= c; ++j) {
      t.set_f1(i, j, 1);
      t.set_f2(i, j, 1);
    }
  t.set_name("classical");
  return t;
}

StuffleTable null_table(unsigned c) {
  StuffleTable t(c);
  t.set_name("null");
  return t;
}

namespace {

enum class BuiltinKind { Shuffle, Stuffle, HoffmanIhara, Sz, Bz, Null };

BuiltinKind builtin_kind(const std::string& name) {
  if (name == "shuffle") return BuiltinKind::Shuffle;
  if (name == "stuffle") return BuiltinKind::Stuffle;
  if (name == "hoffman_ihara") return BuiltinKind::HoffmanIhara;
  if (name == "sz") return BuiltinKind::Sz;
  if (name == "bz") return BuiltinKind::Bz;
  if (name == "null") return BuiltinKind::Null;
  throw PreconditionError("unknown builtin spec: " + name);
}

}  // namespace

RuleSpec::Value RuleSpec::rule(Letter i, Letter j) const {
  Value v;
  switch (builtin_kind(name)) {
    case BuiltinKind::Shuffle:
      v.f1 = 1;
      v.f2 = 1;
      break;
    case BuiltinKind::Stuffle:
    case BuiltinKind::HoffmanIhara: {
      v.f1 = 1;
      v.f2 = 1;
      bool negate = builtin_kind(name) == BuiltinKind::HoffmanIhara;
      if (i + j > max_index) {
        v.f3_overflow = true;
      } else {
        v.f3_coeff = negate ? Rational(-1) : Rational(1);
        v.f3_letter = i + j;
      }
      break;
    }
    case BuiltinKind::Sz: {
      // y = 1, p = 2:  yu□v = v□yu = y(u□v),
      //                pu□pv = p(u□pv) + p(pu□v) + p(u□v)
      if (i == 1) {
        v.f1 = 1;
        v.f2 = 0;
      } else if (j == 1) {
        v.f1 = 0;
        v.f2 = 1;
      } else {
        v.f1 = 1;
        v.f2 = 1;
        v.f3_coeff = 1;
        v.f3_letter = 2;
      }
      break;
    }
    case BuiltinKind::Bz: {
      // y = 1, p = 2, pb = 3; bracket [p,p] = 1, [pb,pb] = -1, mixed 0
      if (i == 1) {
        v.f1 = 1;
        v.f2 = 0;
      } else if (j == 1) {
        v.f1 = 0;
        v.f2 = 1;
      } else {
        v.f1 = 1;
        v.f2 = 1;
        if (i == j) {
          v.f3_coeff = i == 2 ? Rational(1) : Rational(-1);
          v.f3_letter = i;
        }
      }
      break;
    }
    case BuiltinKind::Null:
      v.f1 = 0;
      v.f2 = 0;
      break;
  }
  return v;
}

StuffleTable RuleSpec::to_table() const {
  unsigned c = max_index;
  Naming naming = Naming::letters();
  switch (builtin_kind(name)) {
    case BuiltinKind::Sz:
      c = 2;
      naming = Naming::custom({"y", "p"});
      break;
    case BuiltinKind::Bz:
      c = 3;
      naming = Naming::custom({"y", "p", "pb"});
      break;
    case BuiltinKind::Stuffle:
    case BuiltinKind::HoffmanIhara:
    case BuiltinKind::Shuffle:
      naming = Naming::x_indexed();
      break;
    case BuiltinKind::Null:
      break;
  }
  StuffleTable t(c, naming);
  for (Letter i = 1; i <= c; ++i)
    for (Letter j = 1; j <= c; ++j) {
      Value v = rule(i, j);
      t.set_f1(i, j, v.f1);
      t.set_f2(i, j, v.f2);
      if (v.f3_overflow)
        t.set_f3_overflow(i, j);
      else if (!v.f3_coeff.is_zero())
        t.set_f3(i, j, v.f3_coeff, v.f3_letter);
    }
  t.set_name(name);
  return t;
}

RuleSpec builtin_spec(const std::string& name, unsigned max_index) {
  builtin_kind(name);  // validates the name
  if (max_index < 1 || max_index > kMaxLetter)
    throw PreconditionError("max_index out of range");
  return RuleSpec{name, max_index};
}

std::string table_to_json(const StuffleTable& t) {
  nlohmann::json j;
  const unsigned c = t.alphabet_size();
  j["alphabet"] = c;
  nlohmann::json f1 = nlohmann::json::array(), f2 = nlohmann::json::array();
  for (Letter i = 1; i <= c; ++i) {
    nlohmann::json r1 = nlohmann::json::array(), r2 = nlohmann::json::array();
    for (Letter k = 1; k <= c; ++k) {
      r1.push_back(t.f1(i, k).str());
      r2.push_back(t.f2(i, k).str());
    }
    f1.push_back(std::move(r1));
    f2.push_back(std::move(r2));
  }
  j["f1"] = std::move(f1);
  j["f2"] = std::move(f2);
  nlohmann::json f3 = nlohmann::json::array();
  for (const auto& [key, term] : t.f3_entries()) {
    nlohmann::json e;
    e["i"] = key.first;
    e["j"] = key.second;
    if (term.overflow) {
      e["overflow"] = true;
    } else {
      e["coeff"] = term.coeff.str();
      e["letter"] = term.letter;
    }
    f3.push_back(std::move(e));
  }
  j["f3"] = std::move(f3);
  return j.dump();
}

namespace {

StuffleTable table_from_parsed(const nlohmann::json& j) {
  if (!j.contains("alphabet") || !j["alphabet"].is_number_unsigned())
    throw ParseError("spec file: missing alphabet size");
  unsigned c = j["alphabet"].get<unsigned>();
  if (c < 1 || c > kMaxLetter) throw ParseError("spec file: bad alphabet size");
  StuffleTable t(c);
  auto fill = [&](const char* key, bool is_f1) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != c)
      throw ParseError(std::string("spec file: bad ") + key + " matrix");
    for (Letter i = 1; i <= c; ++i) {
      const auto& row = j[key][i - 1];
      if (!row.is_array() || row.size() != c)
        throw ParseError(std::string("spec file: bad ") + key + " row");
      for (Letter k = 1; k <= c; ++k) {
        Rational v = Rational::parse(row[k - 1].get<std::string>());
        if (is_f1)
          t.set_f1(i, k, v);
        else
          t.set_f2(i, k, v);
      }
    }
  };
  fill("f1", true);
  fill("f2", false);
  if (j.contains("f3")) {
    if (!j["f3"].is_array()) throw ParseError("spec file: bad f3 list");
    for (const auto& e : j["f3"]) {
      Letter i = e.at("i").get<Letter>();
      Letter k = e.at("j").get<Letter>();
      if (e.contains("overflow") && e["overflow"].get<bool>()) {
        t.set_f3_overflow(i, k);
      } else {
        t.set_f3(i, k, Rational::parse(e.at("coeff").get<std::string>()),
                 e.at("letter").get<Letter>());
      }
    }
  }
  return t;
}

}  // namespace

StuffleTable table_from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spec file: ") + e.what());
  }
  try {
    return table_from_parsed(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spec file: ") + e.what());
  }
}

StuffleTable load_spec_text(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spec file: ") + e.what());
  }
  if (j.is_object() && j.contains("builtin")) {
    unsigned m = j.value("max_index", 9u);
    return builtin_spec(j["builtin"].get<std::string>(), m).to_table();
  }
  try {
    return table_from_parsed(j);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("spec file: ") + e.what());
  }
}

}  // namespace stuffle
