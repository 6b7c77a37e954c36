// stuffle — exact computer algebra for weak shuffle and weak stuffle
// products on word algebras: products, law checking, enumeration,
// kernels, and normalization morphisms.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "stuffle/checks.hpp"
#include "stuffle/classify.hpp"
#include "stuffle/leading.hpp"

namespace {

using namespace stuffle;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;   // a property failed or a rule overflowed
constexpr int kExitUsage = 2;  // bad flags, bad words, bad spec files

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Accepted spec sources: a JSON file path, a builtin name, or a catalogue
// reference "c2.C7[alpha=1/2,k=2]".
StuffleTable resolve_source(const std::string& source, unsigned max_index) {
  if (source.rfind("c2.C", 0) == 0 || source.rfind("c3.C", 0) == 0) {
    unsigned c = source[1] - '0';
    std::string rest = source.substr(4);
    std::string params;
    auto bracket = rest.find('[');
    if (bracket != std::string::npos) {
      if (rest.back() != ']')
        throw ParseError("bad family reference: " + source);
      params = rest.substr(bracket + 1, rest.size() - bracket - 2);
      rest = rest.substr(0, bracket);
    }
    unsigned index = 0;
    try {
      index = std::stoul(rest);
    } catch (const std::exception&) {
      throw ParseError("bad family reference: " + source);
    }
    Rational k = 1, m = 1, alpha = 0;
    std::istringstream in(params);
    std::string item;
    while (std::getline(in, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos)
        throw ParseError("bad family parameter: " + item);
      std::string key = item.substr(0, eq);
      Rational v = Rational::parse(item.substr(eq + 1));
      if (key == "k")
        k = v;
      else if (key == "m")
        m = v;
      else if (key == "alpha")
        alpha = v;
      else
        throw ParseError("unknown family parameter: " + key);
    }
    return family_table(c, index, k, m, alpha);
  }
  if (std::ifstream probe(source); probe.good()) {
    return load_spec_text(read_file(source));
  }
  try {
    return builtin_spec(source, max_index).to_table();
  } catch (const PreconditionError&) {
    throw ParseError("not a spec file, builtin, or family reference: " +
                     source);
  }
}

struct SpecOpts {
  std::string file;
  std::string builtin;
  unsigned max_index = 9;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--spec", file, "spec file (JSON)");
    auto* b = cmd->add_option("--builtin", builtin,
                              "builtin product: shuffle, stuffle, "
                              "hoffman_ihara, sz, bz, null");
    cmd->add_option("--max-index", max_index,
                    "truncation bound for countable alphabets");
    f->excludes(b);
  }

  StuffleTable resolve() const {
    if (!file.empty()) return load_spec_text(read_file(file));
    if (!builtin.empty()) return builtin_spec(builtin, max_index).to_table();
    throw ParseError("need --spec FILE or --builtin NAME");
  }
};

void print_report(const CheckReport& r, const std::string& format) {
  if (format == "json")
    std::cout << r.to_json() << "\n";
  else
    std::cout << r.to_text();
}

std::string render_f3_map(const F3Map& f3) {
  if (f3.empty()) return "(0)";
  std::string out = "(";
  bool first = true;
  for (const auto& [key, term] : f3) {
    if (key.first > key.second) continue;  // symmetric: print i <= j once
    if (!first) out += ", ";
    first = false;
    Word pair = word_from({key.first, key.second});
    out += render_word(pair) + "->";
    if (term.coeff != Rational(1)) out += term.coeff.str() + "*";
    out += render_word(word_from({term.letter}));
  }
  return out + ")";
}

std::string tuple_str(const StuffleTable& t) {
  std::string out = "(";
  auto tuple = table_tuple(t);
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += tuple[i].str();
  }
  return out + ")";
}

std::vector<Rational> parse_grid(const std::string& grid) {
  if (grid == "01") return {0, 1};
  if (grid == "ext") return {0, 1, 2, Rational(1, 2)};
  throw ParseError("grid must be 01 or ext");
}

int run(int argc, char** argv) {
  CLI::App app{
      "stuffle — exact arithmetic for weak shuffle and stuffle products"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- product ----------------------------------------------------------
  auto* product = app.add_subcommand("product", "multiply two words");
  SpecOpts product_spec;
  product_spec.attach(product);
  bool use_end = false;
  product->add_flag("--end", use_end, "use the last-letter recursion");
  std::vector<std::string> words;
  product->add_option("words", words, "two words (\"_\" is the empty word)")
      ->expected(2);

  // ---- check ------------------------------------------------------------
  auto* check = app.add_subcommand("check", "verify a law");
  check->require_subcommand(1);
  struct CheckCfg {
    SpecOpts spec;
    int max_len = 0;
    unsigned alphabet = 2;
    std::string grid = "01";
  } ck;
  auto add_check = [&](const char* name, const char* help, int default_len,
                       bool wants_spec) {
    auto* sub = check->add_subcommand(name, help);
    if (wants_spec) ck.spec.attach(sub);
    sub->add_option("--max-len", ck.max_len, "total length bound")
        ->default_val(default_len);
    return sub;
  };
  auto* ck_comm = add_check("comm", "commutativity", 6, true);
  auto* ck_assoc = add_check("assoc", "associativity", 6, true);
  auto* ck_char = add_check("char", "weak shuffle characterization", 0, true);
  auto* ck_dendri = add_check("dendriform", "dendriform axioms", 7, true);
  auto* ck_quadri = add_check("quadri", "quadri axioms (classical)", 8, false);
  ck_quadri->add_option("--alphabet", ck.alphabet, "alphabet size");
  auto* ck_quadri_spec = ck_quadri->add_option(
      "--spec", ck.spec.file, "diagnostic: wire the axioms to this table");
  auto* ck_end = add_check("end", "search for an equal end product", 5, true);
  ck_end->add_option("--grid", ck.grid, "entry grid: 01 or ext");
  auto* ck_hopf = add_check("hopf", "deconcatenation compatibility", 4, true);
  auto* ck_rel =
      add_check("stuffle-relations", "contracting-map relations", 0, true);

  // ---- enumerate --------------------------------------------------------
  auto* enumerate = app.add_subcommand("enumerate", "classify candidates");
  enumerate->require_subcommand(1);
  unsigned enum_alphabet = 2;
  std::string enum_grid = "01";
  auto* enum_shuffles =
      enumerate->add_subcommand("shuffles", "valid weak shuffle tables");
  enum_shuffles->add_option("--alphabet", enum_alphabet, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  enum_shuffles->add_option("--grid", enum_grid, "01 or ext");
  auto* enum_f3 =
      enumerate->add_subcommand("f3", "commutative associative contractions");
  enum_f3->add_option("--alphabet", enum_alphabet, "2 or 3")
      ->check(CLI::IsMember({2, 3}));
  enum_f3->add_option("--grid", enum_grid, "01 or ext");

  // ---- kernel -----------------------------------------------------------
  auto* kernel = app.add_subcommand("kernel", "square-zero space by degree");
  SpecOpts kernel_spec;
  kernel_spec.attach(kernel);
  unsigned kernel_degree = 2;
  kernel->add_option("--degree", kernel_degree, "homogeneous degree")
      ->check(CLI::Range(1u, 3u))
      ->required();

  // ---- statement --------------------------------------------------------
  auto* statement = app.add_subcommand(
      "statement", "leading-word statement and square-zero certificate");
  unsigned stmt_degree = 0;
  double stmt_budget = 0.0;
  statement->add_option("--degree", stmt_degree, "word length")->required();
  statement->add_option("--budget", stmt_budget, "time budget in seconds");

  // ---- iso --------------------------------------------------------------
  auto* iso = app.add_subcommand("iso", "normalization morphisms");
  auto* iso_verify = iso->add_subcommand("verify", "check a diagonal map");
  std::string iso_map, iso_from, iso_to;
  int iso_len = 6;
  iso_verify->add_option("--map", iso_map, "psi, phi1 or phi2")
      ->check(CLI::IsMember({"psi", "phi1", "phi2"}))
      ->required();
  iso_verify->add_option("--from", iso_from, "source spec")->required();
  iso_verify->add_option("--to", iso_to, "target spec")->required();
  iso_verify->add_option("--max-len", iso_len, "total length bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (product->parsed()) {
    StuffleTable t = product_spec.resolve();
    Word u = parse_word(words[0], t.naming());
    Word v = parse_word(words[1], t.naming());
    ProductContext ctx(t);
    Elem result = use_end ? ctx.end_product(u, v) : ctx.product(u, v);
    if (format == "json") {
      nlohmann::json j;
      j["result"] = result.render(t.naming());
      nlohmann::json terms = nlohmann::json::array();
      for (const auto& [w, c] : result.terms())
        terms.push_back(
            {{"coeff", c.str()}, {"word", render_word(w, t.naming())}});
      j["terms"] = std::move(terms);
      std::cout << j.dump() << "\n";
    } else {
      std::cout << result.render(t.naming()) << "\n";
    }
    return kExitPass;
  }

  if (check->parsed()) {
    CheckReport report;
    if (ck_comm->parsed())
      report = check_commutative(ck.spec.resolve(), ck.max_len);
    else if (ck_assoc->parsed())
      report = check_associative(ck.spec.resolve(), ck.max_len);
    else if (ck_char->parsed())
      report = check_characterization(ck.spec.resolve());
    else if (ck_dendri->parsed())
      report = check_dendriform(ck.spec.resolve(), ck.max_len);
    else if (ck_quadri->parsed()) {
      if (!ck_quadri_spec->empty()) {
        StuffleTable diag = load_spec_text(read_file(ck.spec.file));
        report = check_quadri(ck.max_len, diag.alphabet_size(), &diag);
      } else {
        report = check_quadri(ck.max_len, ck.alphabet);
      }
    } else if (ck_end->parsed()) {
      auto found = check_end_equality(ck.spec.resolve(), parse_grid(ck.grid),
                                      ck.max_len);
      if (found) {
        std::cout << "FOUND " << tuple_str(*found) << "\n";
        return kExitPass;
      }
      std::cout << "NONE\n";
      return kExitFail;
    } else if (ck_hopf->parsed())
      report = check_hopf_compat(ck.spec.resolve(), ck.max_len);
    else if (ck_rel->parsed())
      report = check_stuffle_relations(ck.spec.resolve());
    print_report(report, format);
    return report.pass ? kExitPass : kExitFail;
  }

  if (enumerate->parsed()) {
    if (enum_shuffles->parsed()) {
      auto tables =
          enumerate_weak_shuffles(enum_alphabet, parse_grid(enum_grid));
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& t : tables) {
          auto id = match_family(t);
          rows.push_back(
              {{"tuple", tuple_str(t)}, {"family", id ? id->str() : "-"}});
        }
        std::cout << nlohmann::json{{"tables", rows}, {"total", tables.size()}}
                  << "\n";
      } else {
        for (const auto& t : tables) {
          auto id = match_family(t);
          std::cout << tuple_str(t) << "\t" << (id ? id->str() : "-") << "\n";
        }
        std::cout << "total: " << tables.size() << "\n";
      }
    } else {
      auto maps = enumerate_f3_tables(enum_alphabet, parse_grid(enum_grid));
      if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& m : maps) rows.push_back(render_f3_map(m));
        std::cout << nlohmann::json{{"maps", rows}, {"total", maps.size()}}
                  << "\n";
      } else {
        for (const auto& m : maps) std::cout << render_f3_map(m) << "\n";
        std::cout << "total: " << maps.size() << "\n";
      }
    }
    return kExitPass;
  }

  if (kernel->parsed()) {
    StuffleTable t = kernel_spec.resolve();
    SquareZeroResult r = square_zero_dim(t, kernel_degree);
    std::cout << "K(" << kernel_degree << ",2): " << r.str(t.naming()) << "\n";
    return r.resolved ? kExitPass : kExitFail;
  }

  if (statement->parsed()) {
    CheckReport r = leading_statement(stmt_degree, stmt_budget);
    Certificate cert = square_zero_certificate(stmt_degree, stmt_budget);
    std::cout << "statement(" << stmt_degree
              << "): " << (r.pass ? "PASS" : "FAIL") << ", K(" << stmt_degree
              << ",2)={0}: " << (cert.proven_zero ? "PROVEN" : "INCONCLUSIVE")
              << "\n";
    if (!cert.proven_zero) std::cout << "reason: " << cert.reason << "\n";
    return r.pass && cert.proven_zero ? kExitPass : kExitFail;
  }

  if (iso_verify->parsed()) {
    StuffleTable source = resolve_source(iso_from, 9);
    StuffleTable target = resolve_source(iso_to, 9);
    if (source.alphabet_size() != target.alphabet_size())
      throw ParseError("source and target alphabets differ");
    const unsigned c = source.alphabet_size();
    DiagonalMap map;
    if (iso_map == "psi") {
      Letter a = 0;
      for (Letter i = 1; i <= c; ++i)
        if (source.f1(i, i) != target.f1(i, i)) a = i;
      if (a == 0) throw ParseError("psi: no diagonal slot differs");
      map = DiagonalMap{DiagonalMap::Kind::PsiLeadingRun, a, 0, 1};
    } else {
      Letter a = 0, b = 0;
      for (Letter i = 1; i <= c; ++i)
        for (Letter j = 1; j <= c; ++j)
          if (i != j && source.f1(i, j) != target.f1(i, j)) {
            a = i;
            b = j;
          }
      if (a == 0) throw ParseError("phi: no off-diagonal slot differs");
      map = DiagonalMap{
          iso_map == "phi1" ? DiagonalMap::Kind::Phi1 : DiagonalMap::Kind::Phi2,
          a, b, source.f1(a, b)};
    }
    CheckReport r = verify_morphism(map, source, target, iso_len);
    if (!r.pass) {
      CheckReport reverse = verify_morphism(map, target, source, iso_len);
      if (reverse.pass)
        r.notes.push_back("the reverse direction (" + iso_to + " -> " +
                          iso_from + ") passes");
    }
    print_report(r, format);
    return r.pass ? kExitPass : kExitFail;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kExitFail;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
}
