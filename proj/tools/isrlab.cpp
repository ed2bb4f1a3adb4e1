// isrlab: run verification suites, compute single expectations, print tables.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isrlab/characters.hpp"
#include "isrlab/serialize.hpp"
#include "isrlab/suites.hpp"
#include "isrlab/zoo.hpp"

using namespace isrlab;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUnknownSuite = 2;
constexpr int kExitError = 3;

nlohmann::json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw ParseError("cannot open " + arg.substr(1));
    return nlohmann::json::parse(in);
  }
  return nlohmann::json::parse(arg);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

struct RunConfig {
  std::string suite = "all";
  std::optional<int> n;
  std::optional<int> m;
  std::uint64_t seed = 7;
  std::string out;
  int verbosity = 0;
};

int run_cmd(const RunConfig& cfg) {
  if (!is_suite(cfg.suite)) {
    std::cerr << "unknown suite '" << cfg.suite << "'; known:";
    for (const auto& s : suite_names()) std::cerr << ' ' << s;
    std::cerr << '\n';
    return kExitUnknownSuite;
  }
  SuiteOptions opt;
  opt.seed = cfg.seed;
  opt.n = cfg.n;
  opt.m = cfg.m;
  const SuiteReport report = run_suite(cfg.suite, opt);
  write_text(cfg.out, to_json(report).dump(2) + "\n");
  if (cfg.verbosity > 0) {
    for (const auto& sc : report.scenarios) {
      std::cerr << (sc.passed() ? "pass " : "FAIL ") << sc.name << '\n';
      if (cfg.verbosity > 1 || !sc.passed())
        for (const auto& c : sc.checks)
          if (cfg.verbosity > 1 || !c.pass)
            std::cerr << "    " << (c.pass ? "ok   " : "fail ") << c.description << ": expected " << c.expected
                      << ", got " << c.actual << '\n';
    }
  }
  return report.passed() ? 0 : kExitFail;
}

int expect_cmd(const std::string& spec_file, const std::string& element, bool as_json) {
  std::ifstream in(spec_file);
  if (!in) throw ParseError("cannot open " + spec_file);
  const SubalgebraSpec spec = spec_from_json(nlohmann::json::parse(in));
  const nlohmann::json ej = read_json_arg(element);
  // a bare group element, or an algebra element as a list of terms
  const AlgebraElement x =
      ej.is_array() ? algebra_from_json(ej) : AlgebraElement::unit(element_from_json(ej));
  if (!verify_closure(spec)) throw HypothesisViolated("spec '" + spec.label() + "' is not closed under products and *");
  const ExpectationReport r = conditional_expectation(x, spec);
  if (as_json) {
    Json j;
    j["spec"] = spec.label();
    j["input"] = to_json(r.input);
    j["output"] = to_json(r.output);
    j["residual_norm_sq"] = rational_string(r.residual_norm_sq);
    j["character"] = r.character_value.to_string();
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "spec\t" << spec.label() << '\n'
              << "input\t" << r.input.to_string() << '\n'
              << "E\t" << r.output.to_string() << '\n'
              << "residual_norm_sq\t" << rational_string(r.residual_norm_sq) << '\n'
              << "chi\t" << r.character_value.to_string() << '\n';
  }
  return 0;
}

void characters_table(const std::string& family, int n, const std::vector<std::string>& chis) {
  std::vector<CharacterSpec> specs;
  for (const auto& c : chis) specs.push_back(CharacterSpec::parse(c));
  std::vector<GroupElement> elems;
  if (family == "affine" || family == "gl") {
    for (const auto& g : enumerate_group({Family::Affine, n}))
      if (family == "affine" || g.affine().v.is_zero()) elems.push_back(g);
  } else if (family == "cantor") {
    for (const auto& g : enumerate_group({Family::Cantor, n}))
      if (g.cantor().subset == 0) elems.push_back(g);
  } else {
    throw ParseError("characters table: family must be affine, gl or cantor");
  }
  std::cout << "element";
  for (const auto& s : specs) std::cout << '\t' << s.name();
  std::cout << '\n';
  for (const auto& g : elems) {
    std::cout << g.to_string();
    for (const auto& s : specs) std::cout << '\t' << rational_string(evaluate(s, g));
    std::cout << '\n';
  }
}

void fpc_table() {
  std::vector<FpcTableRow> rows;
  fpc_growth_suite(&rows);
  std::cout << "lemma\telement\tmember\ttruncation\torbit_size\n";
  for (const auto& r : rows)
    for (std::size_t k = 0; k < r.truncations.size(); ++k)
      std::cout << r.lemma << '\t' << r.label << '\t' << (r.member ? "yes" : "no") << '\t' << r.truncations[k]
                << '\t' << r.orbit_sizes[k] << '\n';
}

void closure_table(const std::string& family, std::optional<int> n) {
  std::vector<Truncation> ts;
  if (family == "all") {
    ts = {{Family::Affine, 3}, {Family::Wreath, 4}, {Family::Cantor, 2}};
  } else {
    const Family f = parse_family(family);
    const int fallback = f == Family::Affine ? 3 : f == Family::Wreath ? 4 : f == Family::Cantor ? 2 : 4;
    ts = {{f, n.value_or(fallback)}};
  }
  std::cout << "family\tn\tgenerator\tclosure_size\n";
  for (const auto& t : ts)
    for (const auto& [label, g] : closure_probes(t)) {
      const auto c = normal_closure({g}, t);
      std::cout << family_name(t.family) << '\t' << t.n << '\t' << label << '\t'
                << (c ? std::to_string(c->size()) : std::string("over-cap")) << '\n';
    }
}

SubalgebraSpec named_spec(const std::string& name, int n) {
  if (name == "mexo") return build_mexo(n);
  if (name == "mq" || name == "mq+") return build_mq(n, QSign::Plus);
  if (name == "mq-") return build_mq(n, QSign::Minus);
  if (name == "mpart") return build_mpart(n);
  if (name == "vector") return build_vector_algebra(n);
  if (name == "scalars") return build_scalars({Family::Affine, n});
  throw ParseError("unknown spec '" + name + "' (mexo, mq, mq-, mpart, vector, scalars)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact finite-truncation checks for invariant subalgebras of group algebras"};
  app.require_subcommand(1);
  std::string cap;
  app.add_option("--cap", cap, "global enumeration cap (overrides ISRLAB_CAP)");

  RunConfig cfg;
  auto* run = app.add_subcommand("run", "run a verification suite and write its JSON report");
  run->add_option("--suite", cfg.suite, "suite name or 'all'");
  run->add_option("--n", cfg.n, "affine/wreath truncation override");
  run->add_option("--m", cfg.m, "lamplighter modulus override");
  run->add_option("--seed", cfg.seed, "rng seed");
  run->add_option("--out,-o", cfg.out, "report path (default stdout)");
  run->add_option("--cap", cap, "global enumeration cap (overrides ISRLAB_CAP)");
  run->add_flag("-v,--verbose", cfg.verbosity, "per-scenario summary on stderr; repeat for every check");

  std::string spec_file, element;
  bool as_json = false;
  auto* expect = app.add_subcommand("expect", "conditional expectation of one element onto a spec");
  expect->add_option("--spec", spec_file, "subalgebra spec JSON file")->required();
  expect->add_option("--element", element, "element JSON, or @file")->required();
  expect->add_flag("--json", as_json, "print JSON instead of TSV");

  std::string kind = "characters", family;
  std::optional<int> table_n;
  std::vector<std::string> chis;
  auto* tables = app.add_subcommand("tables", "TSV tables: characters, fpc, closure");
  tables->add_option("kind", kind, "characters | fpc | closure")->check(CLI::IsMember({"characters", "fpc", "closure"}));
  tables->add_option("--family", family, "affine | gl | cantor (characters); affine | wreath | cantor | lamplighter | all (closure)");
  tables->add_option("--n", table_n, "truncation");
  tables->add_option("--chi", chis, "character spec, e.g. affine:k=1,d=0 (repeatable)");

  std::string spec_name = "mexo", spec_out;
  int spec_n = 2;
  auto* spec_export = app.add_subcommand("spec-export", "write a built-in subalgebra spec as JSON");
  spec_export->add_option("name", spec_name, "mexo | mq | mq- | mpart | vector | scalars");
  spec_export->add_option("--n", spec_n, "dimension / degree");
  spec_export->add_option("--out,-o", spec_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);
  if (!cap.empty()) setenv("ISRLAB_CAP", cap.c_str(), 1);

  try {
    if (*run) return run_cmd(cfg);
    if (*expect) return expect_cmd(spec_file, element, as_json);
    if (*tables) {
      if (kind == "characters") {
        if (family.empty()) family = "affine";
        if (chis.empty()) chis = family == "cantor"
                                     ? std::vector<std::string>{"cantor:k=1", "cantor:k=2"}
                                 : family == "gl" ? std::vector<std::string>{"gl:m=1", "gl:m=2"}
                                                  : std::vector<std::string>{"affine:k=1,d=1", "affine:k=1,d=0"};
        characters_table(family, table_n.value_or(2), chis);
      } else if (kind == "fpc") {
        fpc_table();
      } else {
        closure_table(family.empty() ? "all" : family, table_n);
      }
      return 0;
    }
    if (*spec_export) {
      write_text(spec_out, to_json(named_spec(spec_name, spec_n)).dump(2) + "\n");
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad JSON: " << e.what() << '\n';
    return kExitError;
  }
  return 0;
}
