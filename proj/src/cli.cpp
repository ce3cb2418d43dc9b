#include "btinv/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "btinv/omega.hpp"
#include "btinv/selfcheck.hpp"

namespace btinv {

namespace {

struct RunConfig {
  std::vector<std::string> files;
  std::string invariant = "upsilon";
  bool fast = false;
  bool theta_q = false;
  std::uint64_t seed = 42;
  int strands = 4;
  int trials = 200;
  std::vector<std::string> suites;
  bool verbose = false;
  std::string output;
};

// Input file with the path attached to parse diagnostics.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TiedBraidWord load(const std::string& path) {
  try {
    TiedBraidWord w = read_word_file(path);
    if (w.name.empty()) w.name = std::filesystem::path(path).stem().string();
    return w;
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string yes_no(bool x) { return x ? "yes" : "no"; }

void print_value_block(std::ostream& out, const TiedBraidWord& w, const std::string& invariant,
                       const InvariantValue& x) {
  out << "name: " << w.name << "\n"
      << "invariant: " << invariant << "\n"
      << "engine: " << x.engine << "\n"
      << "strands: " << x.strands << "\n"
      << "components: " << x.components << "\n"
      << "classes: " << x.classes << "\n"
      << "value: " << x.value.render() << "\n";
}

void cmd_compute(const RunConfig& cfg, std::ostream& out) {
  static const std::vector<std::string> names = {"upsilon", "delta", "theta", "omega", "homflypt"};
  if (std::find(names.begin(), names.end(), cfg.invariant) == names.end()) {
    throw ValidationError("unknown invariant '" + cfg.invariant + "'");
  }
  if (cfg.fast && cfg.invariant != "omega") throw ValidationError("--fast is only valid with --invariant omega");
  if (cfg.theta_q && cfg.invariant != "theta") throw ValidationError("--theta-q is only valid with --invariant theta");

  std::vector<TiedBraidWord> words;
  for (const auto& path : cfg.files) words.push_back(load(path));
  if (cfg.invariant == "homflypt") {
    for (const auto& w : words) {
      if (w.has_ties()) throw ValidationError("homflypt needs classical links; '" + w.name + "' has ties");
    }
  }

  Specialization spec = Specialization::none;
  if (cfg.invariant == "delta") spec = Specialization::delta;
  if (cfg.invariant == "theta") spec = Specialization::theta;
  if (cfg.invariant == "omega") spec = Specialization::omega;
  Evaluator evaluator(specialization_bindings(spec, cfg.theta_q));

  bool first = true;
  for (const auto& w : words) {
    if (!first) out << "\n";
    first = false;
    InvariantValue x;
    if (cfg.fast) {
      OmegaSummary s = omega_fast(w);
      x = InvariantValue{s.value, "omega-graph", spec, w.strands, s.m, s.k};
    } else if (cfg.invariant == "homflypt") {
      x = evaluator.evaluate(tie_all(w));
      LinkingData data = linking_data(w);
      x.components = data.components;
    } else {
      x = evaluator.evaluate(w);
    }
    x.specialization = spec;
    print_value_block(out, w, cfg.invariant, x);
  }
}

void cmd_compare(const RunConfig& cfg, std::ostream& out) {
  if (cfg.files.size() != 2) throw ValidationError("compare needs exactly two files");
  TiedBraidWord first = load(cfg.files[0]), second = load(cfg.files[1]);
  for (const auto* w : {&first, &second}) {
    if (w->has_ties()) throw ValidationError("compare needs classical links; '" + w->name + "' has ties");
  }
  out << "A: " << first.name << "\n"
      << "B: " << second.name << "\n";
  Evaluator evaluator;
  const bool homflypt = homflypt_equal(first, second, evaluator);
  out << "homflypt-equal: " << yes_no(homflypt) << "\n";
  if (!homflypt) {
    out << "verdict: distinguished by Homflypt\n";
    return;
  }
  InvariantValue x = evaluator.evaluate(first), y = evaluator.evaluate(second);
  struct Column {
    const char* label;
    Specialization spec;
  };
  const Column columns[] = {{"upsilon(u,v)", Specialization::none},
                            {"upsilon(1,v)", Specialization::theta},
                            {"upsilon(u,u)", Specialization::delta},
                            {"upsilon(u,1)", Specialization::omega}};
  std::string stars;
  bool any = false;
  for (const auto& col : columns) {
    bool distinct = col.spec == Specialization::none
                        ? !(x.value == y.value)
                        : !(specialize(x, col.spec).value == specialize(y, col.spec).value);
    out << col.label << " distinct: " << yes_no(distinct) << "\n";
    stars += stars.empty() ? "" : " ";
    stars += distinct ? "*" : "-";
    any = any || distinct;
  }
  out << "stars: " << stars << "\n";
  out << "verdict: " << (any ? "Homflypt equal, Upsilon distinct" : "not distinguished") << "\n";
}

int cmd_selfcheck(const RunConfig& cfg, std::ostream& out) {
  if (cfg.strands < 2 || cfg.strands > 6) throw ValidationError("--strands must be between 2 and 6");
  if (cfg.trials < 1) throw ValidationError("--trials must be positive");
  std::vector<NamedSuite> chosen;
  for (const auto& s : selfcheck_suites()) {
    if (cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), s.name) != cfg.suites.end()) {
      chosen.push_back(s);
    }
  }
  for (const auto& name : cfg.suites) {
    const auto& all = selfcheck_suites();
    if (std::none_of(all.begin(), all.end(), [&](const NamedSuite& s) { return name == s.name; })) {
      throw ValidationError("unknown suite '" + name + "'");
    }
  }
  SelfcheckOptions options{cfg.seed, cfg.strands, cfg.trials};
  out << "seed: " << cfg.seed << "  strands: " << cfg.strands << "  trials: " << cfg.trials << "\n";
  bool all_passed = true;
  for (const auto& s : chosen) {
    SuiteResult r = s.run(options);
    all_passed = all_passed && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks)\n";
    if (!r.passed || cfg.verbose) {
      std::istringstream lines(r.detail);
      for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
    }
  }
  out << "selfcheck: " << (all_passed ? "PASS" : "FAIL") << "\n";
  return all_passed ? kExitOk : kExitSelfcheck;
}

void cmd_graph(const RunConfig& cfg, std::ostream& out) {
  bool first = true;
  for (const auto& path : cfg.files) {
    TiedBraidWord w = load(path);
    LinkingData data = linking_data(w);
    if (!first) out << "\n";
    first = false;
    out << "name: " << w.name << "\n"
        << "strands: " << w.strands << "\n"
        << "components: " << data.components << "\n"
        << "component-of-strand:";
    for (int c : data.component_of_strand) out << " " << c + 1;
    out << "\nlinking:\n";
    for (const auto& row : data.linking) {
      out << " ";
      for (long l : row) out << " " << l;
      out << "\n";
    }
    out << "classes: " << data.classes.render() << "\n"
        << "class-vertices: " << data.class_graph.vertices << "\n"
        << "edges:";
    if (data.class_graph.edges.empty()) out << " none";
    for (const auto& e : data.class_graph.edges) {
      out << " (" << e.from + 1 << "," << e.to + 1 << "," << e.weight << ")";
    }
    out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Invariants of classical and tied links from the algebra of braids and ties", "btinv"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", cfg.output, "Write results to this file instead of stdout");

  auto* compute = app.add_subcommand("compute", "Compute an invariant of each input link");
  compute->add_option("files", cfg.files, "Link files")->required();
  compute->add_option("--invariant", cfg.invariant, "upsilon, delta, theta, omega or homflypt")
      ->capture_default_str();
  compute->add_flag("--fast", cfg.fast, "Use the c-linking graph formula (omega only)");
  compute->add_flag("--theta-q", cfg.theta_q, "Write theta in q with v = q - 1/q + 1");

  auto* compare = app.add_subcommand("compare", "Compare two classical links");
  compare->add_option("files", cfg.files, "Two link files")->required()->expected(2);

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the randomized self-check suites");
  selfcheck->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  selfcheck->add_option("--strands", cfg.strands, "Largest strand count")->capture_default_str();
  selfcheck->add_option("--trials", cfg.trials, "Random trials per suite")->capture_default_str();
  selfcheck->add_option("--suite", cfg.suites, "Run only these suites");
  selfcheck->add_flag("--verbose", cfg.verbose, "Print suite details");

  auto* graph = app.add_subcommand("graph", "Print linking data and the c-linking graph");
  graph->add_option("files", cfg.files, "Link files")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "btinv: " << e.what() << "\n";
    return kExitParse;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (compute->parsed()) cmd_compute(cfg, buffer);
    if (compare->parsed()) cmd_compare(cfg, buffer);
    if (selfcheck->parsed()) code = cmd_selfcheck(cfg, buffer);
    if (graph->parsed()) cmd_graph(cfg, buffer);
  } catch (const InputError& e) {
    err << "btinv: " << e.what() << "\n";
    return kExitParse;
  } catch (const ParseError& e) {
    err << "btinv: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "btinv: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "btinv: " << e.what() << "\n";
    return kExitValidation;
  }

  if (cfg.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(cfg.output);
    if (!file || !(file << buffer.str())) {
      err << "btinv: cannot write " << cfg.output << "\n";
      return kExitValidation;
    }
  }
  return code;
}

}  // namespace btinv
