#include "btinv/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "btinv/markov.hpp"
#include "btinv/omega.hpp"
#include "btinv/relations.hpp"

namespace btinv {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

void fail(SuiteResult& r, const std::string& what) {
  if (r.passed) r.detail += what + "\n";
  r.passed = false;
}

SuiteResult from_reports(const char* name, const std::vector<std::pair<int, RelationReport>>& reports) {
  SuiteResult r{name, true, 0, {}};
  std::ostringstream detail;
  for (const auto& [n, report] : reports) {
    for (const auto& res : report.results) r.checks += res.instances;
    if (!report.passed()) r.passed = false;
    std::istringstream lines(report.render());
    for (std::string line; std::getline(lines, line);) detail << "n=" << n << " " << line << "\n";
  }
  r.detail = detail.str();
  return r;
}

// Random tied word: n strands, up to max_len letters, sometimes top ties.
TiedBraidWord random_tied_word(int n, int max_len, std::mt19937_64& rng) {
  TiedBraidWord w = random_word(n, static_cast<std::size_t>(uniform(rng, 0, max_len)), rng, 0.25);
  if (n >= 2 && uniform(rng, 0, 3) == 0) {
    SetPartition p(n);
    p = p.join_pair(uniform(rng, 0, n - 1), uniform(rng, 0, n - 1));
    w.top_ties = p;
  }
  return w;
}

}  // namespace

SuiteResult suite_relations(const SelfcheckOptions& options) {
  std::vector<std::pair<int, RelationReport>> reports;
  for (int n = 2; n <= std::min(options.strands, 4); ++n) {
    reports.emplace_back(n, check_relations({n, options.seed + static_cast<std::uint64_t>(n), options.trials}));
  }
  return from_reports("relations", reports);
}

SuiteResult suite_isomorphism(const SelfcheckOptions& options) {
  std::vector<std::pair<int, RelationReport>> reports;
  for (int n = 2; n <= std::min(options.strands, 4); ++n) {
    reports.emplace_back(n, check_isomorphism({n, options.seed + static_cast<std::uint64_t>(n), options.trials}));
  }
  return from_reports("isomorphism", reports);
}

SuiteResult suite_trace_rules(const SelfcheckOptions& options) {
  SuiteResult r{"trace-rules", true, 0, {}};
  std::mt19937_64 rng(options.seed);
  TraceEngine engine;
  const Algebra& alg = engine.algebra();
  const Frac a = engine.a(), b = engine.b();
  ++r.checks;
  if (!(engine.trace(Elem::one(1)) == Frac(1))) fail(r, "rho(1) != 1");
  const int top = std::max(2, std::min(options.strands, 4));
  for (int t = 0; t < options.trials; ++t) {
    const int n = uniform(rng, 2, top);
    Elem x = random_element(n, rng), y = random_element(n, rng);
    r.checks += 4;
    if (!(engine.trace(alg.mul(x, y)) == engine.trace(alg.mul(y, x)))) {
      fail(r, "rho(XY) != rho(YX) for X=" + x.render() + " Y=" + y.render());
    }
    const Frac rho_x = engine.trace(x);
    Elem up = x.extended(n + 1);
    Elem with_r = alg.mul_R(up, n);
    if (!(engine.trace(with_r) == a * rho_x)) fail(r, "rho(X R_n) != a rho(X) for X=" + x.render());
    if (!(engine.trace(alg.mul_E(with_r, n)) == a * rho_x)) fail(r, "rho(X R_n E_n) != a rho(X) for X=" + x.render());
    if (!(engine.trace(alg.mul_E(up, n)) == b * rho_x)) fail(r, "rho(X E_n) != b rho(X) for X=" + x.render());
  }
  return r;
}

SuiteResult suite_markov(const SelfcheckOptions& options) {
  SuiteResult r{"markov", true, 0, {}};
  std::mt19937_64 rng(options.seed);
  Evaluator ev;
  const int top = std::max(1, std::min(options.strands, 4));
  FuzzLimits limits{std::min(top + 1, 5), 12};
  std::map<std::string, int> coverage;
  for (int t = 0; t < options.trials; ++t) {
    TiedBraidWord w = random_tied_word(uniform(rng, 1, top), 10, rng);
    const Scalar base = ev.upsilon(w);
    TiedBraidWord cur = w;
    std::string path;
    for (int k = uniform(rng, 1, 6); k > 0; --k) {
      Move m = random_move(cur, rng, limits);
      cur = markov_move(cur, m);
      path += " " + m.render();
      ++coverage[m.kind == Move::Kind::relation ? relation_name(m.relation) : m.render().substr(0, m.render().find('('))];
    }
    ++r.checks;
    if (!(ev.upsilon(cur) == base)) fail(r, "value changed: " + w.render() + " via" + path);
  }
  // Every relation, planted in a random context and rewritten both ways.
  for (Relation rel : kAllRelations) {
    for (int t = 0; t < std::max(1, options.trials / 10); ++t) {
      const int n = uniform(rng, 3, std::max(3, top));
      int i = uniform(rng, 1, n - 1), j = uniform(rng, 1, n - 1);
      if (!relation_applies(rel, i, j, n)) {
        // adjacent or far partner for two-index relations
        j = (i + 1 <= n - 1) ? i + 1 : i - 1;
        if (!relation_applies(rel, i, j, n)) j = (i + 2 <= n - 1) ? i + 2 : i - 2;
        if (!relation_applies(rel, i, j, n)) continue;
      }
      const int variant = uniform(rng, 0, relation_variants(rel) - 1);
      TiedBraidWord w = random_tied_word(n, 4, rng);
      auto lhs = relation_side(rel, i, j, true, variant);
      const std::size_t pos = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(w.letters.size())));
      w.letters.insert(w.letters.begin() + static_cast<std::ptrdiff_t>(pos), lhs.begin(), lhs.end());
      TiedBraidWord rewritten = markov_move(w, Move::rewrite(rel, pos, true, variant));
      // The free relation is undone by pair insertion instead.
      Move undo = rel == Relation::free ? Move::insert_pair(pos, i, variant == 0 ? 1 : -1)
                                        : Move::rewrite(rel, pos, false, variant);
      TiedBraidWord back = markov_move(rewritten, undo);
      ++coverage[std::string(relation_name(rel)) + "*"];
      r.checks += 2;
      if (!(back == w)) fail(r, std::string("rewrite not reversible for ") + relation_name(rel));
      if (!(ev.upsilon(rewritten) == ev.upsilon(w))) {
        fail(r, std::string("value changed by ") + relation_name(rel) + " on " + w.render());
      }
    }
  }
  std::ostringstream cov;
  cov << "moves:";
  for (const auto& [k, v] : coverage) cov << " " << k << "=" << v;
  r.detail += cov.str() + "\n";
  return r;
}

SuiteResult suite_skein(const SelfcheckOptions& options) {
  SuiteResult r{"skein", true, 0, {}};
  std::mt19937_64 rng(options.seed);
  SkeinChecker checker;
  const int top = std::max(2, std::min(options.strands, 4));
  for (int t = 0; t < options.trials; ++t) {
    TiedBraidWord w = random_tied_word(uniform(rng, 2, top), 8, rng);
    for (SkeinRule rule : kAllSkeinRules) {
      if (!is_crossing_rule(rule)) {
        ++r.checks;
        if (!checker.check(w, 0, rule)) fail(r, std::string("rule ") + skein_rule_name(rule) + " fails on " + w.render());
        continue;
      }
      for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
        if (!w.letters[pos].is_sig()) continue;
        ++r.checks;
        if (!checker.check(w, pos, rule)) {
          fail(r, std::string("rule ") + skein_rule_name(rule) + " fails at " + std::to_string(pos) + " of " +
                      w.render());
        }
      }
    }
  }
  return r;
}

SuiteResult suite_omega_agreement(const SelfcheckOptions& options) {
  SuiteResult r{"omega-agreement", true, 0, {}};
  std::mt19937_64 rng(options.seed);
  Evaluator at_v1(Specialization::omega);
  const int top = std::max(1, std::min(options.strands, 4));
  for (int t = 0; t < options.trials; ++t) {
    TiedBraidWord w = random_tied_word(uniform(rng, 1, top), 10, rng);
    ++r.checks;
    if (!(omega_fast(w).value == at_v1.upsilon(w))) fail(r, "graph formula disagrees on " + w.render());
  }
  return r;
}

SuiteResult suite_omega_structure(const SelfcheckOptions& options) {
  SuiteResult r{"omega-structure", true, 0, {}};
  std::mt19937_64 rng(options.seed);
  Evaluator at_v1(Specialization::omega);
  const int top = std::max(2, std::min(options.strands, 4));

  // Knots: value 1.
  int knots = 0;
  for (int attempt = 0; knots < std::max(20, options.trials / 10) && attempt < 100 * options.trials; ++attempt) {
    TiedBraidWord w = random_tied_word(uniform(rng, 1, top), 10, rng);
    if (w.permutation().cycle_count() != 1) continue;
    ++knots;
    ++r.checks;
    if (!(at_v1.upsilon(w) == Scalar::rational(Frac(1), omega_radicand()))) fail(r, "knot value is not 1: " + w.render());
  }

  // All-tied unlinks: (b sqrt(u)/a)^{m-1}.
  const Frac a = Frac::var(Var::a), b = Frac::var(Var::b);
  for (int m = 1; m <= 5; ++m) {
    TiedBraidWord w;
    w.strands = m;
    w.top_ties = SetPartition::full(m);
    Scalar expected = Scalar::rational(Frac(1), omega_radicand());
    for (int k = 1; k < m; ++k) expected *= sqrt_u() * (b / a);
    ++r.checks;
    if (!(at_v1.upsilon(w) == expected)) fail(r, "all-tied unlink with " + std::to_string(m) + " circles");
  }

  // Exponent laws on random tied words.
  for (int t = 0; t < options.trials; ++t) {
    TiedBraidWord w = random_tied_word(uniform(rng, 1, top), 10, rng);
    LinkingData data = linking_data(w);
    OmegaExponents e = omega_exponents(at_v1.upsilon(w));
    ++r.checks;
    if (e.inferred_m != data.components || e.inferred_k != data.class_count()) {
      fail(r, "exponent laws fail on " + w.render());
    }
    if (!w.has_ties() && e.s_b != 0) fail(r, "classical word with b-free term missing: " + w.render());
  }
  return r;
}

const std::vector<NamedSuite>& selfcheck_suites() {
  static const std::vector<NamedSuite> suites = {
      {"relations", suite_relations},         {"isomorphism", suite_isomorphism},
      {"trace-rules", suite_trace_rules},     {"markov", suite_markov},
      {"skein", suite_skein},                 {"omega-agreement", suite_omega_agreement},
      {"omega-structure", suite_omega_structure},
  };
  return suites;
}

}  // namespace btinv
