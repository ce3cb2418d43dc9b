#include <doctest.h>

#include <algorithm>
#include <random>

#include "btinv/markov.hpp"
#include "btinv/omega.hpp"
#include "support/oracles.hpp"

using namespace btinv;
using oracle::A;
using oracle::B;
using oracle::one;
using oracle::U;

namespace {

TiedBraidWord word(int n, const std::string& letters, const std::string& ties = "") {
  std::string text = "strands: " + std::to_string(n) + "\nword: " + letters + "\n";
  if (!ties.empty()) text += "ties: " + ties + "\n";
  return parse_word(text);
}

TiedBraidWord corpus(const std::string& name) {
  return read_word_file(std::string(BTINV_DATA_DIR) + "/" + name + ".link");
}

Scalar rational(const Frac& f) { return Scalar::rational(f, omega_radicand()); }

const Frac triangle_polynomial() {
  const Frac u = U(), b = B();
  return (one() + Frac(3) * b * u - Frac(3) * b - Frac(3) * b * b * u + Frac(2) * b * b + b * b * u.pow(3)) /
         (A().pow(2) * u.pow(2));
}

}  // namespace

TEST_SUITE("omega") {
  TEST_CASE("square root of u") {
    CHECK(sqrt_u() * sqrt_u() == rational(U()));
    CHECK(sqrt_u() == oracle::sqrt_u_power(1));
  }

  TEST_CASE("worked examples") {
    CHECK(omega_fast(word(1, "")).value == rational(one()));
    CHECK(omega_fast(word(2, "s1 s1 s1")).value == rational(one()));

    OmegaSummary triangle = omega_fast(word(3, "s1 s2 s1 s2 s1 s2"));
    CHECK(triangle.m == 3);
    CHECK(triangle.k == 3);
    CHECK(triangle.p == 3);
    CHECK(triangle.value == rational(triangle_polynomial()));

    // (sqrt(u)/a)^2 (u^-2 b + (1 - u^-2) b^2)
    OmegaSummary chain = omega_fast(corpus("tied_chain"));
    CHECK(chain.k == 2);
    CHECK(chain.p == 1);
    CHECK(chain.value == rational(U() / A().pow(2) * (U().pow(-2) * B() + (one() - U().pow(-2)) * B() * B())));
  }

  TEST_CASE("all-tied unlinks") {
    for (int m = 1; m <= 5; ++m) {
      TiedBraidWord w = word(m, "");
      w.top_ties = SetPartition::full(m);
      Scalar expected = rational(one());
      for (int i = 1; i < m; ++i) expected *= sqrt_u() * rational(B() / A());
      CHECK(omega_fast(w).value == expected);
    }
  }

  TEST_CASE("exponents") {
    OmegaExponents unknot = omega_exponents(omega_fast(word(1, "")));
    CHECK(unknot.r == 0);
    CHECK(unknot.s_b == 0);
    CHECK(unknot.inferred_m == 1);
    CHECK(unknot.inferred_k == 1);

    OmegaExponents triangle = omega_exponents(omega_fast(word(3, "s1 s2 s1 s2 s1 s2")));
    CHECK(triangle.r == -2);
    CHECK(triangle.s_b == 0);
    CHECK(triangle.inferred_m == 3);
    CHECK(triangle.inferred_k == 3);

    OmegaExponents tied = omega_exponents(omega_fast(word(3, "", "{1,2,3}")));
    CHECK(tied.r == -2);
    CHECK(tied.s_b == 2);
    CHECK(tied.inferred_m == 3);
    CHECK(tied.inferred_k == 1);

    CHECK_THROWS_AS(omega_exponents(rational(A() + one())), StructureError);
    CHECK_THROWS_AS(omega_exponents(rational(Frac())), StructureError);
  }

  TEST_CASE("graph formula agrees with the trace engine") {
    std::mt19937_64 rng(42);
    Evaluator at_v1(Specialization::omega);
    for (int t = 0; t < 100; ++t) {
      TiedBraidWord w = random_word(1 + t % 4, static_cast<std::size_t>(t % 11), rng);
      REQUIRE(omega_fast(w).value == at_v1.upsilon(w));
    }
  }

  TEST_CASE("graph formula agrees with the recursive skein in any edge order") {
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> weight(-3, 3);
    for (int t = 0; t < 60; ++t) {
      const int k = 1 + t % 4, m = k + t % 2;
      CLinkingGraph g;
      g.vertices = k;
      for (int x = 0; x < k; ++x) {
        for (int y = x + 1; y < k; ++y) {
          long l = weight(rng);
          if (l != 0) g.edges.push_back({x, y, l});
        }
      }
      const Scalar fast = omega_from_graph(m, g).value;
      std::vector<GraphEdge> edges = g.edges;
      for (int shuffle = 0; shuffle < 3; ++shuffle) {
        std::shuffle(edges.begin(), edges.end(), rng);
        REQUIRE(oracle::omega_by_skein(m, k, edges) == fast);
      }
    }
  }

  TEST_CASE("equal graphs give equal values") {
    TiedBraidWord unlink = corpus("unlink2"), lk0 = corpus("lk0_two_component");
    CHECK(linking_data(unlink).components == linking_data(lk0).components);
    CHECK(clinking_graph(unlink) == clinking_graph(lk0));
    CHECK(omega_fast(unlink).value == omega_fast(lk0).value);
    Evaluator at_v1(Specialization::omega);
    CHECK(at_v1.upsilon(unlink) == at_v1.upsilon(lk0));
    // the generic invariant still tells them apart
    CHECK_FALSE(upsilon(unlink).value == upsilon(lk0).value);
  }

  TEST_CASE("skein rules at the Hopf crossing") {
    SkeinChecker checker;
    TiedBraidWord hopf = word(2, "s1 s1");
    for (SkeinRule r : kAllSkeinRules) {
      INFO(skein_rule_name(r));
      CHECK(checker.check(hopf, 0, r));
      CHECK(checker.check(hopf, 1, r));
    }
    CHECK(skein_check(word(2, "e1 s1 s1"), 1, SkeinRule::qp));
    CHECK_THROWS_AS(checker.check(word(2, "e1 s1"), 0, SkeinRule::III), ValidationError);
  }

  TEST_CASE("skein diagrams") {
    SkeinDiagrams d = skein_diagrams(word(3, "s2 s1^-1 s2"), 1);
    CHECK(d.plus == word(3, "s2 s1 s2"));
    CHECK(d.minus == word(3, "s2 s1^-1 s2"));
    CHECK(d.tied == word(3, "s2 e1 s2"));
    CHECK(d.plus_tied == word(3, "s2 e1 s1 s2"));
    CHECK(d.minus_tied == word(3, "s2 e1 s1^-1 s2"));
  }

  TEST_CASE("skein rules on random words") {
    std::mt19937_64 rng(31);
    SkeinChecker checker;
    for (int t = 0; t < 40; ++t) {
      TiedBraidWord w = random_word(2 + t % 2, 5, rng);
      for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
        if (!w.letters[pos].is_sig()) continue;
        for (SkeinRule r : {SkeinRule::III, SkeinRule::IV, SkeinRule::Va, SkeinRule::Vb, SkeinRule::omegaIV,
                            SkeinRule::qp}) {
          REQUIRE(checker.check(w, pos, r));
        }
      }
    }
  }

  TEST_CASE("skein rules at every corpus crossing") {
    SkeinChecker checker;
    for (const char* name : {"hopf", "trefoil", "figure_eight", "tied_chain", "hopf_tied", "lk0_two_component"}) {
      TiedBraidWord w = corpus(name);
      for (std::size_t pos = 0; pos < w.letters.size(); ++pos) {
        if (!w.letters[pos].is_sig()) continue;
        for (SkeinRule r : kAllSkeinRules) {
          INFO(name << " " << pos << " " << skein_rule_name(r));
          CHECK(checker.check(w, pos, r));
        }
      }
    }
  }

  TEST_CASE("rule names") {
    for (SkeinRule r : kAllSkeinRules) CHECK(parse_skein_rule(skein_rule_name(r)) == r);
    CHECK_THROWS_AS(parse_skein_rule("VI"), ValidationError);
  }
}
