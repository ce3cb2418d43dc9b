#include <doctest.h>

#include <filesystem>
#include <random>

#include "btinv/markov.hpp"
#include "btinv/tiedbraid.hpp"
#include "support/oracles.hpp"

using namespace btinv;

namespace {

TiedBraidWord word(int n, const std::string& letters, const std::string& ties = "") {
  std::string text = "strands: " + std::to_string(n) + "\nword: " + letters + "\n";
  if (!ties.empty()) text += "ties: " + ties + "\n";
  return parse_word(text);
}

TiedBraidWord corpus(const std::string& name) {
  return read_word_file(std::string(BTINV_DATA_DIR) + "/" + name + ".link");
}

}  // namespace

TEST_SUITE("tiedbraid") {
  TEST_CASE("parsing") {
    TiedBraidWord w = word(2, "s1 s1");
    CHECK(w.strands == 2);
    CHECK(w.letters == std::vector<Letter>{Letter::sig(1), Letter::sig(1)});

    w = word(3, "s1 s2^-1 e1");
    CHECK(w.letters == std::vector<Letter>{Letter::sig(1), Letter::sig(2, -1), Letter::tie(1)});
    CHECK(w.has_ties());
    CHECK(w.exponent_sum() == 0);

    w = parse_word("# comment\nname: demo\nstrands: 3\nword: \nties: {1,3}\n");
    CHECK(w.name == "demo");
    CHECK(w.letters.empty());
    REQUIRE(w.top_ties);
    CHECK(w.top_ties->render() == "{1,3}{2}");
  }

  TEST_CASE("render round-trips") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
      TiedBraidWord w = random_word(1 + t % 5, static_cast<std::size_t>(t % 9), rng);
      if (t % 3 == 0 && w.strands > 1) w.top_ties = SetPartition(w.strands).join_pair(0, w.strands - 1);
      REQUIRE(parse_word(w.render()) == w);
    }
  }

  TEST_CASE("parse errors") {
    auto error_of = [](const std::string& text) -> std::string {
      try {
        parse_word(text);
      } catch (const ParseError& e) {
        return e.what();
      }
      return "";
    };
    CHECK(error_of("strands: 2\nword: s5\n").find("index out of range") != std::string::npos);
    CHECK(error_of("strands: 2\nword: s5\n").find("line 2") != std::string::npos);
    CHECK(error_of("strands: 2\nword: s1  s1\n").find("empty token") != std::string::npos);
    CHECK(error_of("strands: 2\nword: x1\n").find("malformed token") != std::string::npos);
    CHECK(error_of("strands: 2\nword: s1^2\n") != "");
    CHECK(error_of("strands: 0\nword: \n") != "");
    CHECK(error_of("word: s1\n").find("strands") != std::string::npos);
    CHECK(error_of("strands: 2\n").find("word") != std::string::npos);
    CHECK(error_of("strands: 3\nword: \nties: {1,2}{2,3}\n").find("disjoint") != std::string::npos);
    CHECK(error_of("strands: 2\nword: \nties: {1,4}\n").find("out of range") != std::string::npos);
    CHECK(error_of("strands: 2\nword: s1\ncolour: red\n").find("unknown key") != std::string::npos);
    CHECK_THROWS_AS(read_word_file("/nonexistent/file.link"), ParseError);

    TiedBraidWord bad;
    bad.strands = 2;
    bad.letters = {Letter::sig(3)};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
  }

  TEST_CASE("components") {
    CHECK(closure_components(word(2, "")).components == 2);
    CHECK(closure_components(word(2, "s1 s1")).components == 2);
    CHECK(closure_components(word(2, "s1")).components == 1);
    CHECK(closure_components(word(3, "s1 s2 s1 s2 s1 s2")).components == 3);
    CHECK(closure_components(word(3, "s1 s2")).components == 1);
  }

  TEST_CASE("linking numbers") {
    CHECK(linking_matrix(word(2, "s1 s1"))[0][1] == 1);
    CHECK(linking_matrix(word(2, "s1 s1 s1 s1"))[0][1] == 2);
    CHECK(linking_matrix(word(2, "s1^-1 s1^-1"))[0][1] == -1);
    auto full = linking_matrix(word(3, "s1 s2 s1 s2 s1 s2"));
    CHECK(full == std::vector<std::vector<long>>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  }

  TEST_CASE("linking numbers agree with strand tracking") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 300; ++t) {
      TiedBraidWord w = random_word(1 + t % 5, static_cast<std::size_t>(t % 13), rng, 0.2);
      REQUIRE(linking_matrix(w) == oracle::naive_linking(w));
    }
  }

  TEST_CASE("classes") {
    LinkingData tied = linking_data(word(2, "", "{1,2}"));
    CHECK(tied.class_count() == 1);
    LinkingData hopf = linking_data(word(2, "s1 s1"));
    CHECK(hopf.classes.render() == "{1}{2}");
    // a tie between strands of one component adds nothing
    CHECK(linking_data(word(2, "s1 e1")).class_count() == 1);
  }

  TEST_CASE("c-linking graphs") {
    CLinkingGraph triangle = clinking_graph(word(3, "s1 s2 s1 s2 s1 s2"));
    CHECK(triangle.vertices == 3);
    CHECK(triangle.edges == std::vector<GraphEdge>{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    CHECK(triangle.is_connected());

    CLinkingGraph unlink = clinking_graph(word(2, ""));
    CHECK(unlink.vertices == 2);
    CHECK(unlink.edges.empty());
    CHECK_FALSE(unlink.is_connected());

    // lk(1,2) = lk(2,3) = 1, lk(1,3) = 0, classes {1,3}{2}
    LinkingData chain = linking_data(corpus("tied_chain"));
    CHECK(chain.components == 3);
    CHECK(chain.linking == std::vector<std::vector<long>>{{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
    CHECK(chain.classes.render() == "{1,3}{2}");
    CHECK(chain.class_graph.edges == std::vector<GraphEdge>{{0, 1, 2}});
    CHECK(chain.class_linking(0, 1) == 2);
  }

  TEST_CASE("tie_all") {
    TiedBraidWord hopf = word(2, "s1 s1");
    TiedBraidWord tied = tie_all(hopf);
    CHECK(tied.letters == hopf.letters);
    CHECK(linking_data(tied).class_count() == 1);
    CHECK(clinking_graph(tied).vertices == 1);
    CHECK(linking_data(tie_all(word(1, ""))).components == 1);
    CHECK(linking_data(tie_all(word(2, ""))).class_count() == 1);
  }

  TEST_CASE("corpus files load") {
    int count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(BTINV_DATA_DIR)) {
      if (entry.path().extension() != ".link") continue;
      TiedBraidWord w = read_word_file(entry.path().string());
      CHECK_NOTHROW(w.validate());
      CHECK(parse_word(w.render()) == w);
      ++count;
    }
    CHECK(count >= 10);
  }

  TEST_CASE("split and linked corpus entries") {
    // Whitehead link: not split, yet its c-linking graph has no edge
    CLinkingGraph lk0 = clinking_graph(corpus("lk0_two_component"));
    CHECK(lk0.vertices == 2);
    CHECK(lk0.edges.empty());
    CHECK(clinking_graph(corpus("hopf")).is_connected());
    CHECK_FALSE(clinking_graph(corpus("hopf_split_unknot")).is_connected());
  }
}
