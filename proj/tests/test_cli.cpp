#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "btinv/cli.hpp"

using namespace btinv;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "btinv");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BTINV_DATA_DIR) + "/" + name + ".link"; }

std::string value_line(const std::string& text) {
  auto at = text.find("value: ");
  return text.substr(at, text.find('\n', at) - at);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compute") {
    Run r = run({"compute", data("unknot")});
    CHECK(r.code == kExitOk);
    CHECK(r.err.empty());
    CHECK(r.out.find("value: even: (1)/(1) ; odd: (0)/(1)") != std::string::npos);
    CHECK(r.out.find("components: 1") != std::string::npos);

    r = run({"compute", data("unlink2")});
    CHECK(r.code == kExitOk);
    CHECK(value_line(r.out).find("even: (0)/(1) ; odd: (") != std::string::npos);

    r = run({"compute", "--invariant", "omega", "--fast", data("full_twist")});
    CHECK(r.code == kExitOk);
    CHECK(value_line(r.out) == "value: even: (u^3*b^2 - 3*u*b^2 + 3*u*b + 2*b^2 - 3*b + 1)/(u^2*a^2) ; odd: (0)/(1)");
    CHECK(r.out.find("engine: omega-graph") != std::string::npos);
  }

  TEST_CASE("omega engines agree on the corpus") {
    for (const auto& entry : std::filesystem::directory_iterator(BTINV_DATA_DIR)) {
      if (entry.path().extension() != ".link") continue;
      Run slow = run({"compute", "--invariant", "omega", entry.path().string()});
      Run fast = run({"compute", "--invariant", "omega", "--fast", entry.path().string()});
      REQUIRE(slow.code == kExitOk);
      REQUIRE(fast.code == kExitOk);
      CHECK(value_line(slow.out) == value_line(fast.out));
    }
  }

  TEST_CASE("several files and specializations") {
    Run r = run({"compute", "--invariant", "delta", data("hopf"), data("trefoil")});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("name: hopf") < r.out.find("name: trefoil"));
    CHECK(run({"compute", "--invariant", "theta", "--theta-q", data("hopf")}).out.find("q") != std::string::npos);
    CHECK(run({"compute", "--invariant", "homflypt", data("trefoil")}).code == kExitOk);
  }

  TEST_CASE("compare") {
    Run same = run({"compare", data("hopf"), data("hopf_conjugated")});
    CHECK(same.code == kExitOk);
    CHECK(same.out.find("homflypt-equal: yes") != std::string::npos);
    CHECK(same.out.find("stars: - - - -") != std::string::npos);
    CHECK(same.out.find("verdict: not distinguished") != std::string::npos);

    Run different = run({"compare", data("unknot"), data("trefoil")});
    CHECK(different.code == kExitOk);
    CHECK(different.out.find("homflypt-equal: no") != std::string::npos);
    CHECK(different.out.find("stars:") == std::string::npos);
  }

  TEST_CASE("graph") {
    Run hopf = run({"graph", data("hopf")});
    CHECK(hopf.code == kExitOk);
    CHECK(hopf.out.find("components: 2") != std::string::npos);
    CHECK(hopf.out.find("edges: (1,2,1)") != std::string::npos);
    CHECK(run({"graph", data("tied_chain")}).out.find("edges: (1,2,2)") != std::string::npos);
    Run unlink = run({"graph", data("unlink2")});
    CHECK(unlink.out.find("class-vertices: 2") != std::string::npos);
    CHECK(unlink.out.find("edges: none") != std::string::npos);
  }

  TEST_CASE("selfcheck") {
    Run r = run({"selfcheck", "--trials", "20", "--strands", "3", "--suite", "relations", "--suite", "omega-agreement"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("PASS relations") != std::string::npos);
    CHECK(r.out.find("selfcheck: PASS") != std::string::npos);
    Run other = run({"selfcheck", "--seed", "7", "--trials", "20", "--strands", "3", "--suite", "relations"});
    CHECK(other.code == kExitOk);
    CHECK(run({"selfcheck", "--suite", "nonsense"}).code == kExitValidation);
    CHECK(run({"selfcheck", "--strands", "9"}).code == kExitValidation);
  }

  TEST_CASE("exit codes") {
    CHECK(run({}).code == kExitParse);
    CHECK(run({"frobnicate"}).code == kExitParse);
    CHECK(run({"compute"}).code == kExitParse);
    CHECK(run({"compute", "/nonexistent.link"}).code == kExitParse);
    CHECK(run({"compute", "--invariant", "jones", data("hopf")}).code == kExitValidation);
    CHECK(run({"compute", "--fast", data("hopf")}).code == kExitValidation);
    CHECK(run({"compute", "--invariant", "homflypt", data("hopf_tied")}).code == kExitValidation);
    CHECK(run({"compare", data("hopf")}).code == kExitParse);
    CHECK(run({"compare", data("hopf"), data("hopf_tied")}).code == kExitValidation);
    CHECK(run({"selfcheck", "--seed", "abc"}).code == kExitParse);

    Run bad = run({"compute", "/nonexistent.link"});
    CHECK(bad.out.empty());
    CHECK(bad.err.find("/nonexistent.link") != std::string::npos);
  }

  TEST_CASE("malformed input file") {
    auto path = std::filesystem::temp_directory_path() / "btinv_bad.link";
    std::ofstream(path) << "strands: 2\nword: s7\n";
    Run r = run({"compute", path.string()});
    CHECK(r.code == kExitParse);
    CHECK(r.err.find("line 2") != std::string::npos);
    std::filesystem::remove(path);
  }

  TEST_CASE("output is deterministic and can go to a file") {
    Run first = run({"compute", data("trefoil"), data("tied_chain")});
    Run second = run({"compute", data("trefoil"), data("tied_chain")});
    CHECK(first.out == second.out);

    auto path = std::filesystem::temp_directory_path() / "btinv_out.txt";
    Run to_file = run({"--output", path.string(), "compute", data("trefoil"), data("tied_chain")});
    CHECK(to_file.code == kExitOk);
    CHECK(to_file.out.empty());
    std::ifstream in(path);
    std::stringstream contents;
    contents << in.rdbuf();
    CHECK(contents.str() == first.out);
    std::filesystem::remove(path);
  }
}
