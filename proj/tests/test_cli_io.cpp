#include "doctest.h"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "conrad/cli_io.hpp"
#include "conrad/loopless_congruence.hpp"
#include "conrad/theorems.hpp"

using namespace conrad;

namespace {

  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::UsageError;
  }

  int line_of(auto&& fn) {
    try {
      fn();
    } catch (ParseError const& e) {
      return e.line();
    }
    FAIL("no parse error thrown");
    return -1;
  }

  // A file under the temporary directory, removed on destruction.
  class TempFile {
   public:
    explicit TempFile(std::string const& contents) {
      static std::atomic<int> counter{0};
      _path = std::filesystem::temp_directory_path()
              / ("conrad-test-" + std::to_string(::getpid()) + "-"
                 + std::to_string(counter++) + ".txt");
      std::ofstream(_path) << contents;
    }
    ~TempFile() {
      std::filesystem::remove(_path);
    }
    TempFile(TempFile const&)            = delete;
    TempFile& operator=(TempFile const&) = delete;

    [[nodiscard]] std::string path() const {
      return _path.string();
    }

   private:
    std::filesystem::path _path;
  };

  CommandOutcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "conrad");
    return run_command(args);
  }

  int count_lines_starting(std::string const& text, std::string const& prefix) {
    int  n = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
      auto end = text.find('\n', pos);
      if (text.compare(pos, prefix.size(), prefix) == 0) {
        ++n;
      }
      pos = end == std::string::npos ? text.size() : end + 1;
    }
    return n;
  }

}  // namespace

TEST_CASE("parse_structure") {
  CHECK(std::get<FiniteGraph>(parse_structure("graph 2 loops\ne 0 0\ne 1 1"))
        == named::B(4));
  CHECK(std::get<FiniteSpace>(parse_structure("space 2\nopen -\nopen 0\nopen 0,1"))
        == named::S2());
  CHECK(parse_graph("# a path\ngraph 3 noloops   \n\ne 0 1 # first\ne 1 2\n")
        == named::path(3));
  CHECK(parse_space("space 2\nopen -\nopen 0, 1\n") == named::I2());
  CHECK(code_of([] { parse_structure("graph 2 noloops\ne 0 0"); })
        == ErrorCode::SemanticError);
  CHECK(line_of([] { parse_structure("graph 2 noloops\ne 0 0"); }) == 2);
  CHECK(code_of([] { parse_structure("space 2\nopen -\nopen 0\nopen 1"); })
        == ErrorCode::SemanticError);
  CHECK(code_of([] { parse_structure("space 2\nopen 0,1\nopen 0"); })
        == ErrorCode::SemanticError);
  CHECK(code_of([] { parse_structure("graph 2 loops\ne 0 2"); })
        == ErrorCode::SemanticError);
  CHECK(code_of([] { parse_structure("graph 0 loops"); }) == ErrorCode::SemanticError);
  CHECK(code_of([] { parse_structure("space 7\nopen -"); }) == ErrorCode::SemanticError);

  CHECK(code_of([] { parse_structure(""); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_structure("tree 2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_structure("graph 2"); }) == ErrorCode::SyntaxError);
  CHECK(code_of([] { parse_structure("graph two loops"); }) == ErrorCode::SyntaxError);
  CHECK(line_of([] { parse_structure("graph 3 loops\n\n# c\ne 1 0"); }) == 4);
  CHECK(line_of([] { parse_structure("graph 3 loops\ne 0 1 2"); }) == 2);
  CHECK(line_of([] { parse_structure("graph 3 loops\nedge 0 1"); }) == 2);
  CHECK(line_of([] { parse_structure("space 2\nopen -\nopen 0,,1"); }) == 3);
  CHECK(line_of([] { parse_structure("space 2\nopen"); }) == 2);
  CHECK(code_of([] { parse_graph("space 1\nopen -\nopen 0"); })
        == ErrorCode::SemanticError);
  CHECK(code_of([] { parse_space("graph 1 loops"); }) == ErrorCode::SemanticError);
}

TEST_CASE("parse_congruence") {
  auto rho = parse_congruence("tcong\nblock 0 1\nopen -\nopen 0,1", named::D2());
  CHECK(rho == TopoCongruence{Partition::indiscrete(2), indiscrete_topology(2)});

  auto b4    = named::B(4);
  auto theta = parse_congruence("gcong\nblock 0\nblock 1\nedge 0 0\nedge 1 1\nedge 0 1", b4);
  CHECK(theta == GraphCongruence{Partition::discrete(2), b4.possible_edges()});

  CHECK(code_of([] { parse_congruence("gcong\nblock 0 1", named::K(2)); })
        == ErrorCode::IndependenceViolated);
  // Validator errors pass through unchanged.
  CHECK(code_of([] { parse_congruence("tcong\nblock 0\nblock 1\nopen -", named::D2()); })
        == ErrorCode::NotATopology);
  CHECK(code_of([] {
          parse_congruence("tcong\nblock 0\nblock 1\nopen -\nopen 1\nopen 0,1",
                           named::S2());
        })
        == ErrorCode::NotSubTopology);
  CHECK(code_of([&] { parse_congruence("gcong\nblock 0\nblock 1", b4); })
        == ErrorCode::EdgeSetOutOfRange);
  CHECK(code_of([&] {
          parse_congruence("gcong\nblock 0 1\nedge 0 0\nedge 1 1", b4);
        })
        == ErrorCode::SubstitutionViolated);

  CHECK(code_of([&] { parse_congruence("gcong\nblock 0", b4); })
        == ErrorCode::SemanticError);
  CHECK(line_of([&] { parse_congruence("gcong\nblock 0 1\nblock 1", b4); }) == 3);
  CHECK(line_of([&] { parse_congruence("gcong\nblock 0 1\nedge 0 0\nblock 1", b4); })
        == 4);
  CHECK(code_of([&] { parse_congruence("tcong\nblock 0 1\nopen -", b4); })
        == ErrorCode::SyntaxError);
  CHECK(code_of([&] {
          parse_congruence("gcong\nblock 0 1\nedge 0 0",
                           Structure{named::S2()});
        })
        == ErrorCode::SyntaxError);
  auto any = parse_congruence("gcong\nblock 0 1\nedge 0 0\nedge 0 1\nedge 1 1",
                              Structure{b4});
  CHECK(std::get<GraphCongruence>(any) == universal_gc(b4));
}

TEST_CASE("serialization round-trips") {
  for (int n = 1; n <= 3; ++n) {
    for (auto const& x : enumerate_spaces(n)) {
      CHECK(parse_space(serialize(x)) == x);
      CHECK(std::get<FiniteSpace>(parse_structure(serialize(Structure{x}))) == x);
      for (auto const& rho : enumerate_congruences_tc(x)) {
        CHECK(parse_congruence(serialize(rho), x) == rho);
        auto q = quotient_tc(x, rho).space;
        CHECK(parse_space(serialize(q)) == q);
      }
    }
    for (auto const& g : enumerate_graphs(n, LoopPolicy::LoopsAllowed)) {
      CHECK(parse_graph(serialize(g)) == g);
      for (auto const& theta : enumerate_congruences_gc(g)) {
        CHECK(parse_congruence(serialize(theta), g) == theta);
      }
    }
  }
  for (int n = 1; n <= 4; ++n) {
    for (auto const& g : enumerate_graphs(n, LoopPolicy::NoLoops)) {
      CHECK(parse_graph(serialize(g)) == g);
      for (auto const& theta : enumerate_congruences_lc(g)) {
        CHECK(parse_congruence(serialize(theta), g) == theta);
      }
      for (auto const& theta : birkhoff_complete_decomposition(g)) {
        auto q = quotient_lc(g, theta).graph;
        CHECK(parse_graph(serialize(q)) == q);
      }
    }
  }
  CHECK(serialize(named::S2()) == "space 2\nopen -\nopen 0\nopen 0,1\n");
  CHECK(serialize(named::B(4)) == "graph 2 loops\ne 0 0\ne 1 1\n");
  CHECK(serialize(universal_gc(named::B(1)))
        == "gcong\nblock 0 1\nedge 0 0\nedge 0 1\nedge 1 1\n");
}

TEST_CASE("reports") {
  Report r;
  r.command = "conrad x";
  r.add_line("info");
  r.add_check("one", true);
  r.add_check("two", false, "witness");
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 1);
  CHECK(r.render()
        == "command: conrad x\ninfo\nPASS one\nFAIL two: witness\n"
           "summary: 1 passed, 1 failed\n");
}

TEST_CASE("conrad congruences and quotient") {
  TempFile b1("graph 2 loops\n");
  auto     out = run({"congruences", "--graph", b1.path()});
  CHECK(out.status == exit_ok);
  CHECK(count_lines_starting(out.output, "congruence ") == 10);
  CHECK(out.output.find("count 10\n") != std::string::npos);

  auto strong = run({"congruences", "--graph", b1.path(), "--strong-only"});
  CHECK(count_lines_starting(strong.output, "congruence ") == 2);

  TempFile s2("space 2\nopen -\nopen 0\nopen 0,1\n");
  CHECK(count_lines_starting(run({"congruences", "--space", s2.path()}).output,
                             "congruence ")
        == 3);

  TempFile b4("graph 2 loops\ne 0 0\ne 1 1\n");
  TempFile cong("gcong\nblock 0 1\nedge 0 0\nedge 0 1\nedge 1 1\n");
  auto     q = run({"quotient", "--graph", b4.path(), "--cong", cong.path()});
  CHECK(q.status == exit_ok);
  CHECK(q.output.find("quotient graph 1 loops {00}\n") != std::string::npos);

  // Identical inputs give byte-identical reports.
  CHECK(run({"congruences", "--graph", b1.path()}).output == out.output);
}

TEST_CASE("conrad catalog, radical and decompose") {
  TempFile b4("graph 2 loops\ne 0 0\ne 1 1\n");
  auto     c = run({"catalog", "--kind", "graph", "--id", "c", b4.path()});
  CHECK(c.status == exit_ok);
  CHECK(c.output.find("congruence ({{0,1}}, {00 01 11})\n") != std::string::npos);
  CHECK(c.output.find("strong yes\n") != std::string::npos);
  CHECK(c.output.find("quotient graph 1 loops {00}\n") != std::string::npos);

  TempFile s2("space 2\nopen -\nopen 0\nopen 0,1\n");
  auto     d = run({"catalog", "--kind", "topo", "--id", "d", s2.path()});
  CHECK(d.output.find("strong no\n") != std::string::npos);
  CHECK(run({"catalog", "--kind", "topo", "--id", "z", s2.path()}).status == exit_usage);
  CHECK(run({"catalog", "--kind", "graph", "--id", "a", s2.path()}).status == exit_usage);

  auto rad = run({"radical", "--class", "indiscrete", s2.path()});
  CHECK(rad.status == exit_ok);
  CHECK(rad.output.find("semisimple no\n") != std::string::npos);
  CHECK(run({"radical", "--class", "nonsense", s2.path()}).status == exit_usage);

  TempFile p4("graph 4 noloops\ne 0 1\ne 1 2\ne 2 3\n");
  auto     b = run({"decompose", "--birkhoff", p4.path()});
  CHECK(b.status == exit_ok);
  CHECK(b.output.find("PASS meet is the identity\n") != std::string::npos);
  CHECK(count_lines_starting(b.output, "embedding ") == 4);
  CHECK(run({"decompose", "--birkhoff", b4.path()}).status == exit_usage);
  CHECK(run({"decompose", "--sierpinski", s2.path()}).status == exit_ok);
  TempFile point("space 1\nopen -\nopen 0\n");
  CHECK(run({"decompose", "--sierpinski", point.path()}).status == exit_usage);
}

TEST_CASE("conrad universe") {
  auto deg = run({"universe", "--kind", "loopless", "--max-n", "4", "--check",
                  "degeneracy", "--class", "complete"});
  CHECK(deg.status == exit_ok);
  CHECK(deg.output.find("summary: 2 passed, 0 failed\n") != std::string::npos);

  auto bad = run({"universe", "--kind", "loopless", "--max-n", "4", "--check",
                  "degeneracy", "--class", "edgeless"});
  CHECK(bad.status == exit_check_failed);
  CHECK(bad.output.find("LemmaConditionFailed") != std::string::npos);

  auto h = run({"universe", "--kind", "graph", "--max-n", "3", "--check", "h1h2",
                "--catalog", "f"});
  CHECK(h.status == exit_ok);
  auto ka = run({"universe", "--kind", "topo", "--check", "ka", "--catalog", "d"});
  CHECK(ka.status == exit_check_failed);
  CHECK(ka.output.find("FAIL strong: space 2 {- 0 01}") != std::string::npos);

  auto pair = run({"universe", "--kind", "loopless", "--max-n", "4", "--check",
                   "complementary", "--class", "kn-containing:2", "--against",
                   "kn-free:2"});
  CHECK(pair.status == exit_ok);

  CHECK(run({"universe", "--kind", "graph", "--check", "h1h2"}).status == exit_usage);
  CHECK(run({"universe", "--kind", "graph", "--check", "degeneracy"}).status
        == exit_usage);
  CHECK(run({"universe", "--kind", "loopless", "--check", "h1h2", "--catalog", "a"})
            .status
        == exit_usage);
  CHECK(run({"universe", "--kind", "rings", "--check", "h1h2"}).status == exit_usage);
}

TEST_CASE("conrad usage errors") {
  CHECK(run({}).status == exit_usage);
  CHECK(run({"congruences"}).status == exit_usage);
  CHECK(run({"congruences", "--graph", "/nonexistent/file"}).status == exit_usage);
  TempFile bad("graph 2 noloops\ne 0 0\n");
  auto     out = run({"congruences", "--graph", bad.path()});
  CHECK(out.status == exit_usage);
  CHECK(out.error.find("SemanticError: line 2") != std::string::npos);
  CHECK(run({"--format", "json", "congruences", "--graph", bad.path()}).status
        == exit_usage);
  CHECK(run({"--help"}).status == exit_ok);
}

TEST_CASE("theorem suites") {
  SuiteOptions o;
  o.random_count = 200;
  o.seed         = 11;
  for (Theorem t : all_theorems()) {
    CAPTURE(to_string(t));
    auto r = run_theorem_suite(t, o);
    CHECK(r.ok());
    CHECK(r.first_failure.empty());
    CHECK(r.sampled == 200);
    CHECK(r.exhaustive > 0);
  }
  auto v1 = run({"verify", "--seed", "3", "--count", "50"});
  auto v2 = run({"verify", "--seed", "3", "--count", "50"});
  CHECK(v1.status == exit_ok);
  CHECK(v1.output == v2.output);
  CHECK(v1.output.find("summary: 9 passed, 0 failed\n") != std::string::npos);
}
