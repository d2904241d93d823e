#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "conrad/error.hpp"
#include "conrad/graph_congruence.hpp"
#include "conrad/topo_congruence.hpp"

namespace conrad {

  using Structure      = std::variant<FiniteGraph, FiniteSpace>;
  using AnyCongruence  = std::variant<TopoCongruence, GraphCongruence>;

  // SyntaxError or SemanticError tied to a line of the input (1-based; 0 when
  // the problem is not on a particular line).
  class ParseError : public Error {
   public:
    ParseError(ErrorCode code, int line, std::string const& what)
        : Error(code, "line " + std::to_string(line) + ": " + what),
          _line(line) {}

    [[nodiscard]] int line() const noexcept {
      return _line;
    }

   private:
    int _line;
  };

  //   graph <n> loops|noloops      space <n>
  //   e <a> <b>                    open <ids separated by commas> | open -
  // Blank lines, trailing whitespace and '#' comments are ignored.
  Structure   parse_structure(std::string_view text);
  FiniteGraph parse_graph(std::string_view text);
  FiniteSpace parse_space(std::string_view text);

  //   tcong                        gcong
  //   block <ids>                  block <ids>
  //   open <ids> | open -          edge <a> <b>
  // Validated against the carrier (validate_tc, validate_gc or validate_lc);
  // validator errors pass through unchanged.
  AnyCongruence   parse_congruence(std::string_view text, Structure const& carrier);
  TopoCongruence  parse_congruence(std::string_view text, FiniteSpace const& x);
  GraphCongruence parse_congruence(std::string_view text, FiniteGraph const& g);

  std::string serialize(FiniteGraph const& g);
  std::string serialize(FiniteSpace const& x);
  std::string serialize(Structure const& s);
  std::string serialize(TopoCongruence const& rho);
  std::string serialize(GraphCongruence const& theta);

  struct CheckRecord {
    std::string name;
    bool        passed = true;
    std::string witness;
  };

  // Deterministic line-based output: the command echo, informational lines,
  // one PASS/FAIL line per check, then the counts.
  struct Report {
    std::string              command;
    std::vector<std::string> lines;
    std::vector<CheckRecord> checks;

    void add_line(std::string line);
    void add_check(std::string name, bool passed, std::string witness = {});

    [[nodiscard]] int         passed() const;
    [[nodiscard]] int         failed() const;
    [[nodiscard]] std::string render() const;
  };

  inline constexpr int exit_ok           = 0;
  inline constexpr int exit_check_failed = 1;
  inline constexpr int exit_usage        = 2;

  struct CommandOutcome {
    Report      report;
    int         status = exit_ok;
    std::string output;  // what goes to standard output
    std::string error;   // what goes to standard error
  };

  // args[0] is the program name. Status 0 when every check passes, 1 when
  // any fails, 2 for usage and input errors.
  CommandOutcome run_command(std::vector<std::string> const& args);

}  // namespace conrad
