#include "conrad/cli_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "conrad/loopless_congruence.hpp"
#include "conrad/radical_engine.hpp"
#include "conrad/theorems.hpp"

namespace conrad {

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Line {
      int                      number = 0;
      std::vector<std::string> tokens;
      std::string              rest;  // text after the first token
    };

    [[noreturn]] void syntax(int line, std::string const& what) {
      throw ParseError(ErrorCode::SyntaxError, line, what);
    }

    [[noreturn]] void semantic(int line, std::string const& what) {
      throw ParseError(ErrorCode::SemanticError, line, what);
    }

    std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) {
        return {};
      }
      return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
    }

    std::vector<Line> lines_of(std::string_view text) {
      std::vector<Line>  out;
      std::istringstream in{std::string(text)};
      int                number = 0;
      for (std::string raw; std::getline(in, raw);) {
        ++number;
        auto body = trim(std::string_view(raw).substr(0, raw.find('#')));
        if (body.empty()) {
          continue;
        }
        Line line;
        line.number = number;
        std::istringstream words{std::string(body)};
        for (std::string t; words >> t;) {
          line.tokens.push_back(t);
        }
        line.rest = std::string(trim(body.substr(line.tokens.front().size())));
        out.push_back(std::move(line));
      }
      return out;
    }

    int parse_int(std::string_view token, int line) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()
          || value < 0) {
        syntax(line, "expected a non-negative integer, got '" + std::string(token) + "'");
      }
      return value;
    }

    int parse_element(std::string_view token, int n, int line) {
      int x = parse_int(token, line);
      if (x >= n) {
        semantic(line, "element " + std::to_string(x) + " out of range");
      }
      return x;
    }

    // Ids separated by commas and/or blanks.
    Subset parse_ids(std::string const& rest, int n, int line) {
      std::string spaced = rest;
      for (char& c : spaced) {
        c = c == ',' ? ' ' : c;
      }
      std::istringstream is(spaced);
      Subset             s     = 0;
      bool               empty = true;
      for (std::string t; is >> t;) {
        s |= Subset{1} << parse_element(t, n, line);
        empty = false;
      }
      if (empty) {
        syntax(line, "expected at least one element");
      }
      return s;
    }

    Subset parse_open(Line const& l, int n) {
      if (l.rest == "-") {
        return 0;
      }
      if (l.rest.find(",,") != std::string::npos || l.rest.starts_with(",")
          || l.rest.ends_with(",")) {
        syntax(l.number, "empty element in open set");
      }
      return parse_ids(l.rest, n, l.number);
    }

    std::pair<int, int> parse_pair(Line const& l, int n) {
      if (l.tokens.size() != 3) {
        syntax(l.number, "expected '" + l.tokens.front() + " <a> <b>'");
      }
      int a = parse_int(l.tokens[1], l.number);
      int b = parse_int(l.tokens[2], l.number);
      if (a > b) {
        syntax(l.number, "pair must be written with a <= b");
      }
      parse_element(l.tokens[2], n, l.number);
      return {a, b};
    }

    int parse_order(Line const& l, int max_order) {
      int n = parse_int(l.tokens[1], l.number);
      if (n < 1 || n > max_order) {
        semantic(l.number, "order must lie in 1.." + std::to_string(max_order));
      }
      return n;
    }

    FiniteGraph graph_from(std::vector<Line> const& lines) {
      Line const& head = lines.front();
      if (head.tokens.size() != 3
          || (head.tokens[2] != "loops" && head.tokens[2] != "noloops")) {
        syntax(head.number, "expected 'graph <n> loops|noloops'");
      }
      int const  n      = parse_order(head, max_graph_order);
      bool const loops  = head.tokens[2] == "loops";
      EdgeSet    edges;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        Line const& l = lines[i];
        if (l.tokens.front() != "e") {
          syntax(l.number, "expected 'e <a> <b>'");
        }
        auto [a, b] = parse_pair(l, n);
        if (a == b && !loops) {
          semantic(l.number, "loop on a graph declared noloops");
        }
        edges.insert(a, b);
      }
      return FiniteGraph(n, loops ? LoopPolicy::LoopsAllowed : LoopPolicy::NoLoops, edges);
    }

    FiniteSpace space_from(std::vector<Line> const& lines) {
      Line const& head = lines.front();
      if (head.tokens.size() != 2) {
        syntax(head.number, "expected 'space <n>'");
      }
      int const n = parse_order(head, max_space_order);
      Family    opens;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        Line const& l = lines[i];
        if (l.tokens.front() != "open") {
          syntax(l.number, "expected 'open <ids>' or 'open -'");
        }
        opens.insert(parse_open(l, n));
      }
      try {
        return FiniteSpace(n, opens);
      } catch (Error const& e) {
        semantic(0, e.what());
      }
    }

    std::vector<Line> nonempty_lines(std::string_view text) {
      auto lines = lines_of(text);
      if (lines.empty()) {
        syntax(1, "empty input");
      }
      return lines;
    }

    // The block lines directly after the header, as a partition of 0..n-1.
    // Returns the partition and the index of the first non-block line.
    std::pair<Partition, std::size_t> blocks_from(std::vector<Line> const& lines,
                                                  int                      n) {
      std::vector<int> labels(n, -1);
      std::size_t      i     = 1;
      int              label = 0;
      for (; i < lines.size() && lines[i].tokens.front() == "block"; ++i, ++label) {
        Line const& l = lines[i];
        for (int x : elements_of(parse_ids(l.rest, n, l.number))) {
          if (labels[x] != -1) {
            semantic(l.number, "element " + std::to_string(x) + " in two blocks");
          }
          labels[x] = label;
        }
      }
      for (int x = 0; x < n; ++x) {
        if (labels[x] == -1) {
          semantic(0, "element " + std::to_string(x) + " is in no block");
        }
      }
      return {Partition(std::move(labels)), i};
    }

    std::vector<Line> congruence_lines(std::string_view text,
                                       std::string_view keyword) {
      auto lines = nonempty_lines(text);
      if (lines.front().tokens.size() != 1
          || lines.front().tokens.front() != keyword) {
        syntax(lines.front().number, "expected '" + std::string(keyword) + "'");
      }
      return lines;
    }

    std::string ids_text(Subset s, char separator) {
      std::string out;
      for (int x : elements_of(s)) {
        if (!out.empty()) {
          out += separator;
        }
        out += std::to_string(x);
      }
      return out;
    }

    std::string blocks_text(Partition const& p) {
      std::string out;
      for (Subset b : p.blocks()) {
        out += "block " + ids_text(b, ' ') + "\n";
      }
      return out;
    }

  }  // namespace

  Structure parse_structure(std::string_view text) {
    auto        lines = nonempty_lines(text);
    auto const& kind  = lines.front().tokens.front();
    if (kind == "graph") {
      return graph_from(lines);
    }
    if (kind == "space") {
      return space_from(lines);
    }
    syntax(lines.front().number, "expected a 'graph' or 'space' header");
  }

  FiniteGraph parse_graph(std::string_view text) {
    auto s = parse_structure(text);
    if (auto* g = std::get_if<FiniteGraph>(&s)) {
      return *g;
    }
    semantic(1, "expected a graph, found a space");
  }

  FiniteSpace parse_space(std::string_view text) {
    auto s = parse_structure(text);
    if (auto* x = std::get_if<FiniteSpace>(&s)) {
      return *x;
    }
    semantic(1, "expected a space, found a graph");
  }

  TopoCongruence parse_congruence(std::string_view text, FiniteSpace const& x) {
    auto lines        = congruence_lines(text, "tcong");
    auto [p, i]       = blocks_from(lines, x.order());
    Family ctop;
    for (; i < lines.size(); ++i) {
      Line const& l = lines[i];
      if (l.tokens.front() != "open") {
        syntax(l.number, "expected 'open <ids>' after the blocks");
      }
      ctop.insert(parse_open(l, x.order()));
    }
    TopoCongruence rho{p, ctop};
    return validate_tc(x, rho);
  }

  GraphCongruence parse_congruence(std::string_view text, FiniteGraph const& g) {
    auto lines  = congruence_lines(text, "gcong");
    auto [p, i] = blocks_from(lines, g.order());
    EdgeSet cedges;
    for (; i < lines.size(); ++i) {
      Line const& l = lines[i];
      if (l.tokens.front() != "edge") {
        syntax(l.number, "expected 'edge <a> <b>' after the blocks");
      }
      auto [a, b] = parse_pair(l, g.order());
      cedges.insert(a, b);
    }
    GraphCongruence theta{p, cedges};
    return g.loops_allowed() ? validate_gc(g, theta) : validate_lc(g, theta);
  }

  AnyCongruence parse_congruence(std::string_view text, Structure const& carrier) {
    return std::visit(
        [text](auto const& s) -> AnyCongruence { return parse_congruence(text, s); },
        carrier);
  }

  std::string serialize(FiniteGraph const& g) {
    std::string out = "graph " + std::to_string(g.order())
                      + (g.loops_allowed() ? " loops\n" : " noloops\n");
    for (auto [a, b] : g.edges().pairs()) {
      out += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
  }

  std::string serialize(FiniteSpace const& x) {
    std::string out = "space " + std::to_string(x.order()) + "\n";
    for (Subset u : x.opens().members()) {
      out += "open " + (u == 0 ? std::string("-") : ids_text(u, ',')) + "\n";
    }
    return out;
  }

  std::string serialize(Structure const& s) {
    return std::visit([](auto const& x) { return serialize(x); }, s);
  }

  std::string serialize(TopoCongruence const& rho) {
    std::string out = "tcong\n" + blocks_text(rho.partition);
    for (Subset u : rho.ctop.members()) {
      out += "open " + (u == 0 ? std::string("-") : ids_text(u, ',')) + "\n";
    }
    return out;
  }

  std::string serialize(GraphCongruence const& theta) {
    std::string out = "gcong\n" + blocks_text(theta.partition);
    for (auto [a, b] : theta.cedges.pairs()) {
      out += "edge " + std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  void Report::add_line(std::string line) {
    lines.push_back(std::move(line));
  }

  void Report::add_check(std::string name, bool ok, std::string witness) {
    checks.push_back({std::move(name), ok, std::move(witness)});
  }

  int Report::passed() const {
    int n = 0;
    for (auto const& c : checks) {
      n += c.passed ? 1 : 0;
    }
    return n;
  }

  int Report::failed() const {
    return static_cast<int>(checks.size()) - passed();
  }

  std::string Report::render() const {
    std::string out = "command: " + command + "\n";
    for (auto const& l : lines) {
      out += l + "\n";
    }
    for (auto const& c : checks) {
      out += (c.passed ? "PASS " : "FAIL ") + c.name;
      if (!c.witness.empty()) {
        out += ": " + c.witness;
      }
      out += "\n";
    }
    out += "summary: " + std::to_string(passed()) + " passed, "
           + std::to_string(failed()) + " failed\n";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Commands
  ////////////////////////////////////////////////////////////////////////

  namespace {

    [[noreturn]] void usage(std::string const& what) {
      fail(ErrorCode::UsageError, what);
    }

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        usage("cannot read " + path);
      }
      std::ostringstream os;
      os << in.rdbuf();
      return os.str();
    }

    FiniteGraph load_graph(std::string const& path) {
      return parse_graph(read_file(path));
    }

    FiniteSpace load_space(std::string const& path) {
      return parse_space(read_file(path));
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    std::string map_text(ElementMap const& f) {
      std::string out = "[";
      for (std::size_t i = 0; i < f.size(); ++i) {
        out += (i ? " " : "") + std::to_string(f[i]);
      }
      return out + "]";
    }

    template <typename K>
    void add_result(Report& r, std::string name, CheckResult<K> const& c) {
      std::string witness;
      if (c.witness) {
        witness = to_string(*c.witness);
      }
      if (!c.detail.empty()) {
        witness += (witness.empty() ? "" : " ") + ("(" + c.detail + ")");
      }
      r.add_check(std::move(name), c.ok, c.ok ? std::string() : witness);
    }

    // --- congruences / quotient ---------------------------------------

    void list_congruences(Report& r, FiniteGraph const& g, bool strong_only) {
      r.add_line("structure " + to_string(g));
      auto const all = g.loops_allowed() ? enumerate_congruences_gc(g)
                                         : enumerate_congruences_lc(g);
      int count = 0;
      for (auto const& theta : all) {
        bool strong = g.loops_allowed() ? is_strong_gc(g, theta) : is_strong_lc(g, theta);
        if (!strong_only || strong) {
          r.add_line("congruence " + to_string(theta));
          ++count;
        }
      }
      r.add_line("count " + std::to_string(count));
    }

    void list_congruences(Report& r, FiniteSpace const& x, bool strong_only) {
      r.add_line("structure " + to_string(x));
      int count = 0;
      for (auto const& rho : enumerate_congruences_tc(x)) {
        if (!strong_only || is_strong_tc(x, rho)) {
          r.add_line("congruence " + to_string(rho));
          ++count;
        }
      }
      r.add_line("count " + std::to_string(count));
    }

    void describe_quotient(Report& r, FiniteGraph const& g, GraphCongruence const& theta) {
      bool loops = g.loops_allowed();
      auto q     = loops ? quotient_gc(g, theta) : quotient_lc(g, theta);
      r.add_line("congruence " + to_string(theta));
      r.add_line("strong " + yes_no(loops ? is_strong_gc(g, theta) : is_strong_lc(g, theta)));
      r.add_line("quotient " + to_string(q.graph));
      r.add_line("projection " + map_text(q.projection));
    }

    void describe_quotient(Report& r, FiniteSpace const& x, TopoCongruence const& rho) {
      auto q = quotient_tc(x, rho);
      r.add_line("congruence " + to_string(rho));
      r.add_line("strong " + yes_no(is_strong_tc(x, rho)));
      r.add_line("quotient " + to_string(q.space));
      r.add_line("projection " + map_text(q.projection));
    }

    // --- decompose ------------------------------------------------------

    void embedding_lines(Report& r, std::vector<std::vector<int>> const& embedding) {
      for (std::size_t v = 0; v < embedding.size(); ++v) {
        r.add_line("embedding " + std::to_string(v) + " " + map_text(embedding[v]));
      }
    }

    void decompose_birkhoff(Report& r, FiniteGraph const& g) {
      auto factors = birkhoff_complete_decomposition(g);
      auto sub     = check_subdirect_lc(g, factors);
      bool complete = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto const& f = sub.factors[i];
        r.add_line("factor " + std::to_string(i) + " " + to_string(factors[i])
                   + " quotient " + to_string(f));
        complete = complete && f.edges() == f.possible_edges();
      }
      embedding_lines(r, sub.embedding);
      r.add_check("meet is the identity", sub.is_subdirect);
      r.add_check("embedding is faithful", sub.embedding_faithful);
      r.add_check("factors are complete", complete);
    }

    void decompose_sierpinski(Report& r, FiniteSpace const& x) {
      auto factors  = sierpinski_decomposition(x);
      auto sub      = check_subdirect_tc(x, factors);
      bool shape_ok = true;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        auto const& f = sub.factors[i];
        r.add_line("factor " + std::to_string(i) + " " + to_string(factors[i])
                   + " quotient " + to_string(f));
        shape_ok = shape_ok
                   && (homeo_spaces(f, named::S2()) || homeo_spaces(f, named::I2()));
      }
      embedding_lines(r, sub.embedding);
      r.add_check("meet is the identity", sub.is_subdirect);
      r.add_check("factors are S2 or I2", shape_ok);
    }

    // --- radical / catalog ----------------------------------------------

    template <typename K>
    void describe_radical(Report&                      r,
                          RadicalAssignment<K> const&  sigma,
                          StructureOf<K> const&        x) {
      auto rho = sigma(x);
      r.add_line("structure " + to_string(x));
      describe_quotient(r, x, rho);
      r.add_line("in radical class " + yes_no(in_radical_class(sigma, x)));
      r.add_line("semisimple " + yes_no(in_semisimple_class(sigma, x)));
    }

    void radical_command(Report& r, std::string const& name, std::string const& path) {
      auto s = parse_structure(read_file(path));
      r.add_line("class " + name);
      if (auto* x = std::get_if<FiniteSpace>(&s)) {
        describe_radical(r, radical_from_class(builtin_class<TopoKind>(name)), *x);
        return;
      }
      auto const& g = std::get<FiniteGraph>(s);
      if (g.loops_allowed()) {
        describe_radical(r, radical_from_class(builtin_class<LoopGraphKind>(name)), g);
      } else {
        describe_radical(r, radical_from_class(builtin_class<LooplessKind>(name)), g);
      }
    }

    char catalog_id(std::string const& id) {
      if (id.size() != 1) {
        usage("catalog id must be a single letter");
      }
      return id.front();
    }

    void catalog_command(Report& r, std::string const& kind, std::string const& id,
                         std::string const& path) {
      if (kind == "topo") {
        auto sigma = topological_catalog(catalog_id(id));
        r.add_line("catalog " + sigma.name);
        describe_radical(r, sigma, load_space(path));
      } else {
        auto g = load_graph(path);
        if (!g.loops_allowed()) {
          fail(ErrorCode::PolicyMismatch, "the graph catalog needs a graph with loops");
        }
        auto sigma = graph_catalog(catalog_id(id));
        r.add_line("catalog " + sigma.name);
        describe_radical(r, sigma, g);
      }
    }

    // --- universe -------------------------------------------------------

    struct UniverseOptions {
      std::string kind;
      int         max_n = 3;
      std::string check;
      std::string class_name;
      std::string catalog;
      std::string against;
    };

    template <typename K>
    RadicalAssignment<K> chosen_radical(UniverseOptions const& o) {
      if (!o.catalog.empty()) {
        if constexpr (std::is_same_v<K, TopoKind>) {
          return topological_catalog(catalog_id(o.catalog));
        } else if constexpr (std::is_same_v<K, LoopGraphKind>) {
          return graph_catalog(catalog_id(o.catalog));
        } else {
          usage("there is no catalog for loopless graphs");
        }
      }
      if (o.class_name.empty()) {
        usage("--check " + o.check + " needs --class or --catalog");
      }
      return radical_from_class(builtin_class<K>(o.class_name));
    }

    void degeneracy_checks(Report& r, UniverseOptions const& o,
                           Universe<LooplessKind> const& u) {
      auto m = builtin_class<LooplessKind>(o.class_name.empty() ? "complete"
                                                                : o.class_name);
      r.add_line("class " + m.name);
      r.add_check("complete graphs in class", complete_graphs_contained(m, u));
      try {
        add_result(r, "radical is the identity", loopless_degeneracy_check(u, m));
      } catch (Error const& e) {
        if (e.code() != ErrorCode::LemmaConditionFailed) {
          throw;
        }
        r.add_check("radical is the identity", false, e.what());
      }
    }

    template <typename K>
    void universe_checks(Report& r, UniverseOptions const& o) {
      auto const u = make_universe<K>(o.max_n);
      r.add_line("kind " + std::string(to_string(K::kind)) + " max-n "
                 + std::to_string(o.max_n) + " structures "
                 + std::to_string(u.structures.size()));
      if (o.check == "complementary") {
        if (o.class_name.empty() || o.against.empty()) {
          usage("--check complementary needs --class and --against");
        }
        auto c = builtin_class<K>(o.class_name);
        auto d = builtin_class<K>(o.against);
        r.add_line("pair " + c.name + " " + d.name);
        add_result(r, "connectedness", is_connectedness(c, u));
        add_result(r, "disconnectedness", is_disconnectedness(d, u));
        add_result(r, "complementary pair", complementary_pair_check(c, d, u));
        return;
      }
      if (o.check == "degeneracy") {
        if constexpr (std::is_same_v<K, LooplessKind>) {
          degeneracy_checks(r, o, u);
          return;
        } else {
          usage("--check degeneracy needs --kind loopless");
        }
      }
      auto sigma = chosen_radical<K>(o);
      r.add_line("radical " + sigma.name);
      if (o.check == "h1h2") {
        add_result(r, "H1", verify_H1(sigma, u));
        add_result(r, "H2", verify_H2(sigma, u));
      } else if (o.check == "hereditary") {
        add_result(r, "r-hereditary", r_hereditary(sigma, u));
        add_result(r, "s-hereditary", s_hereditary(sigma, u));
        add_result(r, "ideal-hereditary", ideal_hereditary(sigma, u));
      } else {
        add_result(r, "complete", is_complete(sigma, u));
        add_result(r, "idempotent", is_idempotent(sigma, u));
        add_result(r, "strong", is_strong_everywhere(sigma, u));
      }
    }

    void universe_command(Report& r, UniverseOptions const& o) {
      if (o.kind == "topo") {
        universe_checks<TopoKind>(r, o);
      } else if (o.kind == "graph") {
        universe_checks<LoopGraphKind>(r, o);
      } else {
        universe_checks<LooplessKind>(r, o);
      }
    }

    // --- verify ---------------------------------------------------------

    void verify_command(Report& r, SuiteOptions const& o) {
      r.add_line("seed " + std::to_string(o.seed) + " count "
                 + std::to_string(o.random_count) + " exhaustive-max-n "
                 + std::to_string(o.exhaustive_max_n) + " random-max-n "
                 + std::to_string(o.random_max_n));
      for (Theorem t : all_theorems()) {
        auto res = run_theorem_suite(t, o);
        r.add_line(std::string(to_string(t)) + " exhaustive "
                   + std::to_string(res.exhaustive) + " sampled "
                   + std::to_string(res.sampled));
        r.add_check(std::string(to_string(t)), res.ok(), res.first_failure);
      }
    }

    int default_max_n() {
      if (char const* v = std::getenv("CONRAD_MAX_N")) {
        int n = 0;
        auto [ptr, ec] = std::from_chars(v, v + std::char_traits<char>::length(v), n);
        if (ec == std::errc{} && *ptr == '\0' && n >= 1) {
          return n;
        }
      }
      return 3;
    }

    std::string joined(std::vector<std::string> const& args) {
      std::string out;
      for (auto const& a : args) {
        out += (out.empty() ? "" : " ") + a;
      }
      return out;
    }

  }  // namespace

  CommandOutcome run_command(std::vector<std::string> const& args) {
    CommandOutcome outcome;
    outcome.report.command = joined(args);

    CLI::App app{"Congruences and radicals of finite graphs and topological spaces",
                 "conrad"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "lines";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"lines"}));

    std::string graph_path, space_path, cong_path;
    bool        strong_only = false;
    auto* congruences = app.add_subcommand("congruences", "List every congruence");
    auto* g1 = congruences->add_option("--graph", graph_path, "Graph file");
    auto* s1 = congruences->add_option("--space", space_path, "Space file");
    g1->excludes(s1);
    congruences->add_flag("--strong-only", strong_only, "Only strong congruences");

    auto* quotient = app.add_subcommand("quotient", "Quotient by a congruence");
    auto* g2 = quotient->add_option("--graph", graph_path, "Graph file");
    auto* s2 = quotient->add_option("--space", space_path, "Space file");
    g2->excludes(s2);
    quotient->add_option("--cong", cong_path, "Congruence file")->required();

    std::string birkhoff_path, sierpinski_path;
    auto* decompose = app.add_subcommand("decompose", "Subdirect decompositions");
    auto* b = decompose->add_option("--birkhoff", birkhoff_path,
                                    "Loopless graph to split into complete graphs");
    auto* s = decompose->add_option("--sierpinski", sierpinski_path,
                                    "Space to split into S2 and I2 factors");
    b->excludes(s);

    std::string class_name, file_path;
    auto* radical = app.add_subcommand("radical", "Hoehnke radical of a built-in class");
    radical->add_option("--class", class_name, "Class name")->required();
    radical->add_option("file", file_path, "Structure file")->required();

    std::string catalog_kind, catalog_letter;
    auto* catalog = app.add_subcommand("catalog", "Ideal-hereditary radical catalog");
    catalog->add_option("--kind", catalog_kind, "topo or graph")
        ->required()
        ->check(CLI::IsMember({"topo", "graph"}));
    catalog->add_option("--id", catalog_letter, "Catalog letter")->required();
    catalog->add_option("file", file_path, "Structure file")->required();

    UniverseOptions uo;
    uo.max_n       = default_max_n();
    auto* universe = app.add_subcommand("universe", "Checks over every small structure");
    universe->add_option("--kind", uo.kind, "topo, graph or loopless")
        ->required()
        ->check(CLI::IsMember({"topo", "graph", "loopless"}));
    universe->add_option("--max-n", uo.max_n, "Largest structure size")
        ->check(CLI::Range(1, max_graph_order));
    universe->add_option("--check", uo.check, "Check to run")
        ->required()
        ->check(CLI::IsMember({"h1h2", "hereditary", "ka", "complementary", "degeneracy"}));
    universe->add_option("--class", uo.class_name, "Built-in class");
    universe->add_option("--catalog", uo.catalog, "Catalog letter instead of a class");
    universe->add_option("--against", uo.against, "Second class of a complementary pair");

    SuiteOptions so;
    auto* verify = app.add_subcommand("verify", "Isomorphism theorem suites");
    verify->add_option("--seed", so.seed, "Random seed");
    verify->add_option("--count", so.random_count, "Random instances per theorem")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--max-n", so.exhaustive_max_n, "Exhaustive size bound")
        ->check(CLI::Range(0, 4));
    verify->add_option("--random-max-n", so.random_max_n, "Random structure size bound")
        ->check(CLI::Range(1, 4));

    std::ostringstream out, err;
    try {
      std::vector<char const*> argv;
      for (auto const& a : args) {
        argv.push_back(a.c_str());
      }
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::ParseError const& e) {
      int code       = app.exit(e, out, err);
      outcome.output = out.str();
      outcome.error  = err.str();
      outcome.status = code == 0 ? exit_ok : exit_usage;
      return outcome;
    }

    Report& r = outcome.report;
    try {
      if (congruences->parsed() || quotient->parsed()) {
        if (graph_path.empty() == space_path.empty()) {
          usage("give exactly one of --graph and --space");
        }
      }
      if (congruences->parsed()) {
        if (!graph_path.empty()) {
          list_congruences(r, load_graph(graph_path), strong_only);
        } else {
          list_congruences(r, load_space(space_path), strong_only);
        }
      } else if (quotient->parsed()) {
        auto text = read_file(cong_path);
        if (!graph_path.empty()) {
          auto g = load_graph(graph_path);
          describe_quotient(r, g, parse_congruence(text, g));
        } else {
          auto x = load_space(space_path);
          describe_quotient(r, x, parse_congruence(text, x));
        }
      } else if (decompose->parsed()) {
        if (birkhoff_path.empty() == sierpinski_path.empty()) {
          usage("give exactly one of --birkhoff and --sierpinski");
        }
        if (!birkhoff_path.empty()) {
          decompose_birkhoff(r, load_graph(birkhoff_path));
        } else {
          decompose_sierpinski(r, load_space(sierpinski_path));
        }
      } else if (radical->parsed()) {
        radical_command(r, class_name, file_path);
      } else if (catalog->parsed()) {
        catalog_command(r, catalog_kind, catalog_letter, file_path);
      } else if (universe->parsed()) {
        universe_command(r, uo);
      } else if (verify->parsed()) {
        verify_command(r, so);
      }
    } catch (Error const& e) {
      outcome.error  = std::string("error: ") + e.what() + "\n";
      outcome.status = exit_usage;
      return outcome;
    }
    outcome.output = r.render();
    outcome.status = r.failed() > 0 ? exit_check_failed : exit_ok;
    return outcome;
  }

}  // namespace conrad
