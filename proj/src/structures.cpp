#include "conrad/structures.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "conrad/error.hpp"

namespace conrad {

  std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::MissingEmptyOrFull: return "MissingEmptyOrFull";
      case ErrorCode::NotClosedUnderUnion: return "NotClosedUnderUnion";
      case ErrorCode::NotClosedUnderIntersection:
        return "NotClosedUnderIntersection";
      case ErrorCode::PolicyMismatch: return "PolicyMismatch";
      case ErrorCode::BoundExceeded: return "BoundExceeded";
      case ErrorCode::EmptySubset: return "EmptySubset";
      case ErrorCode::InvalidStructure: return "InvalidStructure";
      case ErrorCode::NotATopology: return "NotATopology";
      case ErrorCode::NotSubTopology: return "NotSubTopology";
      case ErrorCode::NotSaturated: return "NotSaturated";
      case ErrorCode::EdgeSetOutOfRange: return "EdgeSetOutOfRange";
      case ErrorCode::SubstitutionViolated: return "SubstitutionViolated";
      case ErrorCode::IndependenceViolated: return "IndependenceViolated";
      case ErrorCode::NotContinuous: return "NotContinuous";
      case ErrorCode::NotHomomorphism: return "NotHomomorphism";
      case ErrorCode::NotSurjective: return "NotSurjective";
      case ErrorCode::NotContained: return "NotContained";
      case ErrorCode::InvalidCongruence: return "InvalidCongruence";
      case ErrorCode::EmptyList: return "EmptyList";
      case ErrorCode::TrivialSpace: return "TrivialSpace";
      case ErrorCode::SearchExhausted: return "SearchExhausted";
      case ErrorCode::NoQualifyingCongruence: return "NoQualifyingCongruence";
      case ErrorCode::KindMismatch: return "KindMismatch";
      case ErrorCode::KindUnsupported: return "KindUnsupported";
      case ErrorCode::BadCatalogId: return "BadCatalogId";
      case ErrorCode::LemmaConditionFailed: return "LemmaConditionFailed";
      case ErrorCode::UnknownClass: return "UnknownClass";
      case ErrorCode::SyntaxError: return "SyntaxError";
      case ErrorCode::SemanticError: return "SemanticError";
      case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
  }

  std::vector<ElementMap> all_maps(int m, int n) {
    std::vector<ElementMap> out;
    if (n <= 0) {
      return out;
    }
    ElementMap f(m, 0);
    while (true) {
      out.push_back(f);
      int i = m - 1;
      while (i >= 0 && f[i] == n - 1) {
        f[i--] = 0;
      }
      if (i < 0) {
        break;
      }
      ++f[i];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // EdgeSet
  ////////////////////////////////////////////////////////////////////////

  EdgeSet::EdgeSet(std::initializer_list<std::pair<int, int>> pairs) {
    for (auto [a, b] : pairs) {
      insert(a, b);
    }
  }

  EdgeSet EdgeSet::all_pairs(int n, bool with_loops) {
    EdgeSet out;
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a <= b; ++a) {
        if (a != b || with_loops) {
          out.insert(a, b);
        }
      }
    }
    return out;
  }

  EdgeSet EdgeSet::loops_on(Subset s) {
    EdgeSet out;
    for (int x : elements_of(s)) {
      out.insert(x, x);
    }
    return out;
  }

  EdgeSet EdgeSet::product(Subset a, Subset b) {
    EdgeSet out;
    for (int x : elements_of(a)) {
      for (int y : elements_of(b)) {
        out.insert(x, y);
      }
    }
    return out;
  }

  std::vector<std::pair<int, int>> EdgeSet::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::uint64_t bits = _bits; bits != 0; bits &= bits - 1) {
      int idx = std::countr_zero(bits);
      int b   = 0;
      while (number_of_pairs(b + 1) <= idx) {
        ++b;
      }
      out.emplace_back(idx - number_of_pairs(b), b);
    }
    return out;
  }

  EdgeSet EdgeSet::mapped(ElementMap const& f) const {
    EdgeSet out;
    for (auto [a, b] : pairs()) {
      out.insert(f[a], f[b]);
    }
    return out;
  }

  EdgeSet EdgeSet::restricted_to(Subset s) const {
    EdgeSet out;
    auto    members = elements_of(s);
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        if (contains(members[i], members[j])) {
          out.insert(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Family and topologies
  ////////////////////////////////////////////////////////////////////////

  Family::Family(std::initializer_list<Subset> members) {
    for (Subset s : members) {
      insert(s);
    }
  }

  std::vector<Subset> Family::members() const {
    std::vector<Subset> out;
    for (std::uint64_t b = _bits; b != 0; b &= b - 1) {
      out.push_back(static_cast<Subset>(std::countr_zero(b)));
    }
    return out;
  }

  Family Family::mapped(ElementMap const& f) const {
    Family out;
    for (Subset s : members()) {
      out.insert(image_of(s, f));
    }
    return out;
  }

  Family topology_generated_by(int n, Family f) {
    f.insert(0);
    f.insert(full_subset(n));
    bool changed = true;
    while (changed) {
      changed      = false;
      auto members = f.members();
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          Subset u = members[i] | members[j];
          Subset v = members[i] & members[j];
          if (!f.contains(u) || !f.contains(v)) {
            f.insert(u);
            f.insert(v);
            changed = true;
          }
        }
      }
    }
    return f;
  }

  bool is_topology(int n, Family f) {
    if (n < 1 || n > max_space_order) {
      return false;
    }
    std::uint64_t range = n == 6 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << (1u << n)) - 1;
    if ((f.bits() & ~range) != 0) {
      return false;
    }
    return topology_generated_by(n, f) == f;
  }

  Family indiscrete_topology(int n) {
    return Family{0, full_subset(n)};
  }

  Family discrete_topology(int n) {
    Family out;
    for (Subset s = 0; s <= full_subset(n); ++s) {
      out.insert(s);
    }
    return out;
  }

  FiniteSpace validate_space(int n, Family family) {
    if (n < 1 || n > max_space_order) {
      fail(ErrorCode::InvalidStructure,
           "space order must lie in 1.." + std::to_string(max_space_order));
    }
    std::uint64_t range = n == 6 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << (1u << n)) - 1;
    if ((family.bits() & ~range) != 0) {
      fail(ErrorCode::InvalidStructure, "open set outside the point range");
    }
    if (!family.contains(0) || !family.contains(full_subset(n))) {
      fail(ErrorCode::MissingEmptyOrFull,
           "the empty set and the full set must be open");
    }
    auto members = family.members();
    for (Subset u : members) {
      for (Subset v : members) {
        if (!family.contains(u | v)) {
          fail(ErrorCode::NotClosedUnderUnion, "union of two opens not open");
        }
      }
    }
    for (Subset u : members) {
      for (Subset v : members) {
        if (!family.contains(u & v)) {
          fail(ErrorCode::NotClosedUnderIntersection,
               "intersection of two opens not open");
        }
      }
    }
    return FiniteSpace::unchecked(n, family);
  }

  namespace {

    // Enumerates preorders (as successor rows) on n points by closing the
    // identity under every single added pair until nothing new appears. The
    // topology of a preorder is its family of up-sets.
    std::vector<Family> topologies_via_preorders(int n) {
      using Rows          = std::array<Subset, max_space_order>;
      auto encode         = [n](Rows const& r) {
        std::uint64_t code = 0;
        for (int i = 0; i < n; ++i) {
          code |= std::uint64_t{r[i]} << (i * max_space_order);
        }
        return code;
      };
      auto close = [n](Rows& r) {
        for (int k = 0; k < n; ++k) {
          for (int i = 0; i < n; ++i) {
            if (has_element(r[i], k)) {
              r[i] |= r[k];
            }
          }
        }
      };
      Rows start{};
      for (int i = 0; i < n; ++i) {
        start[i] = Subset{1} << i;
      }
      std::unordered_set<std::uint64_t> seen{encode(start)};
      std::vector<Rows>                 frontier{start};
      std::vector<Family>               out;
      while (!frontier.empty()) {
        Rows r = frontier.back();
        frontier.pop_back();
        Family opens;
        for (Subset u = 0; u <= full_subset(n); ++u) {
          bool up = true;
          for (int x : elements_of(u)) {
            up = up && (r[x] & ~u) == 0;
          }
          if (up) {
            opens.insert(u);
          }
        }
        out.push_back(opens);
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (!has_element(r[i], j)) {
              Rows next = r;
              next[i] |= Subset{1} << j;
              close(next);
              if (seen.insert(encode(next)).second) {
                frontier.push_back(next);
              }
            }
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace

  std::vector<Family> const& all_topologies(int n) {
    if (n < 1 || n > max_space_order) {
      fail(ErrorCode::BoundExceeded,
           "topologies are only enumerated for 1 <= n <= "
               + std::to_string(max_space_order));
    }
    static std::mutex                                         mtx;
    static std::array<std::vector<Family>, max_space_order + 1> cache;
    std::lock_guard<std::mutex>                               lock(mtx);
    if (cache[n].empty()) {
      cache[n] = topologies_via_preorders(n);
    }
    return cache[n];
  }

  ////////////////////////////////////////////////////////////////////////
  // FiniteGraph / FiniteSpace
  ////////////////////////////////////////////////////////////////////////

  FiniteGraph::FiniteGraph(int n, LoopPolicy policy, EdgeSet edges)
      : _n(n), _policy(policy), _edges(edges) {
    if (n < 1 || n > max_graph_order) {
      fail(ErrorCode::InvalidStructure,
           "graph order must lie in 1.." + std::to_string(max_graph_order));
    }
    if (!edges.subset_of(EdgeSet::all_pairs(n, true))) {
      fail(ErrorCode::InvalidStructure, "edge endpoint out of range");
    }
    if (policy == LoopPolicy::NoLoops
        && edges.intersects(EdgeSet::loops_on(full_subset(n)))) {
      fail(ErrorCode::InvalidStructure, "loop in a graph without loops");
    }
  }

  Subset FiniteGraph::loop_vertices() const {
    Subset out = 0;
    for (int x = 0; x < _n; ++x) {
      if (_edges.contains(x, x)) {
        out |= Subset{1} << x;
      }
    }
    return out;
  }

  FiniteSpace::FiniteSpace(int n, Family opens) {
    *this = validate_space(n, opens);
  }

  Subset FiniteSpace::minimal_open(int x) const {
    Subset out = points();
    for (Subset u : _opens.members()) {
      if (has_element(u, x)) {
        out &= u;
      }
    }
    return out;
  }

  bool FiniteSpace::is_t0() const {
    std::set<Subset> seen;
    for (int x = 0; x < _n; ++x) {
      if (!seen.insert(minimal_open(x)).second) {
        return false;
      }
    }
    return true;
  }

  bool FiniteSpace::is_t1() const {
    for (int x = 0; x < _n; ++x) {
      if (!_opens.contains(points() & ~(Subset{1} << x))) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  std::optional<ElementMap> iso_graphs(FiniteGraph const& g,
                                       FiniteGraph const& h) {
    if (g.policy() != h.policy()) {
      fail(ErrorCode::PolicyMismatch,
           "cannot compare graphs with different loop policies");
    }
    if (g.order() != h.order() || g.edges().size() != h.edges().size()) {
      return std::nullopt;
    }
    int  n      = g.order();
    auto degree = [](FiniteGraph const& x, int v) {
      int d = 0;
      for (int w = 0; w < x.order(); ++w) {
        d += x.has_edge(v, w) ? 1 : 0;
      }
      return d;
    };
    std::vector<int> dg(n), dh(n);
    for (int v = 0; v < n; ++v) {
      dg[v] = degree(g, v) * 2 + (g.has_edge(v, v) ? 1 : 0);
      dh[v] = degree(h, v) * 2 + (h.has_edge(v, v) ? 1 : 0);
    }
    ElementMap f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
      bool ok = true;
      for (int v = 0; v < n && ok; ++v) {
        ok = dg[v] == dh[f[v]];
      }
      if (ok && g.edges().mapped(f) == h.edges()) {
        return f;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return std::nullopt;
  }

  std::optional<ElementMap> homeo_spaces(FiniteSpace const& x,
                                         FiniteSpace const& y) {
    if (x.order() != y.order() || x.opens().size() != y.opens().size()) {
      return std::nullopt;
    }
    int              n = x.order();
    std::vector<int> mx(n), my(n);
    for (int p = 0; p < n; ++p) {
      mx[p] = cardinality(x.minimal_open(p));
      my[p] = cardinality(y.minimal_open(p));
    }
    ElementMap f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
      bool ok = true;
      for (int p = 0; p < n && ok; ++p) {
        ok = mx[p] == my[f[p]];
      }
      if (ok && x.opens().mapped(f) == y.opens()) {
        return f;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return std::nullopt;
  }

  namespace {

    std::vector<ElementMap> permutations(int n) {
      std::vector<ElementMap> out;
      ElementMap              f(n);
      std::iota(f.begin(), f.end(), 0);
      do {
        out.push_back(f);
      } while (std::next_permutation(f.begin(), f.end()));
      return out;
    }

    // pair index -> pair index, per permutation
    std::vector<std::vector<int>> build_pair_tables(int n) {
      std::vector<std::vector<int>> out;
      for (auto const& p : permutations(n)) {
        std::vector<int> table(number_of_pairs(n));
        for (int b = 0; b < n; ++b) {
          for (int a = 0; a <= b; ++a) {
            table[pair_index(a, b)] = pair_index(p[a], p[b]);
          }
        }
        out.push_back(std::move(table));
      }
      return out;
    }

    std::vector<std::vector<int>> const& pair_tables(int n) {
      static std::mutex mtx;
      static std::array<std::vector<std::vector<int>>, max_graph_order + 1>
                                  cache;
      std::lock_guard<std::mutex> lock(mtx);
      if (cache[n].empty()) {
        cache[n] = build_pair_tables(n);
      }
      return cache[n];
    }

    std::uint64_t apply_table(std::vector<int> const& table,
                              std::uint64_t           bits) {
      std::uint64_t out = 0;
      for (; bits != 0; bits &= bits - 1) {
        out |= std::uint64_t{1} << table[std::countr_zero(bits)];
      }
      return out;
    }

    int env_bound(int fallback) {
      if (char const* v = std::getenv("CONRAD_MAX_N")) {
        try {
          int n = std::stoi(v);
          if (n >= 1) {
            return n;
          }
        } catch (std::exception const&) {
        }
      }
      return fallback;
    }

  }  // namespace

  FiniteGraph canonical_form(FiniteGraph const& g) {
    std::uint64_t best = g.edges().bits();
    for (auto const& table : pair_tables(g.order())) {
      best = std::min(best, apply_table(table, g.edges().bits()));
    }
    return FiniteGraph(g.order(), g.policy(), EdgeSet(best));
  }

  FiniteSpace canonical_form(FiniteSpace const& x) {
    std::uint64_t best = x.opens().bits();
    for (auto const& p : permutations(x.order())) {
      best = std::min(best, x.opens().mapped(p).bits());
    }
    return FiniteSpace::unchecked(x.order(), Family(best));
  }

  int configured_graph_bound() {
    return env_bound(default_graph_bound);
  }

  int configured_space_bound() {
    return env_bound(default_space_bound);
  }

  std::vector<FiniteGraph> enumerate_graphs(int n, LoopPolicy policy) {
    return enumerate_graphs(n, policy, configured_graph_bound());
  }

  std::vector<FiniteGraph> enumerate_graphs(int        n,
                                            LoopPolicy policy,
                                            int        bound) {
    if (n < 1 || n > std::min(bound, max_graph_order)) {
      fail(ErrorCode::BoundExceeded,
           "graph enumeration bound is " + std::to_string(bound));
    }
    auto const& tables = pair_tables(n);
    auto allowed = EdgeSet::all_pairs(n, policy == LoopPolicy::LoopsAllowed)
                       .bits();
    std::vector<FiniteGraph> out;
    std::uint64_t            s = 0;
    while (true) {
      bool canonical = true;
      for (std::size_t t = 1; t < tables.size() && canonical; ++t) {
        canonical = apply_table(tables[t], s) >= s;
      }
      if (canonical) {
        out.emplace_back(n, policy, EdgeSet(s));
      }
      if (s == allowed) {
        break;
      }
      s = (s - allowed) & allowed;  // next submask in increasing order
    }
    return out;
  }

  std::vector<FiniteSpace> enumerate_spaces(int n) {
    return enumerate_spaces(n, configured_space_bound());
  }

  std::vector<FiniteSpace> enumerate_spaces(int n, int bound) {
    if (n < 1 || n > std::min(bound, max_space_order)) {
      fail(ErrorCode::BoundExceeded,
           "space enumeration bound is " + std::to_string(bound));
    }
    std::set<std::uint64_t> codes;
    for (Family f : all_topologies(n)) {
      codes.insert(canonical_form(FiniteSpace::unchecked(n, f)).opens().bits());
    }
    std::vector<FiniteSpace> out;
    for (auto c : codes) {
      out.push_back(FiniteSpace::unchecked(n, Family(c)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Substructures and maps
  ////////////////////////////////////////////////////////////////////////

  FiniteGraph induced(FiniteGraph const& g, Subset s) {
    s &= g.vertices();
    if (s == 0) {
      fail(ErrorCode::EmptySubset, "induced subgraph on no vertices");
    }
    return FiniteGraph(cardinality(s), g.policy(), g.edges().restricted_to(s));
  }

  FiniteSpace subspace(FiniteSpace const& x, Subset s) {
    s &= x.points();
    if (s == 0) {
      fail(ErrorCode::EmptySubset, "subspace on no points");
    }
    Family opens;
    for (Subset u : x.opens().members()) {
      opens.insert(compress(u & s, s));
    }
    return FiniteSpace::unchecked(cardinality(s), opens);
  }

  FiniteGraph completion(FiniteGraph const& g) {
    if (g.loops_allowed()) {
      fail(ErrorCode::PolicyMismatch, "completion is defined without loops");
    }
    return FiniteGraph(g.order(), g.policy(), g.possible_edges());
  }

  bool is_homomorphism(FiniteGraph const& g,
                       FiniteGraph const& h,
                       ElementMap const&  f) {
    if (static_cast<int>(f.size()) != g.order()) {
      return false;
    }
    for (int y : f) {
      if (y < 0 || y >= h.order()) {
        return false;
      }
    }
    return g.edges().mapped(f).subset_of(h.edges());
  }

  bool is_continuous(FiniteSpace const& x,
                     FiniteSpace const& y,
                     ElementMap const&  f) {
    if (static_cast<int>(f.size()) != x.order()) {
      return false;
    }
    for (int p : f) {
      if (p < 0 || p >= y.order()) {
        return false;
      }
    }
    for (Subset v : y.opens().members()) {
      if (!x.is_open(preimage_of(v, f))) {
        return false;
      }
    }
    return true;
  }

  std::vector<ElementMap> surjective_homomorphisms(FiniteGraph const& g,
                                                   FiniteGraph const& h) {
    std::vector<ElementMap> out;
    for (auto& f : all_maps(g.order(), h.order())) {
      if (is_surjective(f, h.order()) && is_homomorphism(g, h, f)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  std::vector<ElementMap> surjective_continuous_maps(FiniteSpace const& x,
                                                     FiniteSpace const& y) {
    std::vector<ElementMap> out;
    for (auto& f : all_maps(x.order(), y.order())) {
      if (is_surjective(f, y.order()) && is_continuous(x, y, f)) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Named structures
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(FiniteGraph const& g) {
    std::string out = "graph " + std::to_string(g.order())
                      + (g.loops_allowed() ? " loops {" : " noloops {");
    bool first = true;
    for (auto [a, b] : g.edges().pairs()) {
      out += (first ? "" : " ") + std::to_string(a) + std::to_string(b);
      first = false;
    }
    return out + "}";
  }

  std::string to_string(FiniteSpace const& x) {
    std::string out   = "space " + std::to_string(x.order()) + " {";
    bool        first = true;
    for (Subset u : x.opens().members()) {
      out += first ? "" : " ";
      first = false;
      if (u == 0) {
        out += "-";
      }
      for (int p : elements_of(u)) {
        out += std::to_string(p);
      }
    }
    return out + "}";
  }

  namespace named {

    FiniteGraph T() {
      return FiniteGraph(1, LoopPolicy::LoopsAllowed, EdgeSet());
    }

    FiniteGraph T0() {
      return FiniteGraph(1, LoopPolicy::LoopsAllowed, EdgeSet{{0, 0}});
    }

    FiniteGraph B(int i) {
      static std::array<EdgeSet, 6> const edges = {
          EdgeSet{},
          EdgeSet{{0, 1}},
          EdgeSet{{0, 0}},
          EdgeSet{{0, 0}, {1, 1}},
          EdgeSet{{0, 1}, {1, 1}},
          EdgeSet{{0, 0}, {0, 1}, {1, 1}},
      };
      if (i < 1 || i > 6) {
        fail(ErrorCode::InvalidStructure, "B_i exists for i in 1..6");
      }
      return FiniteGraph(2, LoopPolicy::LoopsAllowed, edges[i - 1]);
    }

    FiniteGraph A3() {
      return FiniteGraph(3,
                         LoopPolicy::LoopsAllowed,
                         EdgeSet{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {2, 1}});
    }

    FiniteGraph K(int n) {
      return FiniteGraph(n, LoopPolicy::NoLoops, EdgeSet::all_pairs(n, false));
    }

    FiniteGraph edgeless(int n) {
      return FiniteGraph(n, LoopPolicy::NoLoops, EdgeSet());
    }

    FiniteGraph path(int n) {
      EdgeSet e;
      for (int i = 0; i + 1 < n; ++i) {
        e.insert(i, i + 1);
      }
      return FiniteGraph(n, LoopPolicy::NoLoops, e);
    }

    FiniteGraph cycle(int n) {
      EdgeSet e;
      for (int i = 0; i < n; ++i) {
        e.insert(i, (i + 1) % n);
      }
      return FiniteGraph(n, LoopPolicy::NoLoops, e);
    }

    FiniteSpace point() {
      return FiniteSpace::unchecked(1, Family{0b0, 0b1});
    }

    FiniteSpace S2() {
      return FiniteSpace::unchecked(2, Family{0b00, 0b01, 0b11});
    }

    FiniteSpace I2() {
      return FiniteSpace::unchecked(2, Family{0b00, 0b11});
    }

    FiniteSpace D2() {
      return FiniteSpace::unchecked(2, Family{0b00, 0b01, 0b10, 0b11});
    }

  }  // namespace named

}  // namespace conrad
