#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conrad/bits.hpp"

namespace conrad {

  ////////////////////////////////////////////////////////////////////////
  // EdgeSet: a set of unordered vertex pairs {a, b} (a == b is a loop)
  ////////////////////////////////////////////////////////////////////////

  // Pairs are indexed by b*(b+1)/2 + a for a <= b, so a graph on n vertices
  // uses the low n*(n+1)/2 bits.
  constexpr int pair_index(int a, int b) noexcept {
    if (a > b) {
      std::swap(a, b);
    }
    return b * (b + 1) / 2 + a;
  }

  constexpr int number_of_pairs(int n) noexcept {
    return n * (n + 1) / 2;
  }

  class EdgeSet {
   public:
    constexpr EdgeSet() = default;
    constexpr explicit EdgeSet(std::uint64_t bits) : _bits(bits) {}
    EdgeSet(std::initializer_list<std::pair<int, int>> pairs);

    // Every pair on n vertices, with or without the loops.
    static EdgeSet all_pairs(int n, bool with_loops);
    static EdgeSet loops_on(Subset s);
    // A x B as a set of unordered pairs.
    static EdgeSet product(Subset a, Subset b);

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] bool contains(int a, int b) const noexcept {
      return (_bits >> pair_index(a, b)) & 1u;
    }
    void insert(int a, int b) noexcept {
      _bits |= std::uint64_t{1} << pair_index(a, b);
    }
    void erase(int a, int b) noexcept {
      _bits &= ~(std::uint64_t{1} << pair_index(a, b));
    }
    [[nodiscard]] bool empty() const noexcept {
      return _bits == 0;
    }
    [[nodiscard]] int size() const noexcept {
      return std::popcount(_bits);
    }
    [[nodiscard]] bool subset_of(EdgeSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    [[nodiscard]] bool intersects(EdgeSet other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    // Pairs (a, b) with a <= b, in index order.
    [[nodiscard]] std::vector<std::pair<int, int>> pairs() const;

    // Image of every pair under a vertex map.
    [[nodiscard]] EdgeSet mapped(ElementMap const& f) const;
    // Pairs inside `s`, relabelled to 0..|s|-1.
    [[nodiscard]] EdgeSet restricted_to(Subset s) const;

    friend constexpr EdgeSet operator|(EdgeSet a, EdgeSet b) noexcept {
      return EdgeSet(a._bits | b._bits);
    }
    friend constexpr EdgeSet operator&(EdgeSet a, EdgeSet b) noexcept {
      return EdgeSet(a._bits & b._bits);
    }
    friend constexpr EdgeSet operator-(EdgeSet a, EdgeSet b) noexcept {
      return EdgeSet(a._bits & ~b._bits);
    }
    friend constexpr bool operator==(EdgeSet, EdgeSet) = default;
    friend constexpr auto operator<=>(EdgeSet, EdgeSet) = default;

   private:
    std::uint64_t _bits = 0;
  };

  ////////////////////////////////////////////////////////////////////////
  // Family: a set of subsets of 0..n-1 (n <= 6), one bit per subset
  ////////////////////////////////////////////////////////////////////////

  class Family {
   public:
    constexpr Family() = default;
    constexpr explicit Family(std::uint64_t bits) : _bits(bits) {}
    Family(std::initializer_list<Subset> members);

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] constexpr bool contains(Subset s) const noexcept {
      return (_bits >> s) & 1u;
    }
    constexpr void insert(Subset s) noexcept {
      _bits |= std::uint64_t{1} << s;
    }
    [[nodiscard]] int size() const noexcept {
      return std::popcount(_bits);
    }
    [[nodiscard]] bool subset_of(Family other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    // Members in increasing mask order.
    [[nodiscard]] std::vector<Subset> members() const;

    [[nodiscard]] Family mapped(ElementMap const& f) const;

    friend constexpr Family operator|(Family a, Family b) noexcept {
      return Family(a._bits | b._bits);
    }
    friend constexpr Family operator&(Family a, Family b) noexcept {
      return Family(a._bits & b._bits);
    }
    friend constexpr bool operator==(Family, Family) = default;
    friend constexpr auto operator<=>(Family, Family) = default;

   private:
    std::uint64_t _bits = 0;
  };

  // Smallest family containing `f`, the empty set and the full set that is
  // closed under pairwise union and intersection.
  Family topology_generated_by(int n, Family f);
  bool   is_topology(int n, Family f);
  Family indiscrete_topology(int n);
  Family discrete_topology(int n);

  ////////////////////////////////////////////////////////////////////////
  // FiniteGraph
  ////////////////////////////////////////////////////////////////////////

  enum class LoopPolicy { LoopsAllowed, NoLoops };

  class FiniteGraph {
   public:
    FiniteGraph() = default;
    // Throws InvalidStructure when the edge set does not fit n and the policy.
    FiniteGraph(int n, LoopPolicy policy, EdgeSet edges);

    [[nodiscard]] int order() const noexcept {
      return _n;
    }
    [[nodiscard]] LoopPolicy policy() const noexcept {
      return _policy;
    }
    [[nodiscard]] bool loops_allowed() const noexcept {
      return _policy == LoopPolicy::LoopsAllowed;
    }
    [[nodiscard]] EdgeSet edges() const noexcept {
      return _edges;
    }
    [[nodiscard]] bool has_edge(int a, int b) const noexcept {
      return _edges.contains(a, b);
    }
    [[nodiscard]] Subset vertices() const noexcept {
      return full_subset(_n);
    }
    // C_G (loops allowed) or K_G (no loops): every admissible pair.
    [[nodiscard]] EdgeSet possible_edges() const {
      return EdgeSet::all_pairs(_n, loops_allowed());
    }
    // Vertices carrying a loop.
    [[nodiscard]] Subset loop_vertices() const;
    [[nodiscard]] bool   is_trivial() const noexcept {
      return _n == 1;
    }

    friend bool operator==(FiniteGraph const&, FiniteGraph const&) = default;
    friend auto operator<=>(FiniteGraph const& a, FiniteGraph const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._edges.bits() <=> b._edges.bits();
    }

   private:
    int        _n      = 1;
    LoopPolicy _policy = LoopPolicy::LoopsAllowed;
    EdgeSet    _edges;
  };

  ////////////////////////////////////////////////////////////////////////
  // FiniteSpace
  ////////////////////////////////////////////////////////////////////////

  class FiniteSpace {
   public:
    FiniteSpace() = default;
    // Validating constructor; same errors as validate_space.
    FiniteSpace(int n, Family opens);

    // Skips validation; `opens` must already be a topology on 0..n-1.
    static FiniteSpace unchecked(int n, Family opens) {
      FiniteSpace x;
      x._n     = n;
      x._opens = opens;
      return x;
    }

    [[nodiscard]] int order() const noexcept {
      return _n;
    }
    [[nodiscard]] Family opens() const noexcept {
      return _opens;
    }
    [[nodiscard]] bool is_open(Subset s) const noexcept {
      return _opens.contains(s);
    }
    [[nodiscard]] Subset points() const noexcept {
      return full_subset(_n);
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return _n == 1;
    }
    // Smallest open set containing x.
    [[nodiscard]] Subset minimal_open(int x) const;

    [[nodiscard]] bool is_t0() const;
    [[nodiscard]] bool is_t1() const;
    [[nodiscard]] bool is_indiscrete() const noexcept {
      return _opens == indiscrete_topology(_n);
    }
    [[nodiscard]] bool is_discrete() const noexcept {
      return _opens == discrete_topology(_n);
    }

    friend bool operator==(FiniteSpace const&, FiniteSpace const&) = default;
    friend auto operator<=>(FiniteSpace const& a, FiniteSpace const& b) {
      if (auto c = a._n <=> b._n; c != 0) {
        return c;
      }
      return a._opens.bits() <=> b._opens.bits();
    }

   private:
    int    _n     = 1;
    Family _opens = Family(0b11);
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  FiniteSpace validate_space(int n, Family family);

  // Least (lexicographic in the image list) bijection f with
  // ab in E_G <=> f(a)f(b) in E_H, if any.
  std::optional<ElementMap> iso_graphs(FiniteGraph const& g,
                                       FiniteGraph const& h);
  // Least bijection carrying the opens of x exactly onto those of y.
  std::optional<ElementMap> homeo_spaces(FiniteSpace const& x,
                                         FiniteSpace const& y);

  // Representative with the least encoding in its isomorphism class.
  FiniteGraph canonical_form(FiniteGraph const& g);
  FiniteSpace canonical_form(FiniteSpace const& x);

  inline constexpr int default_graph_bound = 6;
  inline constexpr int default_space_bound = 4;

  // Bounds honour the CONRAD_MAX_N environment variable when set.
  int configured_graph_bound();
  int configured_space_bound();

  // One canonical representative per isomorphism class, sorted by encoding.
  std::vector<FiniteGraph> enumerate_graphs(int n, LoopPolicy policy);
  std::vector<FiniteGraph> enumerate_graphs(int n, LoopPolicy policy,
                                            int bound);
  std::vector<FiniteSpace> enumerate_spaces(int n);
  std::vector<FiniteSpace> enumerate_spaces(int n, int bound);

  // Every topology on 0..n-1 (not up to homeomorphism), sorted.
  std::vector<Family> const& all_topologies(int n);

  FiniteGraph induced(FiniteGraph const& g, Subset s);
  FiniteSpace subspace(FiniteSpace const& x, Subset s);
  FiniteGraph completion(FiniteGraph const& g);

  bool is_homomorphism(FiniteGraph const& g, FiniteGraph const& h,
                       ElementMap const& f);
  bool is_continuous(FiniteSpace const& x, FiniteSpace const& y,
                     ElementMap const& f);

  // Surjective homomorphisms / continuous maps, in lexicographic order.
  std::vector<ElementMap> surjective_homomorphisms(FiniteGraph const& g,
                                                   FiniteGraph const& h);
  std::vector<ElementMap> surjective_continuous_maps(FiniteSpace const& x,
                                                     FiniteSpace const& y);

  // One-line descriptions such as "graph 2 loops {00 01}" and
  // "space 2 {- 0 01}".
  std::string to_string(FiniteGraph const& g);
  std::string to_string(FiniteSpace const& x);

  ////////////////////////////////////////////////////////////////////////
  // Named structures
  ////////////////////////////////////////////////////////////////////////

  namespace named {
    FiniteGraph T();   // one vertex, no loop
    FiniteGraph T0();  // one vertex with a loop
    FiniteGraph B(int i);  // i in 1..6, two vertices
    FiniteGraph A3();
    // Loopless graphs.
    FiniteGraph K(int n);
    FiniteGraph edgeless(int n);
    FiniteGraph path(int n);
    FiniteGraph cycle(int n);

    FiniteSpace point();
    FiniteSpace S2();
    FiniteSpace I2();
    FiniteSpace D2();
  }  // namespace named

}  // namespace conrad
