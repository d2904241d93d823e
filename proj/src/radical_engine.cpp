#include "conrad/radical_engine.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "conrad/error.hpp"

namespace conrad {

  namespace {

    template <typename K>
    struct Ops;

    template <>
    struct Ops<TopoKind> {
      using S = FiniteSpace;
      using C = TopoCongruence;

      static void check_kind(S const&) {}
      static std::vector<C> congruences(S const& x) {
        return enumerate_congruences_tc(x);
      }
      static C identity(S const& x) {
        return identity_tc(x);
      }
      static S quotient(S const& x, C const& c) {
        return quotient_tc(x, c).space;
      }
      static C meet(S const& x, std::span<C const> list) {
        return meet_tc(x, list);
      }
      static bool leq(C const& a, C const& b) {
        return contained_in(a, b);
      }
      static bool is_strong(S const& x, C const& c) {
        return is_strong_tc(x, c);
      }
      static std::optional<C> strong(S const& x, Partition const& p) {
        return strongify_tc(x, p);
      }
      static C restrict(S const& x, C const& c, Subset s) {
        return restrict_tc(x, c, s);
      }
      static S sub(S const& x, Subset s) {
        return subspace(x, s);
      }
      static std::vector<ElementMap> surjections(S const& x, S const& y) {
        return surjective_continuous_maps(x, y);
      }
      static bool image_within(S const&          x,
                               S const&          y,
                               ElementMap const& f,
                               C const&          c,
                               C const&          d) {
        return contained_in(image_tc(x, y, f, c), d);
      }
      static void validate(S const& x, C const& c) {
        validate_tc(x, c);
      }
      static std::vector<S> enumerate(int n) {
        return enumerate_spaces(n, n);
      }
    };

    struct GraphOpsBase {
      using S = FiniteGraph;
      using C = GraphCongruence;

      static S quotient(S const& g, C const& c) {
        return detail::quotient(g, c).graph;
      }
      static bool leq(C const& a, C const& b) {
        return contained_in(a, b);
      }
      static C restrict(S const&, C const& c, Subset s) {
        return detail::restrict(c, s);
      }
      static S sub(S const& g, Subset s) {
        return induced(g, s);
      }
      static std::vector<ElementMap> surjections(S const& g, S const& h) {
        return surjective_homomorphisms(g, h);
      }
    };

    template <>
    struct Ops<LoopGraphKind> : GraphOpsBase {
      static void check_kind(S const& g) {
        if (!g.loops_allowed()) {
          fail(ErrorCode::KindMismatch, "expected a graph that admits loops");
        }
      }
      static std::vector<C> congruences(S const& g) {
        return enumerate_congruences_gc(g);
      }
      static C identity(S const& g) {
        return identity_gc(g);
      }
      static C meet(S const& g, std::span<C const> list) {
        return meet_gc(g, list);
      }
      static bool is_strong(S const& g, C const& c) {
        return is_strong_gc(g, c);
      }
      static std::optional<C> strong(S const& g, Partition const& p) {
        return strongify_gc(g, p);
      }
      static bool image_within(S const&          g,
                               S const&          h,
                               ElementMap const& f,
                               C const&          c,
                               C const&          d) {
        return contained_in(image_gc(g, h, f, c), d);
      }
      static void validate(S const& g, C const& c) {
        validate_gc(g, c);
      }
      static std::vector<S> enumerate(int n) {
        return enumerate_graphs(n, LoopPolicy::LoopsAllowed, n);
      }
    };

    template <>
    struct Ops<LooplessKind> : GraphOpsBase {
      static void check_kind(S const& g) {
        if (g.loops_allowed()) {
          fail(ErrorCode::KindMismatch, "expected a loopless graph");
        }
      }
      static std::vector<C> congruences(S const& g) {
        return enumerate_congruences_lc(g);
      }
      static C identity(S const& g) {
        return identity_lc(g);
      }
      static C meet(S const& g, std::span<C const> list) {
        return meet_lc(g, list);
      }
      static bool is_strong(S const& g, C const& c) {
        return is_strong_lc(g, c);
      }
      static std::optional<C> strong(S const& g, Partition const& p) {
        return strongify_lc(g, p);
      }
      static bool image_within(S const&          g,
                               S const&          h,
                               ElementMap const& f,
                               C const&          c,
                               C const&          d) {
        return image_contained_lc(g, h, f, c, d);
      }
      static void validate(S const& g, C const& c) {
        validate_lc(g, c);
      }
      static std::vector<S> enumerate(int n) {
        return enumerate_graphs(n, LoopPolicy::NoLoops, n);
      }
    };

    // sigma(x), checked to be a congruence on x.
    template <typename K>
    CongruenceOf<K> evaluate(RadicalAssignment<K> const& sigma,
                             StructureOf<K> const&       x) {
      auto theta = sigma(x);
      Ops<K>::validate(x, theta);
      return theta;
    }

    template <typename K>
    bool radical_class_member(RadicalAssignment<K> const& sigma,
                              StructureOf<K> const&       x) {
      return evaluate(sigma, x).partition.is_indiscrete();
    }

    template <typename K>
    CheckResult<K> failure(StructureOf<K> const& x, std::string detail) {
      return {false, x, std::move(detail)};
    }

    std::string subset_text(Subset s) {
      std::string out = "{";
      for (int e : elements_of(s)) {
        out += std::to_string(e);
      }
      return out + "}";
    }

    std::string map_text(ElementMap const& f) {
      std::string out = "[";
      for (std::size_t i = 0; i < f.size(); ++i) {
        out += (i ? " " : "") + std::to_string(f[i]);
      }
      return out + "]";
    }

    template <typename K>
    bool has_nontrivial_image_in(StructureOf<K> const&    x,
                                 ClassPredicate<K> const& m) {
      for (auto const& theta : Ops<K>::congruences(x)) {
        if (theta.partition.number_of_blocks() >= 2
            && m.contains(Ops<K>::quotient(x, theta))) {
          return true;
        }
      }
      return false;
    }

    template <typename K>
    bool has_nontrivial_sub_in(StructureOf<K> const&    x,
                               ClassPredicate<K> const& m) {
      for (Subset s = 1; s <= full_subset(x.order()); ++s) {
        if (std::popcount(s) >= 2 && m.contains(Ops<K>::sub(x, s))) {
          return true;
        }
      }
      return false;
    }

    // A strong congruence other than the identity whose classes lie in c.
    template <typename K>
    bool has_nontrivial_c_congruence(StructureOf<K> const&    x,
                                     ClassPredicate<K> const& c) {
      for (auto const& p : all_partitions(x.order())) {
        if (p.is_discrete()) {
          continue;
        }
        auto theta = Ops<K>::strong(x, p);
        if (theta && c_congruence_p(c, x, *theta)) {
          return true;
        }
      }
      return false;
    }

    template <typename K>
    std::optional<StructureOf<K>> first_difference(
        std::vector<StructureOf<K>> const& a,
        std::vector<StructureOf<K>> const& b,
        Universe<K> const&                 u) {
      std::set<StructureOf<K>> sa(a.begin(), a.end());
      std::set<StructureOf<K>> sb(b.begin(), b.end());
      for (auto const& x : u.structures) {
        if (sa.contains(x) != sb.contains(x)) {
          return x;
        }
      }
      return std::nullopt;
    }

    bool has_clique(FiniteGraph const& g, int k) {
      for (Subset s = 0; s <= full_subset(g.order()); ++s) {
        if (std::popcount(s) == k
            && EdgeSet::all_pairs(k, false).subset_of(
                g.edges().restricted_to(s))) {
          return true;
        }
      }
      return false;
    }

    int clique_parameter(std::string_view name, std::string_view prefix) {
      std::string_view digits = name.substr(prefix.size());
      int              k      = 0;
      auto [ptr, ec] = std::from_chars(digits.begin(), digits.end(), k);
      if (ec != std::errc{} || ptr != digits.end() || k < 1) {
        fail(ErrorCode::UnknownClass,
             "expected a positive size in '" + std::string(name) + "'");
      }
      return k;
    }

    template <typename K>
    ClassPredicate<K> make_class(std::string_view name,
                                 std::function<bool(StructureOf<K> const&)> rule) {
      return {std::string(name), std::move(rule)};
    }

    [[noreturn]] void unknown_class(std::string_view name) {
      fail(ErrorCode::UnknownClass, "no built-in class '" + std::string(name) + "'");
    }

  }  // namespace

  std::string_view to_string(Kind kind) noexcept {
    switch (kind) {
      case Kind::TopoSpace: return "topo";
      case Kind::LoopGraph: return "graph";
      case Kind::LooplessGraph: return "loopless";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes and universes
  ////////////////////////////////////////////////////////////////////////

  namespace {

  std::vector<std::string> class_names(TopoKind) {
    return {"all", "trivial", "indiscrete", "t0", "t1", "sierpinski-indiscrete"};
  }

  std::vector<std::string> class_names(LoopGraphKind) {
    return {"all",
            "trivial",
            "loops-everywhere",
            "at-most-one-loop",
            "complete-looped",
            "edgeless"};
  }

  std::vector<std::string> class_names(LooplessKind) {
    return {"all", "trivial", "complete", "edgeless", "kn-containing:N", "kn-free:N"};
  }

  ClassPredicate<TopoKind> named_class(TopoKind, std::string_view name) {
    using S = FiniteSpace;
    if (name == "all") {
      return make_class<TopoKind>(name, [](S const&) { return true; });
    }
    if (name == "trivial") {
      return make_class<TopoKind>(name, [](S const& x) { return x.is_trivial(); });
    }
    if (name == "indiscrete") {
      return make_class<TopoKind>(name,
                                  [](S const& x) { return x.is_indiscrete(); });
    }
    if (name == "t0") {
      return make_class<TopoKind>(name, [](S const& x) { return x.is_t0(); });
    }
    if (name == "t1") {
      return make_class<TopoKind>(name, [](S const& x) { return x.is_t1(); });
    }
    if (name == "sierpinski-indiscrete") {
      // T, S2 and I2
      return make_class<TopoKind>(name, [](S const& x) {
        return x.is_trivial() || (x.order() == 2 && !x.is_discrete());
      });
    }
    unknown_class(name);
  }

  ClassPredicate<LoopGraphKind> named_class(LoopGraphKind,
                                            std::string_view name) {
    using S = FiniteGraph;
    if (name == "all") {
      return make_class<LoopGraphKind>(name, [](S const&) { return true; });
    }
    if (name == "trivial") {
      return make_class<LoopGraphKind>(name,
                                       [](S const& g) { return g.is_trivial(); });
    }
    if (name == "loops-everywhere") {
      return make_class<LoopGraphKind>(name, [](S const& g) {
        return g.is_trivial() || g.loop_vertices() == g.vertices();
      });
    }
    if (name == "at-most-one-loop") {
      return make_class<LoopGraphKind>(name, [](S const& g) {
        return std::popcount(g.loop_vertices()) <= 1;
      });
    }
    if (name == "complete-looped") {
      return make_class<LoopGraphKind>(name, [](S const& g) {
        return g.edges() == g.possible_edges();
      });
    }
    if (name == "edgeless") {
      // T0 keeps the class abstract.
      return make_class<LoopGraphKind>(name, [](S const& g) {
        return g.edges().empty() || g.is_trivial();
      });
    }
    unknown_class(name);
  }

  ClassPredicate<LooplessKind> named_class(LooplessKind,
                                           std::string_view name) {
    using S = FiniteGraph;
    if (name == "all") {
      return make_class<LooplessKind>(name, [](S const&) { return true; });
    }
    if (name == "trivial") {
      return make_class<LooplessKind>(name,
                                      [](S const& g) { return g.is_trivial(); });
    }
    if (name == "complete") {
      return make_class<LooplessKind>(name, [](S const& g) {
        return g.edges() == g.possible_edges();
      });
    }
    if (name == "edgeless") {
      return make_class<LooplessKind>(name,
                                      [](S const& g) { return g.edges().empty(); });
    }
    if (name.starts_with("kn-containing:")) {
      int k = clique_parameter(name, "kn-containing:");
      return make_class<LooplessKind>(name, [k](S const& g) {
        return g.is_trivial() || has_clique(g, k);
      });
    }
    if (name.starts_with("kn-free:")) {
      int k = clique_parameter(name, "kn-free:");
      return make_class<LooplessKind>(name, [k](S const& g) {
        return g.is_trivial() || !has_clique(g, k);
      });
    }
    unknown_class(name);
  }

  }  // namespace

  template <typename K>
  ClassPredicate<K> builtin_class(std::string_view name) {
    return named_class(K{}, name);
  }

  template <typename K>
  std::vector<std::string> builtin_class_names() {
    return class_names(K{});
  }

  template <typename K>
  ClassPredicate<K> class_of_members(std::string                        name,
                                     std::vector<StructureOf<K>> const& members) {
    std::set<StructureOf<K>> canon;
    for (auto const& x : members) {
      canon.insert(canonical_form(x));
    }
    return {std::move(name), [canon = std::move(canon)](StructureOf<K> const& x) {
              return canon.contains(x);
            }};
  }

  template <typename K>
  Universe<K> make_universe(int max_n) {
    Universe<K> u;
    u.max_n = max_n;
    for (int n = 1; n <= max_n; ++n) {
      auto level = Ops<K>::enumerate(n);
      u.structures.insert(u.structures.end(), level.begin(), level.end());
    }
    return u;
  }

  template <typename K>
  RadicalAssignment<K> identity_rule() {
    return {"identity", [](StructureOf<K> const& x) { return Ops<K>::identity(x); }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Hoehnke radicals
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  CongruenceOf<K> hoehnke_radical(StructureOf<K> const&    x,
                                  ClassPredicate<K> const& m) {
    Ops<K>::check_kind(x);
    std::vector<CongruenceOf<K>> qualifying;
    for (auto const& theta : Ops<K>::congruences(x)) {
      if (m.contains(Ops<K>::quotient(x, theta))) {
        qualifying.push_back(theta);
      }
    }
    if (qualifying.empty()) {
      fail(ErrorCode::NoQualifyingCongruence,
           "no congruence has its quotient in " + m.name);
    }
    return Ops<K>::meet(x, qualifying);
  }

  template <typename K>
  RadicalAssignment<K> radical_from_class(ClassPredicate<K> const& m) {
    return {"radical(" + m.name + ")",
            [m](StructureOf<K> const& x) { return hoehnke_radical(x, m); }};
  }

  template <typename K>
  bool verify_H1(RadicalAssignment<K> const& sigma,
                 StructureOf<K> const&       x,
                 StructureOf<K> const&       y,
                 ElementMap const&           f) {
    Ops<K>::check_kind(x);
    Ops<K>::check_kind(y);
    return Ops<K>::image_within(x, y, f, evaluate(sigma, x), evaluate(sigma, y));
  }

  template <typename K>
  bool verify_H2(RadicalAssignment<K> const& sigma, StructureOf<K> const& x) {
    Ops<K>::check_kind(x);
    auto q = Ops<K>::quotient(x, evaluate(sigma, x));
    return evaluate(sigma, q) == Ops<K>::identity(q);
  }

  template <typename K>
  CheckResult<K> verify_H1(RadicalAssignment<K> const& sigma,
                           Universe<K> const&          u) {
    for (auto const& x : u.structures) {
      auto const sx = evaluate(sigma, x);
      for (auto const& y : u.structures) {
        if (y.order() > x.order()) {
          continue;
        }
        auto const sy = evaluate(sigma, y);
        for (auto const& f : Ops<K>::surjections(x, y)) {
          if (!Ops<K>::image_within(x, y, f, sx, sy)) {
            return failure<K>(x,
                              "H1 fails for " + map_text(f) + " onto "
                                  + to_string(y));
          }
        }
      }
    }
    return {};
  }

  template <typename K>
  CheckResult<K> verify_H2(RadicalAssignment<K> const& sigma,
                           Universe<K> const&          u) {
    for (auto const& x : u.structures) {
      if (!verify_H2(sigma, x)) {
        return failure<K>(x, "H2 fails: the radical of the quotient is not the identity");
      }
    }
    return {};
  }

  template <typename K>
  bool in_radical_class(RadicalAssignment<K> const& sigma,
                        StructureOf<K> const&       x) {
    return radical_class_member(sigma, x);
  }

  template <typename K>
  bool in_semisimple_class(RadicalAssignment<K> const& sigma,
                           StructureOf<K> const&       x) {
    return evaluate(sigma, x) == Ops<K>::identity(x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Kurosh-Amitsur conditions
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  CheckResult<K> is_complete(RadicalAssignment<K> const& sigma,
                             Universe<K> const&          u) {
    for (auto const& x : u.structures) {
      auto const         sx = evaluate(sigma, x);
      std::map<Subset, bool> block_in_r;
      auto in_r = [&](Subset b) {
        auto [it, fresh] = block_in_r.try_emplace(b, false);
        if (fresh) {
          it->second = radical_class_member(sigma, Ops<K>::sub(x, b));
        }
        return it->second;
      };
      for (auto const& p : all_partitions(x.order())) {
        auto theta = Ops<K>::strong(x, p);
        if (!theta) {
          continue;
        }
        auto const blocks = p.blocks();
        if (std::all_of(blocks.begin(), blocks.end(), in_r)
            && !Ops<K>::leq(*theta, sx)) {
          return failure<K>(x,
                            "strong congruence " + to_string(*theta)
                                + " has radical classes but is not below "
                                + to_string(sx));
        }
      }
    }
    return {};
  }

  template <typename K>
  CheckResult<K> is_idempotent(RadicalAssignment<K> const& sigma,
                               Universe<K> const&          u) {
    for (auto const& x : u.structures) {
      auto const sx = evaluate(sigma, x);
      for (Subset b : sx.partition.blocks()) {
        if (!radical_class_member(sigma, Ops<K>::sub(x, b))) {
          return failure<K>(x,
                            "class " + subset_text(b)
                                + " of the radical is not in the radical class");
        }
      }
    }
    return {};
  }

  template <typename K>
  CheckResult<K> is_strong_everywhere(RadicalAssignment<K> const& sigma,
                                      Universe<K> const&          u) {
    for (auto const& x : u.structures) {
      auto const sx = evaluate(sigma, x);
      if (!Ops<K>::is_strong(x, sx)) {
        return failure<K>(x, "radical " + to_string(sx) + " is not strong");
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Class operators
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  std::vector<StructureOf<K>> members_of(ClassPredicate<K> const& m,
                                         Universe<K> const&       u) {
    std::vector<StructureOf<K>> out;
    std::copy_if(u.structures.begin(),
                 u.structures.end(),
                 std::back_inserter(out),
                 [&m](auto const& x) { return m.contains(x); });
    return out;
  }

  template <typename K>
  std::vector<StructureOf<K>> U_operator(ClassPredicate<K> const& m,
                                         Universe<K> const&       u) {
    std::vector<StructureOf<K>> out;
    for (auto const& x : u.structures) {
      if (!has_nontrivial_image_in(x, m)) {
        out.push_back(x);
      }
    }
    return out;
  }

  template <typename K>
  std::vector<StructureOf<K>> S_operator(ClassPredicate<K> const& m,
                                         Universe<K> const&       u) {
    std::vector<StructureOf<K>> out;
    for (auto const& x : u.structures) {
      if (!has_nontrivial_sub_in(x, m)) {
        out.push_back(x);
      }
    }
    return out;
  }

  template <typename K>
  CheckResult<K> is_connectedness(ClassPredicate<K> const& c,
                                  Universe<K> const&       u) {
    auto const members = members_of(c, u);
    auto const sc      = class_of_members<K>("S" + c.name, S_operator(c, u));
    auto const usc     = U_operator(sc, u);
    if (auto x = first_difference(members, usc, u)) {
      return failure<K>(*x, "C differs from USC");
    }
    // Every non-trivial image has a non-trivial C-congruence (a non-trivial
    // induced subgraph in C for loopless graphs, which lack the strong
    // congruences needed).
    for (auto const& x : u.structures) {
      bool form = true;
      for (auto const& theta : Ops<K>::congruences(x)) {
        if (theta.partition.number_of_blocks() < 2) {
          continue;
        }
        auto const y = Ops<K>::quotient(x, theta);
        bool       ok;
        if constexpr (K::kind == Kind::LooplessGraph) {
          ok = has_nontrivial_sub_in(y, c);
        } else {
          ok = has_nontrivial_c_congruence(y, c);
        }
        if (!ok) {
          form = false;
          break;
        }
      }
      if (form != c.contains(x)) {
        return failure<K>(x, "defect: congruence form disagrees with membership");
      }
    }
    return {};
  }

  template <typename K>
  CheckResult<K> is_disconnectedness(ClassPredicate<K> const& d,
                                     Universe<K> const&       u) {
    auto const members = members_of(d, u);
    auto const ud      = class_of_members<K>("U" + d.name, U_operator(d, u));
    auto const sud     = S_operator(ud, u);
    if (auto x = first_difference(members, sud, u)) {
      return failure<K>(*x, "D differs from SUD");
    }
    for (auto const& x : u.structures) {
      bool form = true;
      for (Subset s = 1; s <= full_subset(x.order()) && form; ++s) {
        if (std::popcount(s) >= 2) {
          form = has_nontrivial_image_in(Ops<K>::sub(x, s), d);
        }
      }
      if (form != d.contains(x)) {
        return failure<K>(x, "defect: substructure form disagrees with membership");
      }
    }
    return {};
  }

  template <typename K>
  bool c_congruence_p(ClassPredicate<K> const& c,
                      StructureOf<K> const&    x,
                      CongruenceOf<K> const&   rho) {
    Ops<K>::validate(x, rho);
    if (!Ops<K>::is_strong(x, rho)) {
      return false;
    }
    for (Subset b : rho.partition.blocks()) {
      if (!c.contains(Ops<K>::sub(x, b))) {
        return false;
      }
    }
    return true;
  }

  template <typename K>
  std::vector<CongruenceOf<K>> c_congruences(ClassPredicate<K> const& c,
                                             StructureOf<K> const&    x) {
    Ops<K>::check_kind(x);
    std::vector<CongruenceOf<K>> out;
    for (auto const& p : all_partitions(x.order())) {
      auto theta = Ops<K>::strong(x, p);
      if (theta && c_congruence_p(c, x, *theta)) {
        out.push_back(*theta);
      }
    }
    return out;
  }

  template <typename K>
  CongruenceOf<K> rho_sum(ClassPredicate<K> const& c, StructureOf<K> const& x) {
    if constexpr (K::kind == Kind::LooplessGraph) {
      fail(ErrorCode::KindUnsupported,
           "loopless congruences have no join, so there is no sum");
    } else {
      auto const list = c_congruences(c, x);
      if (list.empty()) {
        fail(ErrorCode::InvalidCongruence,
             "no " + c.name + "-congruence on " + to_string(x));
      }
      if constexpr (K::kind == Kind::TopoSpace) {
        return join_tc(x, list);
      } else {
        return join_gc(x, list);
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Heredity
  ////////////////////////////////////////////////////////////////////////

  namespace {

    enum class Heredity { R, S, Ideal };

    template <typename K>
    CheckResult<K> check_heredity(RadicalAssignment<K> const& sigma,
                                  Universe<K> const&          u,
                                  Heredity                    mode) {
      for (auto const& x : u.structures) {
        auto const sx = evaluate(sigma, x);
        for (Subset s = 1; s <= full_subset(x.order()); ++s) {
          auto const restricted = Ops<K>::restrict(x, sx, s);
          auto const own        = evaluate(sigma, Ops<K>::sub(x, s));
          bool       ok         = true;
          switch (mode) {
            case Heredity::R: ok = Ops<K>::leq(restricted, own); break;
            case Heredity::S: ok = Ops<K>::leq(own, restricted); break;
            case Heredity::Ideal: ok = restricted == own; break;
          }
          if (!ok) {
            return failure<K>(x,
                              "on " + subset_text(s) + ": restriction "
                                  + to_string(restricted) + " vs radical "
                                  + to_string(own));
          }
        }
      }
      return {};
    }

  }  // namespace

  template <typename K>
  CheckResult<K> r_hereditary(RadicalAssignment<K> const& sigma,
                              Universe<K> const&          u) {
    return check_heredity(sigma, u, Heredity::R);
  }

  template <typename K>
  CheckResult<K> s_hereditary(RadicalAssignment<K> const& sigma,
                              Universe<K> const&          u) {
    return check_heredity(sigma, u, Heredity::S);
  }

  template <typename K>
  CheckResult<K> ideal_hereditary(RadicalAssignment<K> const& sigma,
                                  Universe<K> const&          u) {
    return check_heredity(sigma, u, Heredity::Ideal);
  }

  ////////////////////////////////////////////////////////////////////////
  // Classes of a radical
  ////////////////////////////////////////////////////////////////////////

  template <typename K>
  std::vector<StructureOf<K>> semisimple_members(
      RadicalAssignment<K> const& sigma,
      Universe<K> const&          u) {
    std::vector<StructureOf<K>> out;
    for (auto const& x : u.structures) {
      if (in_semisimple_class(sigma, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  template <typename K>
  std::vector<StructureOf<K>> radical_members(RadicalAssignment<K> const& sigma,
                                              Universe<K> const&          u) {
    std::vector<StructureOf<K>> out;
    for (auto const& x : u.structures) {
      if (radical_class_member(sigma, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  template <typename K>
  std::vector<StructureOf<K>> subdirect_closure(ClassPredicate<K> const& m,
                                                Universe<K> const&       u) {
    std::vector<StructureOf<K>> out;
    for (auto const& x : u.structures) {
      // Adding factors only shrinks the meet, so the full qualifying family
      // reaches the identity whenever any subfamily does.
      try {
        if (hoehnke_radical(x, m) == Ops<K>::identity(x)) {
          out.push_back(x);
        }
      } catch (Error const& e) {
        if (e.code() != ErrorCode::NoQualifyingCongruence) {
          throw;
        }
      }
    }
    return out;
  }

  template <typename K>
  CheckResult<K> complementary_pair_check(ClassPredicate<K> const& c,
                                          ClassPredicate<K> const& d,
                                          Universe<K> const&       u) {
    for (auto const& x : u.structures) {
      bool in_c = c.contains(x);
      bool in_d = d.contains(x);
      if (in_c && in_d && !x.is_trivial()) {
        return failure<K>(x, "non-trivial member of both classes");
      }
      if (!in_c && !in_d) {
        return failure<K>(x, "member of neither class");
      }
    }
    if (auto x = first_difference(members_of(d, u), S_operator(c, u), u)) {
      return failure<K>(*x, "D differs from SC");
    }
    if (auto x = first_difference(members_of(c, u), U_operator(d, u), u)) {
      return failure<K>(*x, "C differs from UD");
    }
    return {};
  }

  bool complete_graphs_contained(ClassPredicate<LooplessKind> const& m,
                                 Universe<LooplessKind> const&       u) {
    for (auto const& g : u.structures) {
      if (g.edges() == g.possible_edges() && !m.contains(g)) {
        return false;
      }
    }
    return true;
  }

  CheckResult<LooplessKind> loopless_degeneracy_check(
      Universe<LooplessKind> const&       u,
      ClassPredicate<LooplessKind> const& m) {
    if (!complete_graphs_contained(m, u)) {
      fail(ErrorCode::LemmaConditionFailed,
           "some complete graph of the universe is not in " + m.name
               + ", so not every graph has a congruence with quotient in it");
    }
    for (auto const& g : u.structures) {
      auto const rho = hoehnke_radical(g, m);
      if (rho != identity_lc(g)) {
        return failure<LooplessKind>(g, "radical is " + to_string(rho));
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Ideal-hereditary catalogs
  ////////////////////////////////////////////////////////////////////////

  namespace {

    void check_catalog_id(char id, char last) {
      if (id < 'a' || id > last) {
        fail(ErrorCode::BadCatalogId,
             std::string("catalog ids run from a to ") + last + ", got '" + id
                 + "'");
      }
    }

  }  // namespace

  TopoCongruence catalog_topological(FiniteSpace const& x, char id) {
    check_catalog_id(id, 'e');
    int const  n = x.order();
    auto const discrete = Partition::discrete(n);
    TopoCongruence out;
    switch (id) {
      case 'a': out = universal_tc(x); break;
      case 'b': {
        // Points with the same minimal open set are identified.
        std::vector<Subset> blocks;
        for (int p = 0; p < n; ++p) {
          Subset b = 0;
          for (int q = 0; q < n; ++q) {
            if (x.minimal_open(q) == x.minimal_open(p)) {
              b |= Subset{1} << q;
            }
          }
          if (std::find(blocks.begin(), blocks.end(), b) == blocks.end()) {
            blocks.push_back(b);
          }
        }
        out = {Partition::from_blocks(n, blocks), x.opens()};
        break;
      }
      case 'c': out = identity_tc(x); break;
      case 'd': out = {discrete, indiscrete_topology(n)}; break;
      case 'e':
        out = {discrete, x.is_t1() ? x.opens() : indiscrete_topology(n)};
        break;
    }
    return validate_tc(x, out);
  }

  GraphCongruence catalog_graph(FiniteGraph const& g, char id) {
    check_catalog_id(id, 'h');
    if (!g.loops_allowed()) {
      fail(ErrorCode::PolicyMismatch, "the graph catalog is for graphs with loops");
    }
    int const    n     = g.order();
    Subset const loops = g.loop_vertices();
    Subset const rest  = g.vertices() & ~loops;
    auto const   discrete = Partition::discrete(n);
    // Singletons, with `merged` as one more class when non-empty.
    auto merging = [n](Subset merged) {
      std::vector<Subset> blocks;
      if (merged != 0) {
        blocks.push_back(merged);
      }
      for (int v = 0; v < n; ++v) {
        if (!has_element(merged, v)) {
          blocks.push_back(Subset{1} << v);
        }
      }
      return Partition::from_blocks(n, blocks);
    };
    GraphCongruence out;
    switch (id) {
      case 'a': out = strongify_gc(g, Partition::indiscrete(n)); break;
      case 'b': out = universal_gc(g); break;
      case 'c': out = strongify_gc(g, merging(loops)); break;
      case 'd':
        // A loop is added at every loopless vertex.
        out = {discrete, g.edges() | EdgeSet::loops_on(rest)};
        break;
      case 'e': out = {discrete, g.possible_edges()}; break;
      case 'f': out = identity_gc(g); break;
      case 'g':
        out = {discrete, g.edges() | EdgeSet::product(loops, loops)};
        break;
      case 'h':
        out = {discrete, g.edges() | EdgeSet::product(loops, g.vertices())};
        break;
    }
    return validate_gc(g, out);
  }

  RadicalAssignment<TopoKind> topological_catalog(char id) {
    check_catalog_id(id, 'e');
    return {std::string("topo-") + id,
            [id](FiniteSpace const& x) { return catalog_topological(x, id); }};
  }

  RadicalAssignment<LoopGraphKind> graph_catalog(char id) {
    check_catalog_id(id, 'h');
    return {std::string("graph-") + id,
            [id](FiniteGraph const& g) { return catalog_graph(g, id); }};
  }

  ////////////////////////////////////////////////////////////////////////
  // Instantiations
  ////////////////////////////////////////////////////////////////////////

#define CONRAD_INSTANTIATE(K)                                                  \
  template ClassPredicate<K> builtin_class<K>(std::string_view);               \
  template std::vector<std::string> builtin_class_names<K>();                  \
  template ClassPredicate<K> class_of_members<K>(                              \
      std::string, std::vector<StructureOf<K>> const&);                        \
  template Universe<K>        make_universe<K>(int);                           \
  template RadicalAssignment<K> identity_rule<K>();                            \
  template CongruenceOf<K>    hoehnke_radical<K>(StructureOf<K> const&,        \
                                              ClassPredicate<K> const&);       \
  template RadicalAssignment<K> radical_from_class<K>(ClassPredicate<K> const&); \
  template bool verify_H1<K>(RadicalAssignment<K> const&,                      \
                             StructureOf<K> const&,                            \
                             StructureOf<K> const&,                            \
                             ElementMap const&);                               \
  template bool verify_H2<K>(RadicalAssignment<K> const&,                      \
                             StructureOf<K> const&);                           \
  template CheckResult<K> verify_H1<K>(RadicalAssignment<K> const&,            \
                                       Universe<K> const&);                    \
  template CheckResult<K> verify_H2<K>(RadicalAssignment<K> const&,            \
                                       Universe<K> const&);                    \
  template bool in_radical_class<K>(RadicalAssignment<K> const&,               \
                                    StructureOf<K> const&);                    \
  template bool in_semisimple_class<K>(RadicalAssignment<K> const&,            \
                                       StructureOf<K> const&);                 \
  template CheckResult<K> is_complete<K>(RadicalAssignment<K> const&,          \
                                         Universe<K> const&);                  \
  template CheckResult<K> is_idempotent<K>(RadicalAssignment<K> const&,        \
                                           Universe<K> const&);                \
  template CheckResult<K> is_strong_everywhere<K>(RadicalAssignment<K> const&, \
                                                  Universe<K> const&);         \
  template std::vector<StructureOf<K>> U_operator<K>(ClassPredicate<K> const&, \
                                                     Universe<K> const&);      \
  template std::vector<StructureOf<K>> S_operator<K>(ClassPredicate<K> const&, \
                                                     Universe<K> const&);      \
  template std::vector<StructureOf<K>> members_of<K>(ClassPredicate<K> const&, \
                                                     Universe<K> const&);      \
  template CheckResult<K> is_connectedness<K>(ClassPredicate<K> const&,        \
                                              Universe<K> const&);             \
  template CheckResult<K> is_disconnectedness<K>(ClassPredicate<K> const&,     \
                                                 Universe<K> const&);          \
  template bool c_congruence_p<K>(ClassPredicate<K> const&,                    \
                                  StructureOf<K> const&,                       \
                                  CongruenceOf<K> const&);                     \
  template std::vector<CongruenceOf<K>> c_congruences<K>(                      \
      ClassPredicate<K> const&, StructureOf<K> const&);                        \
  template CongruenceOf<K> rho_sum<K>(ClassPredicate<K> const&,                \
                                      StructureOf<K> const&);                  \
  template CheckResult<K> r_hereditary<K>(RadicalAssignment<K> const&,         \
                                          Universe<K> const&);                 \
  template CheckResult<K> s_hereditary<K>(RadicalAssignment<K> const&,         \
                                          Universe<K> const&);                 \
  template CheckResult<K> ideal_hereditary<K>(RadicalAssignment<K> const&,     \
                                              Universe<K> const&);             \
  template std::vector<StructureOf<K>> semisimple_members<K>(                  \
      RadicalAssignment<K> const&, Universe<K> const&);                        \
  template std::vector<StructureOf<K>> radical_members<K>(                     \
      RadicalAssignment<K> const&, Universe<K> const&);                        \
  template std::vector<StructureOf<K>> subdirect_closure<K>(                   \
      ClassPredicate<K> const&, Universe<K> const&);                           \
  template CheckResult<K> complementary_pair_check<K>(                         \
      ClassPredicate<K> const&, ClassPredicate<K> const&, Universe<K> const&);

  CONRAD_INSTANTIATE(TopoKind)
  CONRAD_INSTANTIATE(LoopGraphKind)
  CONRAD_INSTANTIATE(LooplessKind)

#undef CONRAD_INSTANTIATE

}  // namespace conrad
