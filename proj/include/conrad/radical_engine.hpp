#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conrad/graph_congruence.hpp"
#include "conrad/loopless_congruence.hpp"
#include "conrad/topo_congruence.hpp"

namespace conrad {

  enum class Kind { TopoSpace, LoopGraph, LooplessGraph };

  std::string_view to_string(Kind kind) noexcept;

  struct TopoKind {
    using Structure                 = FiniteSpace;
    using Congruence                = TopoCongruence;
    static constexpr Kind      kind = Kind::TopoSpace;
  };

  struct LoopGraphKind {
    using Structure                 = FiniteGraph;
    using Congruence                = GraphCongruence;
    static constexpr Kind      kind = Kind::LoopGraph;
  };

  struct LooplessKind {
    using Structure                 = FiniteGraph;
    using Congruence                = LooplessCongruence;
    static constexpr Kind      kind = Kind::LooplessGraph;
  };

  template <typename K>
  using StructureOf = typename K::Structure;
  template <typename K>
  using CongruenceOf = typename K::Congruence;

  // An abstract class: membership is decided on canonical forms, so it is
  // closed under isomorphic copies whatever the rule.
  template <typename K>
  struct ClassPredicate {
    std::string                              name;
    std::function<bool(StructureOf<K> const&)> rule;

    [[nodiscard]] bool contains(StructureOf<K> const& x) const {
      return rule(canonical_form(x));
    }
  };

  // Built-in classes by name; throws UnknownClass.
  //   spaces:     all trivial indiscrete t0 t1 sierpinski-indiscrete
  //   loops:      all trivial loops-everywhere at-most-one-loop
  //               complete-looped edgeless
  //   loopless:   all trivial complete edgeless kn-containing:N kn-free:N
  template <typename K>
  ClassPredicate<K> builtin_class(std::string_view name);
  template <typename K>
  std::vector<std::string> builtin_class_names();

  // The class of the listed structures up to isomorphism.
  template <typename K>
  ClassPredicate<K> class_of_members(std::string                        name,
                                     std::vector<StructureOf<K>> const& members);

  template <typename K>
  struct Universe {
    int                         max_n = 0;
    std::vector<StructureOf<K>> structures;
  };

  // Every structure of the kind with at most max_n points, one per
  // isomorphism class, ordered by size then encoding.
  template <typename K>
  Universe<K> make_universe(int max_n);

  template <typename K>
  struct RadicalAssignment {
    std::string                                                 name;
    std::function<CongruenceOf<K>(StructureOf<K> const&)> rule;

    CongruenceOf<K> operator()(StructureOf<K> const& x) const {
      return rule(x);
    }
  };

  template <typename K>
  struct CheckResult {
    bool                          ok = true;
    std::optional<StructureOf<K>> witness;
    std::string                   detail;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Meet of all congruences with quotient in M. Throws NoQualifyingCongruence
  // when there are none.
  template <typename K>
  CongruenceOf<K> hoehnke_radical(StructureOf<K> const&    x,
                                  ClassPredicate<K> const& m);

  template <typename K>
  RadicalAssignment<K> radical_from_class(ClassPredicate<K> const& m);

  // f(sigma_X) is contained in sigma_Y.
  template <typename K>
  bool verify_H1(RadicalAssignment<K> const& sigma,
                 StructureOf<K> const&       x,
                 StructureOf<K> const&       y,
                 ElementMap const&           f);
  // sigma(X / sigma_X) is the identity.
  template <typename K>
  bool verify_H2(RadicalAssignment<K> const& sigma, StructureOf<K> const& x);

  // H1 over every surjective morphism between members, H2 on every member.
  template <typename K>
  CheckResult<K> verify_H1(RadicalAssignment<K> const& sigma,
                           Universe<K> const&          u);
  template <typename K>
  CheckResult<K> verify_H2(RadicalAssignment<K> const& sigma,
                           Universe<K> const&          u);

  // X is in the radical class: the radical has a single class.
  template <typename K>
  bool in_radical_class(RadicalAssignment<K> const& sigma,
                        StructureOf<K> const&       x);
  template <typename K>
  bool in_semisimple_class(RadicalAssignment<K> const& sigma,
                           StructureOf<K> const&       x);

  template <typename K>
  CheckResult<K> is_complete(RadicalAssignment<K> const& sigma,
                             Universe<K> const&          u);
  template <typename K>
  CheckResult<K> is_idempotent(RadicalAssignment<K> const& sigma,
                               Universe<K> const&          u);
  template <typename K>
  CheckResult<K> is_strong_everywhere(RadicalAssignment<K> const& sigma,
                                      Universe<K> const&          u);

  // Members with no non-trivial image (quotient) in M.
  template <typename K>
  std::vector<StructureOf<K>> U_operator(ClassPredicate<K> const& m,
                                         Universe<K> const&       u);
  // Members with no non-trivial substructure in M.
  template <typename K>
  std::vector<StructureOf<K>> S_operator(ClassPredicate<K> const& m,
                                         Universe<K> const&       u);

  template <typename K>
  std::vector<StructureOf<K>> members_of(ClassPredicate<K> const& m,
                                         Universe<K> const&       u);

  // C = USC on the universe, cross-checked against: X in C iff every
  // non-trivial image of X has a non-trivial C-congruence. Disagreement is
  // reported as a defect.
  template <typename K>
  CheckResult<K> is_connectedness(ClassPredicate<K> const& c,
                                  Universe<K> const&       u);
  // D = SUD on the universe.
  template <typename K>
  CheckResult<K> is_disconnectedness(ClassPredicate<K> const& d,
                                     Universe<K> const&       u);

  // Strong, with every class in C.
  template <typename K>
  bool c_congruence_p(ClassPredicate<K> const& c,
                      StructureOf<K> const&    x,
                      CongruenceOf<K> const&   rho);
  template <typename K>
  std::vector<CongruenceOf<K>> c_congruences(ClassPredicate<K> const& c,
                                             StructureOf<K> const&    x);
  // Join of all C-congruences; KindUnsupported for loopless graphs.
  template <typename K>
  CongruenceOf<K> rho_sum(ClassPredicate<K> const& c, StructureOf<K> const& x);

  // restrict(sigma_X, S) against sigma(X restricted to S) for every member
  // and non-empty S.
  template <typename K>
  CheckResult<K> r_hereditary(RadicalAssignment<K> const& sigma,
                              Universe<K> const&          u);
  template <typename K>
  CheckResult<K> s_hereditary(RadicalAssignment<K> const& sigma,
                              Universe<K> const&          u);
  template <typename K>
  CheckResult<K> ideal_hereditary(RadicalAssignment<K> const& sigma,
                                  Universe<K> const&          u);

  template <typename K>
  std::vector<StructureOf<K>> semisimple_members(
      RadicalAssignment<K> const& sigma,
      Universe<K> const&          u);
  template <typename K>
  std::vector<StructureOf<K>> radical_members(RadicalAssignment<K> const& sigma,
                                              Universe<K> const&          u);

  // Members that are subdirect products of structures in M.
  template <typename K>
  std::vector<StructureOf<K>> subdirect_closure(ClassPredicate<K> const& m,
                                                Universe<K> const&       u);

  // C and D meet in the trivial structures, cover the universe, D = SC and
  // C = UD.
  template <typename K>
  CheckResult<K> complementary_pair_check(ClassPredicate<K> const& c,
                                          ClassPredicate<K> const& d,
                                          Universe<K> const&       u);

  // Every complete graph of the universe lies in M (the condition for every
  // member to have a congruence with quotient in M).
  bool complete_graphs_contained(ClassPredicate<LooplessKind> const& m,
                                 Universe<LooplessKind> const&       u);

  // Throws LemmaConditionFailed unless every complete graph is in M; then
  // checks that the radical of M is the identity on every member.
  CheckResult<LooplessKind> loopless_degeneracy_check(
      Universe<LooplessKind> const&       u,
      ClassPredicate<LooplessKind> const& m);

  // Ids 'a'..'e'; BadCatalogId otherwise.
  TopoCongruence catalog_topological(FiniteSpace const& x, char id);
  // Ids 'a'..'h'; BadCatalogId otherwise.
  GraphCongruence catalog_graph(FiniteGraph const& g, char id);

  RadicalAssignment<TopoKind>      topological_catalog(char id);
  RadicalAssignment<LoopGraphKind> graph_catalog(char id);

  // Constant rules, used in tests and by the CLI.
  template <typename K>
  RadicalAssignment<K> identity_rule();

}  // namespace conrad
