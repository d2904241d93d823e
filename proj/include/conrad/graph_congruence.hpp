#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "conrad/partition.hpp"
#include "conrad/structures.hpp"

namespace conrad {

  // (~, E): an equivalence on the vertices and an edge set between E_G and
  // the possible edges, closed under substituting related vertices. Shared by
  // graphs with loops and, with the extra independence condition, by loopless
  // graphs.
  struct GraphCongruence {
    Partition partition;
    EdgeSet   cedges;

    friend bool operator==(GraphCongruence const&,
                           GraphCongruence const&) = default;
    friend auto operator<=>(GraphCongruence const& a,
                            GraphCongruence const& b) {
      if (auto c = a.partition <=> b.partition; c != 0) {
        return c;
      }
      return a.cedges.bits() <=> b.cedges.bits();
    }
  };

  std::string to_string(GraphCongruence const& theta);

  // {xy | x' ~ x, y' ~ y, x'y' in e}
  EdgeSet saturate(Partition const& p, EdgeSet e);

  bool contained_in(GraphCongruence const& a, GraphCongruence const& b);

  // Throws EdgeSetOutOfRange or SubstitutionViolated; PolicyMismatch for a
  // loopless carrier.
  GraphCongruence const& validate_gc(FiniteGraph const&     g,
                                     GraphCongruence const& theta);
  bool is_valid_gc(FiniteGraph const& g, GraphCongruence const& theta);

  GraphCongruence identity_gc(FiniteGraph const& g);
  GraphCongruence universal_gc(FiniteGraph const& g);

  GraphCongruence strongify_gc(FiniteGraph const& g, Partition const& p);
  bool is_strong_gc(FiniteGraph const& g, GraphCongruence const& theta);

  // f must be a homomorphism (NotHomomorphism otherwise).
  GraphCongruence kernel_gc(FiniteGraph const& g,
                            FiniteGraph const& h,
                            ElementMap const&  f);
  GraphCongruence strong_kernel_gc(FiniteGraph const& g,
                                   FiniteGraph const& h,
                                   ElementMap const&  f);

  struct GraphQuotient {
    FiniteGraph graph;
    ElementMap  projection;
  };

  GraphQuotient quotient_gc(FiniteGraph const& g, GraphCongruence const& theta);

  GraphCongruence meet_gc(FiniteGraph const&               g,
                          std::span<GraphCongruence const> list);
  GraphCongruence join_gc(FiniteGraph const&               g,
                          std::span<GraphCongruence const> list);
  GraphCongruence meet_gc(FiniteGraph const&     g,
                          GraphCongruence const& a,
                          GraphCongruence const& b);
  GraphCongruence join_gc(FiniteGraph const&     g,
                          GraphCongruence const& a,
                          GraphCongruence const& b);

  // Congruence on induced(g, s).
  GraphCongruence restrict_gc(FiniteGraph const&     g,
                              GraphCongruence const& theta,
                              Subset                 s);

  // theta2 / theta1 on g / theta1; requires theta1 contained in theta2.
  GraphCongruence quotient_cong_gc(FiniteGraph const&     g,
                                   GraphCongruence const& theta1,
                                   GraphCongruence const& theta2);

  // f(theta) = (theta + ker f) / ker f carried to h along [x] -> f(x).
  GraphCongruence image_gc(FiniteGraph const&     g,
                           FiniteGraph const&     h,
                           ElementMap const&      f,
                           GraphCongruence const& theta);

  struct GraphSubdirect {
    bool                     is_subdirect = false;
    std::vector<FiniteGraph> factors;
    // embedding[v][i] is the image of v in factor i
    std::vector<std::vector<int>> embedding;
    // The embedding is injective, reflects edges of the product and every
    // projection is onto.
    bool embedding_faithful = false;
  };

  GraphSubdirect check_subdirect_gc(FiniteGraph const&               g,
                                    std::span<GraphCongruence const> list);

  // Every congruence on g, sorted.
  std::vector<GraphCongruence> enumerate_congruences_gc(FiniteGraph const& g);

  bool is_subdirectly_irreducible_gc(FiniteGraph const& g);

  namespace detail {
    // Shared by both graph kinds; no validation.
    GraphQuotient quotient(FiniteGraph const& g, GraphCongruence const& theta);
    GraphCongruence kernel(FiniteGraph const& g,
                           FiniteGraph const& h,
                           ElementMap const&  f);
    GraphCongruence meet(std::span<GraphCongruence const> list);
    GraphCongruence restrict(GraphCongruence const& theta, Subset s);
    GraphCongruence quotient_cong(GraphCongruence const& theta1,
                                  GraphCongruence const& theta2);
    GraphSubdirect subdirect(FiniteGraph const&               g,
                             std::span<GraphCongruence const> list,
                             GraphCongruence const&           identity);
    // Congruences of g, where `independent` forbids edges inside blocks.
    std::vector<GraphCongruence> enumerate(FiniteGraph const& g,
                                           bool               independent);
    bool subdirectly_irreducible(std::vector<GraphCongruence> const& all,
                                 GraphCongruence const&              identity);
  }  // namespace detail

}  // namespace conrad
