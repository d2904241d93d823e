#pragma once

#include <optional>
#include <span>
#include <vector>

#include "conrad/graph_congruence.hpp"

namespace conrad {

  // Same shape as a congruence on a graph with loops, with the further
  // requirement that related vertices are never joined, neither by E_G nor
  // by the congruence edges.
  using LooplessCongruence = GraphCongruence;

  // Throws IndependenceViolated, EdgeSetOutOfRange or SubstitutionViolated
  // (checked in that order); PolicyMismatch for a carrier with loops.
  LooplessCongruence const& validate_lc(FiniteGraph const&        g,
                                        LooplessCongruence const& theta);
  bool is_valid_lc(FiniteGraph const& g, LooplessCongruence const& theta);

  LooplessCongruence identity_lc(FiniteGraph const& g);

  // Absent when the saturation of E_G puts an edge inside a block.
  std::optional<LooplessCongruence> strongify_lc(FiniteGraph const& g,
                                                 Partition const&   p);
  bool is_strong_lc(FiniteGraph const& g, LooplessCongruence const& theta);

  LooplessCongruence kernel_lc(FiniteGraph const& g,
                               FiniteGraph const& h,
                               ElementMap const&  f);

  GraphQuotient quotient_lc(FiniteGraph const&        g,
                            LooplessCongruence const& theta);

  LooplessCongruence meet_lc(FiniteGraph const&                  g,
                             std::span<LooplessCongruence const> list);
  LooplessCongruence meet_lc(FiniteGraph const&        g,
                             LooplessCongruence const& a,
                             LooplessCongruence const& b);

  LooplessCongruence restrict_lc(FiniteGraph const&        g,
                                 LooplessCongruence const& theta,
                                 Subset                    s);

  LooplessCongruence quotient_cong_lc(FiniteGraph const&        g,
                                      LooplessCongruence const& theta1,
                                      LooplessCongruence const& theta2);

  // Whether (f(~), f(E)) lies inside gamma, a congruence on h. There is no
  // join here, so the image is compared through its generators.
  bool image_contained_lc(FiniteGraph const&        g,
                          FiniteGraph const&        h,
                          ElementMap const&         f,
                          LooplessCongruence const& theta,
                          LooplessCongruence const& gamma);

  GraphSubdirect check_subdirect_lc(FiniteGraph const&                  g,
                                    std::span<LooplessCongruence const> list);

  std::vector<LooplessCongruence> enumerate_congruences_lc(FiniteGraph const& g);

  bool is_subdirectly_irreducible_lc(FiniteGraph const& g);

  // Congruences with complete quotients meeting to the identity.
  std::vector<LooplessCongruence> birkhoff_complete_decomposition(
      FiniteGraph const& g);

}  // namespace conrad
