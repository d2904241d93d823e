#include "conrad/loopless_congruence.hpp"

#include "conrad/error.hpp"

namespace conrad {

  namespace {

    void require_loopless(FiniteGraph const& g) {
      if (g.loops_allowed()) {
        fail(ErrorCode::PolicyMismatch,
             "expected a loopless graph; use the calculus with loops");
      }
    }

    void check_congruence(FiniteGraph const& g, LooplessCongruence const& theta) {
      if (!is_valid_lc(g, theta)) {
        fail(ErrorCode::InvalidCongruence,
             "not a congruence on the graph: " + to_string(theta));
      }
    }

    void check_list(FiniteGraph const&                  g,
                    std::span<LooplessCongruence const> list) {
      if (list.empty()) {
        fail(ErrorCode::EmptyList, "empty list of congruences");
      }
      for (auto const& theta : list) {
        check_congruence(g, theta);
      }
    }

    bool edge_inside_block(Partition const& p, EdgeSet e) {
      for (auto [a, b] : e.pairs()) {
        if (p.related(a, b)) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  LooplessCongruence const& validate_lc(FiniteGraph const&        g,
                                        LooplessCongruence const& theta) {
    require_loopless(g);
    if (theta.partition.size() != g.order()) {
      fail(ErrorCode::InvalidCongruence,
           "partition is not over the vertices of the graph");
    }
    if (edge_inside_block(theta.partition, g.edges() | theta.cedges)) {
      fail(ErrorCode::IndependenceViolated,
           "related vertices are joined by an edge");
    }
    if (!g.edges().subset_of(theta.cedges)
        || !theta.cedges.subset_of(g.possible_edges())) {
      fail(ErrorCode::EdgeSetOutOfRange,
           "congruence edge set is not between E_G and K_G");
    }
    if (saturate(theta.partition, theta.cedges) != theta.cedges) {
      fail(ErrorCode::SubstitutionViolated,
           "edge set is not closed under related vertices");
    }
    return theta;
  }

  bool is_valid_lc(FiniteGraph const& g, LooplessCongruence const& theta) {
    try {
      validate_lc(g, theta);
      return true;
    } catch (Error const& e) {
      if (e.code() == ErrorCode::PolicyMismatch) {
        throw;
      }
      return false;
    }
  }

  LooplessCongruence identity_lc(FiniteGraph const& g) {
    return {Partition::discrete(g.order()), g.edges()};
  }

  std::optional<LooplessCongruence> strongify_lc(FiniteGraph const& g,
                                                 Partition const&   p) {
    require_loopless(g);
    LooplessCongruence theta{p, saturate(p, g.edges())};
    if (edge_inside_block(p, theta.cedges)) {
      return std::nullopt;
    }
    return theta;
  }

  bool is_strong_lc(FiniteGraph const& g, LooplessCongruence const& theta) {
    return theta.cedges == saturate(theta.partition, g.edges());
  }

  LooplessCongruence kernel_lc(FiniteGraph const& g,
                               FiniteGraph const& h,
                               ElementMap const&  f) {
    require_loopless(g);
    require_loopless(h);
    return detail::kernel(g, h, f);
  }

  GraphQuotient quotient_lc(FiniteGraph const&        g,
                            LooplessCongruence const& theta) {
    check_congruence(g, theta);
    return detail::quotient(g, theta);
  }

  LooplessCongruence meet_lc(FiniteGraph const&                  g,
                             std::span<LooplessCongruence const> list) {
    check_list(g, list);
    return detail::meet(list);
  }

  LooplessCongruence meet_lc(FiniteGraph const&        g,
                             LooplessCongruence const& a,
                             LooplessCongruence const& b) {
    LooplessCongruence const list[] = {a, b};
    return meet_lc(g, list);
  }

  LooplessCongruence restrict_lc(FiniteGraph const&        g,
                                 LooplessCongruence const& theta,
                                 Subset                    s) {
    check_congruence(g, theta);
    if ((s & g.vertices()) == 0) {
      fail(ErrorCode::EmptySubset, "restriction to no vertices");
    }
    return detail::restrict(theta, s & g.vertices());
  }

  LooplessCongruence quotient_cong_lc(FiniteGraph const&        g,
                                      LooplessCongruence const& theta1,
                                      LooplessCongruence const& theta2) {
    check_congruence(g, theta1);
    check_congruence(g, theta2);
    if (!contained_in(theta1, theta2)) {
      fail(ErrorCode::NotContained,
           "first congruence is not contained in the second");
    }
    return detail::quotient_cong(theta1, theta2);
  }

  bool image_contained_lc(FiniteGraph const&        g,
                          FiniteGraph const&        h,
                          ElementMap const&         f,
                          LooplessCongruence const& theta,
                          LooplessCongruence const& gamma) {
    check_congruence(g, theta);
    check_congruence(h, gamma);
    if (!is_surjective(f, h.order())) {
      fail(ErrorCode::NotSurjective, "map is not surjective");
    }
    if (!is_homomorphism(g, h, f)) {
      fail(ErrorCode::NotHomomorphism, "map is not a homomorphism");
    }
    for (int a = 0; a < g.order(); ++a) {
      for (int b = a + 1; b < g.order(); ++b) {
        if (theta.partition.related(a, b)
            && !gamma.partition.related(f[a], f[b])) {
          return false;
        }
      }
    }
    return theta.cedges.mapped(f).subset_of(gamma.cedges);
  }

  GraphSubdirect check_subdirect_lc(FiniteGraph const&                  g,
                                    std::span<LooplessCongruence const> list) {
    check_list(g, list);
    return detail::subdirect(g, list, identity_lc(g));
  }

  std::vector<LooplessCongruence> enumerate_congruences_lc(
      FiniteGraph const& g) {
    require_loopless(g);
    return detail::enumerate(g, true);
  }

  bool is_subdirectly_irreducible_lc(FiniteGraph const& g) {
    return detail::subdirectly_irreducible(enumerate_congruences_lc(g),
                                           identity_lc(g));
  }

  std::vector<LooplessCongruence> birkhoff_complete_decomposition(
      FiniteGraph const& g) {
    require_loopless(g);
    int const n = g.order();
    // Each non-edge uv gets the congruence merging u and v with every
    // cross-block pair as an edge (quotient K_{n-1}); (=, K_G) separates the
    // vertices (quotient K_n).
    std::vector<LooplessCongruence> factors;
    for (auto [u, v] : (g.possible_edges() - g.edges()).pairs()) {
      std::vector<int> labels(n);
      for (int x = 0; x < n; ++x) {
        labels[x] = x == v ? u : x;
      }
      Partition p(std::move(labels));
      EdgeSet   cross;
      for (auto [a, b] : g.possible_edges().pairs()) {
        if (!p.related(a, b)) {
          cross.insert(a, b);
        }
      }
      factors.push_back({std::move(p), cross});
    }
    factors.push_back({Partition::discrete(n), g.possible_edges()});

    auto const iota = identity_lc(g);
    for (std::size_t i = 0; i < factors.size() && factors.size() > 1;) {
      auto rest = factors;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (detail::meet(rest) == iota) {
        factors = std::move(rest);
      } else {
        ++i;
      }
    }
    return factors;
  }

}  // namespace conrad
