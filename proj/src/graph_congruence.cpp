#include "conrad/graph_congruence.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "conrad/error.hpp"

namespace conrad {

  namespace {

    void require_loops(FiniteGraph const& g) {
      if (!g.loops_allowed()) {
        fail(ErrorCode::PolicyMismatch,
             "expected a graph that admits loops; use the loopless calculus");
      }
    }

    void check_congruence(FiniteGraph const& g, GraphCongruence const& theta) {
      if (!is_valid_gc(g, theta)) {
        fail(ErrorCode::InvalidCongruence,
             "not a congruence on the graph: " + to_string(theta));
      }
    }

    void check_list(FiniteGraph const&               g,
                    std::span<GraphCongruence const> list) {
      if (list.empty()) {
        fail(ErrorCode::EmptyList, "empty list of congruences");
      }
      for (auto const& theta : list) {
        check_congruence(g, theta);
      }
    }

  }  // namespace

  std::string to_string(GraphCongruence const& theta) {
    std::ostringstream os;
    os << "(" << theta.partition.to_string() << ", {";
    bool first = true;
    for (auto [a, b] : theta.cedges.pairs()) {
      os << (first ? "" : " ") << a << b;
      first = false;
    }
    os << "})";
    return os.str();
  }

  EdgeSet saturate(Partition const& p, EdgeSet e) {
    EdgeSet out;
    for (auto [a, b] : e.pairs()) {
      out = out
            | EdgeSet::product(p.block_containing(a), p.block_containing(b));
    }
    return out;
  }

  bool contained_in(GraphCongruence const& a, GraphCongruence const& b) {
    return a.partition.refines(b.partition) && a.cedges.subset_of(b.cedges);
  }

  GraphCongruence const& validate_gc(FiniteGraph const&     g,
                                     GraphCongruence const& theta) {
    require_loops(g);
    if (theta.partition.size() != g.order()) {
      fail(ErrorCode::InvalidCongruence,
           "partition is not over the vertices of the graph");
    }
    if (!g.edges().subset_of(theta.cedges)) {
      fail(ErrorCode::EdgeSetOutOfRange,
           "congruence edge set misses an edge of the graph");
    }
    if (!theta.cedges.subset_of(g.possible_edges())) {
      fail(ErrorCode::EdgeSetOutOfRange,
           "congruence edge set leaves the vertex range");
    }
    if (saturate(theta.partition, theta.cedges) != theta.cedges) {
      fail(ErrorCode::SubstitutionViolated,
           "edge set is not closed under related vertices");
    }
    return theta;
  }

  bool is_valid_gc(FiniteGraph const& g, GraphCongruence const& theta) {
    try {
      validate_gc(g, theta);
      return true;
    } catch (Error const& e) {
      if (e.code() == ErrorCode::PolicyMismatch) {
        throw;
      }
      return false;
    }
  }

  GraphCongruence identity_gc(FiniteGraph const& g) {
    return {Partition::discrete(g.order()), g.edges()};
  }

  GraphCongruence universal_gc(FiniteGraph const& g) {
    return {Partition::indiscrete(g.order()), g.possible_edges()};
  }

  GraphCongruence strongify_gc(FiniteGraph const& g, Partition const& p) {
    return {p, saturate(p, g.edges())};
  }

  bool is_strong_gc(FiniteGraph const& g, GraphCongruence const& theta) {
    return theta.cedges == saturate(theta.partition, g.edges());
  }

  GraphCongruence kernel_gc(FiniteGraph const& g,
                            FiniteGraph const& h,
                            ElementMap const&  f) {
    require_loops(g);
    return detail::kernel(g, h, f);
  }

  GraphCongruence strong_kernel_gc(FiniteGraph const& g,
                                   FiniteGraph const& h,
                                   ElementMap const&  f) {
    require_loops(g);
    if (!is_homomorphism(g, h, f)) {
      fail(ErrorCode::NotHomomorphism, "map is not a homomorphism");
    }
    return strongify_gc(g, Partition::kernel_of(f));
  }

  GraphQuotient quotient_gc(FiniteGraph const&     g,
                            GraphCongruence const& theta) {
    check_congruence(g, theta);
    return detail::quotient(g, theta);
  }

  GraphCongruence meet_gc(FiniteGraph const&               g,
                          std::span<GraphCongruence const> list) {
    check_list(g, list);
    return detail::meet(list);
  }

  GraphCongruence join_gc(FiniteGraph const&               g,
                          std::span<GraphCongruence const> list) {
    check_list(g, list);
    std::vector<Partition> parts;
    EdgeSet                all;
    for (auto const& theta : list) {
      parts.push_back(theta.partition);
      all = all | theta.cedges;
    }
    Partition p = join(parts);
    return {p, saturate(p, all)};
  }

  GraphCongruence meet_gc(FiniteGraph const&     g,
                          GraphCongruence const& a,
                          GraphCongruence const& b) {
    GraphCongruence const list[] = {a, b};
    return meet_gc(g, list);
  }

  GraphCongruence join_gc(FiniteGraph const&     g,
                          GraphCongruence const& a,
                          GraphCongruence const& b) {
    GraphCongruence const list[] = {a, b};
    return join_gc(g, list);
  }

  GraphCongruence restrict_gc(FiniteGraph const&     g,
                              GraphCongruence const& theta,
                              Subset                 s) {
    check_congruence(g, theta);
    if ((s & g.vertices()) == 0) {
      fail(ErrorCode::EmptySubset, "restriction to no vertices");
    }
    return detail::restrict(theta, s & g.vertices());
  }

  GraphCongruence quotient_cong_gc(FiniteGraph const&     g,
                                   GraphCongruence const& theta1,
                                   GraphCongruence const& theta2) {
    check_congruence(g, theta1);
    check_congruence(g, theta2);
    if (!contained_in(theta1, theta2)) {
      fail(ErrorCode::NotContained, "first congruence is not contained in the second");
    }
    return detail::quotient_cong(theta1, theta2);
  }

  GraphCongruence image_gc(FiniteGraph const&     g,
                           FiniteGraph const&     h,
                           ElementMap const&      f,
                           GraphCongruence const& theta) {
    if (!is_surjective(f, h.order())) {
      fail(ErrorCode::NotSurjective, "map is not surjective");
    }
    auto alpha = kernel_gc(g, h, f);
    auto q     = quotient_cong_gc(g, alpha, join_gc(g, theta, alpha));
    ElementMap witness(alpha.partition.number_of_blocks());
    for (int v = 0; v < g.order(); ++v) {
      witness[alpha.partition.block_of(v)] = f[v];
    }
    std::vector<int> labels(h.order());
    for (int b = 0; b < alpha.partition.number_of_blocks(); ++b) {
      labels[witness[b]] = q.partition.block_of(b);
    }
    return {Partition(std::move(labels)), q.cedges.mapped(witness)};
  }

  GraphSubdirect check_subdirect_gc(FiniteGraph const&               g,
                                    std::span<GraphCongruence const> list) {
    check_list(g, list);
    return detail::subdirect(g, list, identity_gc(g));
  }

  std::vector<GraphCongruence> enumerate_congruences_gc(FiniteGraph const& g) {
    require_loops(g);
    return detail::enumerate(g, false);
  }

  bool is_subdirectly_irreducible_gc(FiniteGraph const& g) {
    return detail::subdirectly_irreducible(enumerate_congruences_gc(g),
                                           identity_gc(g));
  }

  namespace detail {

    GraphQuotient quotient(FiniteGraph const& g, GraphCongruence const& theta) {
      ElementMap const& pi = theta.partition.class_ids();
      return {FiniteGraph(theta.partition.number_of_blocks(),
                          g.policy(),
                          theta.cedges.mapped(pi)),
              pi};
    }

    GraphCongruence kernel(FiniteGraph const& g,
                           FiniteGraph const& h,
                           ElementMap const&  f) {
      if (!is_homomorphism(g, h, f)) {
        fail(ErrorCode::NotHomomorphism, "map is not a homomorphism");
      }
      EdgeSet cedges;
      for (auto [a, b] : g.possible_edges().pairs()) {
        if (h.has_edge(f[a], f[b])) {
          cedges.insert(a, b);
        }
      }
      return {Partition::kernel_of(f), cedges};
    }

    GraphCongruence meet(std::span<GraphCongruence const> list) {
      std::vector<Partition> parts;
      EdgeSet                common = list.front().cedges;
      for (auto const& theta : list) {
        parts.push_back(theta.partition);
        common = common & theta.cedges;
      }
      return {conrad::meet(parts), common};
    }

    GraphCongruence restrict(GraphCongruence const& theta, Subset s) {
      return {theta.partition.restricted_to(s), theta.cedges.restricted_to(s)};
    }

    GraphCongruence quotient_cong(GraphCongruence const& theta1,
                                  GraphCongruence const& theta2) {
      return {theta2.partition.over_blocks_of(theta1.partition),
              theta2.cedges.mapped(theta1.partition.class_ids())};
    }

    GraphSubdirect subdirect(FiniteGraph const&               g,
                             std::span<GraphCongruence const> list,
                             GraphCongruence const&           identity) {
      GraphSubdirect out;
      out.is_subdirect = meet(list) == identity;
      out.embedding.assign(g.order(), {});
      for (auto const& theta : list) {
        auto q = quotient(g, theta);
        out.factors.push_back(q.graph);
        for (int v = 0; v < g.order(); ++v) {
          out.embedding[v].push_back(q.projection[v]);
        }
      }
      std::set<std::vector<int>> distinct(out.embedding.begin(),
                                          out.embedding.end());
      bool faithful = static_cast<int>(distinct.size()) == g.order();
      for (auto [a, b] : g.possible_edges().pairs()) {
        bool in_product = true;
        for (std::size_t i = 0; i < list.size(); ++i) {
          in_product = in_product
                       && out.factors[i].has_edge(out.embedding[a][i],
                                                  out.embedding[b][i]);
        }
        faithful = faithful && in_product == g.has_edge(a, b);
      }
      for (std::size_t i = 0; i < list.size(); ++i) {
        ElementMap pi(g.order());
        for (int v = 0; v < g.order(); ++v) {
          pi[v] = out.embedding[v][i];
        }
        faithful = faithful && is_surjective(pi, out.factors[i].order());
      }
      out.embedding_faithful = faithful;
      return out;
    }

    std::vector<GraphCongruence> enumerate(FiniteGraph const& g,
                                           bool               independent) {
      std::vector<GraphCongruence> out;
      EdgeSet const                edges = g.edges();
      for (auto const& p : all_partitions(g.order())) {
        auto const blocks = p.blocks();
        int const  k      = p.number_of_blocks();
        bool       ok     = true;
        if (independent) {
          for (Subset b : blocks) {
            ok = ok && !EdgeSet::product(b, b).intersects(edges);
          }
        }
        if (!ok) {
          continue;
        }
        EdgeSet              required;
        std::vector<EdgeSet> free;
        for (int j = 0; j < k; ++j) {
          for (int i = independent ? j + 1 : j; i < k; ++i) {
            EdgeSet orbit = EdgeSet::product(blocks[j], blocks[i]);
            if (orbit.intersects(edges)) {
              required = required | orbit;
            } else {
              free.push_back(orbit);
            }
          }
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size());
             ++mask) {
          EdgeSet cedges = required;
          for (std::size_t i = 0; i < free.size(); ++i) {
            if ((mask >> i) & 1u) {
              cedges = cedges | free[i];
            }
          }
          out.push_back({p, cedges});
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    bool subdirectly_irreducible(std::vector<GraphCongruence> const& all,
                                 GraphCongruence const&              identity) {
      std::vector<GraphCongruence> rest;
      std::copy_if(all.begin(),
                   all.end(),
                   std::back_inserter(rest),
                   [&identity](auto const& theta) { return theta != identity; });
      return rest.empty() || meet(rest) != identity;
    }

  }  // namespace detail

}  // namespace conrad
