#include "conrad/topo_congruence.hpp"

#include <algorithm>
#include <sstream>

#include "conrad/error.hpp"

namespace conrad {

  namespace {

    void check_list(FiniteSpace const&              x,
                    std::span<TopoCongruence const> list) {
      if (list.empty()) {
        fail(ErrorCode::EmptyList, "empty list of congruences");
      }
      for (auto const& rho : list) {
        if (!is_valid_tc(x, rho)) {
          fail(ErrorCode::InvalidCongruence,
               "not a congruence on the space: " + to_string(rho));
        }
      }
    }

    void check_congruence(FiniteSpace const& x, TopoCongruence const& rho) {
      if (!is_valid_tc(x, rho)) {
        fail(ErrorCode::InvalidCongruence,
             "not a congruence on the space: " + to_string(rho));
      }
    }

    std::string subset_string(Subset s) {
      if (s == 0) {
        return "-";
      }
      std::string out;
      for (int e : elements_of(s)) {
        out += (out.empty() ? "" : ",") + std::to_string(e);
      }
      return out;
    }

  }  // namespace

  std::string to_string(TopoCongruence const& rho) {
    std::ostringstream os;
    os << "(" << rho.partition.to_string() << ", {";
    bool first = true;
    for (Subset u : rho.ctop.members()) {
      os << (first ? "" : " ") << "{" << subset_string(u) << "}";
      first = false;
    }
    os << "})";
    return os.str();
  }

  TopoCongruence const& validate_tc(FiniteSpace const&    x,
                                    TopoCongruence const& rho) {
    if (rho.partition.size() != x.order()) {
      fail(ErrorCode::InvalidCongruence,
           "partition is not over the points of the space");
    }
    if (!is_topology(x.order(), rho.ctop)) {
      fail(ErrorCode::NotATopology, "congruence topology is not a topology");
    }
    if (!rho.ctop.subset_of(x.opens())) {
      fail(ErrorCode::NotSubTopology,
           "congruence topology is not contained in the space topology");
    }
    for (Subset u : rho.ctop.members()) {
      if (!rho.partition.saturates(u)) {
        fail(ErrorCode::NotSaturated,
             "open {" + subset_string(u) + "} is not a union of classes");
      }
    }
    return rho;
  }

  bool is_valid_tc(FiniteSpace const& x, TopoCongruence const& rho) {
    try {
      validate_tc(x, rho);
      return true;
    } catch (Error const&) {
      return false;
    }
  }

  TopoCongruence identity_tc(FiniteSpace const& x) {
    return {Partition::discrete(x.order()), x.opens()};
  }

  TopoCongruence universal_tc(FiniteSpace const& x) {
    return {Partition::indiscrete(x.order()), indiscrete_topology(x.order())};
  }

  bool contained_in(TopoCongruence const& rho, TopoCongruence const& gamma) {
    return rho.partition.refines(gamma.partition)
           && gamma.ctop.subset_of(rho.ctop);
  }

  TopoCongruence strongify_tc(FiniteSpace const& x, Partition const& p) {
    Family ctop;
    for (Subset u : x.opens().members()) {
      if (p.saturates(u)) {
        ctop.insert(u);
      }
    }
    return {p, ctop};
  }

  bool is_strong_tc(FiniteSpace const& x, TopoCongruence const& rho) {
    return strongify_tc(x, rho.partition).ctop == rho.ctop;
  }

  TopoCongruence kernel_tc(FiniteSpace const& x,
                           FiniteSpace const& y,
                           ElementMap const&  f) {
    if (!is_continuous(x, y, f)) {
      fail(ErrorCode::NotContinuous, "map is not continuous");
    }
    Family ctop;
    for (Subset v : y.opens().members()) {
      ctop.insert(preimage_of(v, f));
    }
    return {Partition::kernel_of(f), ctop};
  }

  TopoCongruence strong_kernel_tc(FiniteSpace const& x,
                                  FiniteSpace const& y,
                                  ElementMap const&  f) {
    if (!is_continuous(x, y, f)) {
      fail(ErrorCode::NotContinuous, "map is not continuous");
    }
    // U = f^-1(f(U)) is exactly saturation under the fibres of f.
    return strongify_tc(x, Partition::kernel_of(f));
  }

  TopoQuotient quotient_tc(FiniteSpace const& x, TopoCongruence const& rho) {
    check_congruence(x, rho);
    ElementMap const& pi = rho.partition.class_ids();
    return {FiniteSpace::unchecked(rho.partition.number_of_blocks(),
                                   rho.ctop.mapped(pi)),
            pi};
  }

  TopoCongruence meet_tc(FiniteSpace const&              x,
                         std::span<TopoCongruence const> list) {
    check_list(x, list);
    std::vector<Partition> parts;
    Family                 subbasis;
    for (auto const& rho : list) {
      parts.push_back(rho.partition);
      subbasis = subbasis | rho.ctop;
    }
    return {meet(parts), topology_generated_by(x.order(), subbasis)};
  }

  TopoCongruence join_tc(FiniteSpace const&              x,
                         std::span<TopoCongruence const> list) {
    check_list(x, list);
    std::vector<Partition> parts;
    Family                 ctop = x.opens();
    for (auto const& rho : list) {
      parts.push_back(rho.partition);
      ctop = ctop & rho.ctop;
    }
    return {join(parts), ctop};
  }

  TopoCongruence meet_tc(FiniteSpace const&    x,
                         TopoCongruence const& a,
                         TopoCongruence const& b) {
    TopoCongruence const list[] = {a, b};
    return meet_tc(x, list);
  }

  TopoCongruence join_tc(FiniteSpace const&    x,
                         TopoCongruence const& a,
                         TopoCongruence const& b) {
    TopoCongruence const list[] = {a, b};
    return join_tc(x, list);
  }

  TopoCongruence restrict_tc(FiniteSpace const&    x,
                             TopoCongruence const& rho,
                             Subset                s) {
    s &= x.points();
    if (s == 0) {
      fail(ErrorCode::EmptySubset, "restriction to no points");
    }
    Family ctop;
    for (Subset u : rho.ctop.members()) {
      ctop.insert(compress(u & s, s));
    }
    return {rho.partition.restricted_to(s), ctop};
  }

  TopoCongruence quotient_cong_tc(FiniteSpace const&    x,
                                  TopoCongruence const& alpha,
                                  TopoCongruence const& beta) {
    check_congruence(x, alpha);
    check_congruence(x, beta);
    if (!contained_in(alpha, beta)) {
      fail(ErrorCode::NotContained, "alpha is not contained in beta");
    }
    return {beta.partition.over_blocks_of(alpha.partition),
            beta.ctop.mapped(alpha.partition.class_ids())};
  }

  TopoCongruence image_tc(FiniteSpace const&    x,
                          FiniteSpace const&    y,
                          ElementMap const&     f,
                          TopoCongruence const& rho) {
    if (!is_surjective(f, y.order())) {
      fail(ErrorCode::NotSurjective, "map is not surjective");
    }
    auto alpha = kernel_tc(x, y, f);
    auto q     = quotient_cong_tc(x, alpha, join_tc(x, rho, alpha));
    // First homeomorphism witness: class [x] of alpha -> f(x).
    ElementMap witness(alpha.partition.number_of_blocks());
    for (int p = 0; p < x.order(); ++p) {
      witness[alpha.partition.block_of(p)] = f[p];
    }
    std::vector<int> labels(y.order());
    for (int b = 0; b < alpha.partition.number_of_blocks(); ++b) {
      labels[witness[b]] = q.partition.block_of(b);
    }
    return {Partition(std::move(labels)), q.ctop.mapped(witness)};
  }

  TopoSubdirect check_subdirect_tc(FiniteSpace const&              x,
                                   std::span<TopoCongruence const> list) {
    check_list(x, list);
    TopoSubdirect out;
    out.is_subdirect = meet_tc(x, list) == identity_tc(x);
    out.embedding.assign(x.order(), {});
    for (auto const& theta : list) {
      auto q = quotient_tc(x, theta);
      out.factors.push_back(q.space);
      for (int p = 0; p < x.order(); ++p) {
        out.embedding[p].push_back(q.projection[p]);
      }
    }
    return out;
  }

  std::vector<TopoCongruence> sierpinski_decomposition(FiniteSpace const& x) {
    if (x.is_trivial()) {
      fail(ErrorCode::TrivialSpace, "a one-point space has no decomposition");
    }
    int                         n = x.order();
    std::vector<TopoCongruence> candidates;
    // Characteristic maps of proper opens onto S2.
    for (Subset u : x.opens().members()) {
      if (u == 0 || u == x.points()) {
        continue;
      }
      std::vector<int> labels(n);
      for (int p = 0; p < n; ++p) {
        labels[p] = has_element(u, p) ? 0 : 1;
      }
      candidates.push_back(
          {Partition(std::move(labels)), Family{0, u, x.points()}});
    }
    // Points that no open separates are split apart by maps onto I2.
    for (int p = 0; p < n; ++p) {
      bool shared = false;
      for (int q = 0; q < n; ++q) {
        shared = shared || (q != p && x.minimal_open(q) == x.minimal_open(p));
      }
      if (shared) {
        std::vector<int> labels(n, 1);
        labels[p] = 0;
        TopoCongruence theta{Partition(std::move(labels)),
                             indiscrete_topology(n)};
        if (std::find(candidates.begin(), candidates.end(), theta)
            == candidates.end()) {
          candidates.push_back(std::move(theta));
        }
      }
    }
    auto const iota = identity_tc(x);
    if (candidates.empty() || meet_tc(x, candidates) != iota) {
      fail(ErrorCode::SearchExhausted, "no decomposition found");
    }
    // Drop factors that the others make redundant, first to last.
    for (std::size_t i = 0; i < candidates.size();) {
      if (candidates.size() == 1) {
        break;
      }
      auto rest = candidates;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (meet_tc(x, rest) == iota) {
        candidates = std::move(rest);
      } else {
        ++i;
      }
    }
    return candidates;
  }

  std::vector<TopoCongruence> enumerate_congruences_tc(FiniteSpace const& x) {
    std::vector<TopoCongruence> out;
    for (auto const& p : all_partitions(x.order())) {
      Family const strong = strongify_tc(x, p).ctop;
      auto const   blocks = p.blocks();
      for (Family t : all_topologies(p.number_of_blocks())) {
        Family lifted;
        for (Subset b : t.members()) {
          Subset u = 0;
          for (int i : elements_of(b)) {
            u |= blocks[i];
          }
          lifted.insert(u);
        }
        if (lifted.subset_of(strong)) {
          out.push_back({p, lifted});
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace conrad
