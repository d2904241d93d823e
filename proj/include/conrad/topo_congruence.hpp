#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "conrad/partition.hpp"
#include "conrad/structures.hpp"

namespace conrad {

  // A congruence (~, T) on a finite space: an equivalence relation together
  // with a coarser topology whose opens are unions of classes.
  struct TopoCongruence {
    Partition partition;
    Family    ctop;

    friend bool operator==(TopoCongruence const&,
                           TopoCongruence const&) = default;
    friend auto operator<=>(TopoCongruence const& a, TopoCongruence const& b) {
      if (auto c = a.partition <=> b.partition; c != 0) {
        return c;
      }
      return a.ctop.bits() <=> b.ctop.bits();
    }
  };

  std::string to_string(TopoCongruence const& rho);

  // Throws NotATopology, NotSubTopology or NotSaturated (in that order of
  // checking); returns `rho` unchanged when it is a congruence on `x`.
  TopoCongruence const& validate_tc(FiniteSpace const&    x,
                                    TopoCongruence const& rho);
  bool is_valid_tc(FiniteSpace const& x, TopoCongruence const& rho);

  TopoCongruence identity_tc(FiniteSpace const& x);
  TopoCongruence universal_tc(FiniteSpace const& x);

  // rho is contained in gamma: finer relation and larger topology.
  bool contained_in(TopoCongruence const& rho, TopoCongruence const& gamma);

  // (~, every open set that is a union of ~-classes)
  TopoCongruence strongify_tc(FiniteSpace const& x, Partition const& p);
  bool is_strong_tc(FiniteSpace const& x, TopoCongruence const& rho);

  // f must be continuous (NotContinuous otherwise).
  TopoCongruence kernel_tc(FiniteSpace const& x,
                           FiniteSpace const& y,
                           ElementMap const&  f);
  TopoCongruence strong_kernel_tc(FiniteSpace const& x,
                                  FiniteSpace const& y,
                                  ElementMap const&  f);

  struct TopoQuotient {
    FiniteSpace space;
    ElementMap  projection;  // point -> class index
  };

  // Weak quotient space: classes as points, {pi(U) | U in ctop} as opens.
  TopoQuotient quotient_tc(FiniteSpace const& x, TopoCongruence const& rho);

  TopoCongruence meet_tc(FiniteSpace const&              x,
                         std::span<TopoCongruence const> list);
  TopoCongruence join_tc(FiniteSpace const&              x,
                         std::span<TopoCongruence const> list);
  TopoCongruence meet_tc(FiniteSpace const&    x,
                         TopoCongruence const& a,
                         TopoCongruence const& b);
  TopoCongruence join_tc(FiniteSpace const&    x,
                         TopoCongruence const& a,
                         TopoCongruence const& b);

  // Congruence on subspace(x, s).
  TopoCongruence restrict_tc(FiniteSpace const&    x,
                             TopoCongruence const& rho,
                             Subset                s);

  // beta / alpha, a congruence on x / alpha. Requires alpha contained in beta.
  TopoCongruence quotient_cong_tc(FiniteSpace const&    x,
                                  TopoCongruence const& alpha,
                                  TopoCongruence const& beta);

  // f(rho) for a surjective continuous f, computed as (rho + ker f) / ker f
  // carried to y along [x] -> f(x).
  TopoCongruence image_tc(FiniteSpace const&    x,
                          FiniteSpace const&    y,
                          ElementMap const&     f,
                          TopoCongruence const& rho);

  struct TopoSubdirect {
    bool                     is_subdirect = false;
    std::vector<FiniteSpace> factors;
    // embedding[x][i] is the image of x in factor i
    std::vector<std::vector<int>> embedding;
  };

  TopoSubdirect check_subdirect_tc(FiniteSpace const&              x,
                                   std::span<TopoCongruence const> list);

  // Congruences with quotients homeomorphic to S2 or I2 meeting to the
  // identity. Throws TrivialSpace on a one-point space.
  std::vector<TopoCongruence> sierpinski_decomposition(FiniteSpace const& x);

  // Every congruence on x, sorted by (partition, topology encoding).
  std::vector<TopoCongruence> enumerate_congruences_tc(FiniteSpace const& x);

}  // namespace conrad
