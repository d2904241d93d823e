#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace conrad {

  // A set of points/vertices of a finite structure, one bit per element.
  using Subset = std::uint32_t;

  // A map between the element sets of two finite structures: element i of the
  // domain goes to map[i] of the codomain.
  using ElementMap = std::vector<int>;

  inline constexpr int max_graph_order = 8;
  inline constexpr int max_space_order = 6;

  constexpr Subset full_subset(int n) noexcept {
    return n >= 32 ? ~Subset{0} : (Subset{1} << n) - 1;
  }

  constexpr bool has_element(Subset s, int x) noexcept {
    return (s >> x) & 1u;
  }

  constexpr int cardinality(Subset s) noexcept {
    return std::popcount(s);
  }

  inline std::vector<int> elements_of(Subset s) {
    std::vector<int> out;
    for (; s != 0; s &= s - 1) {
      out.push_back(std::countr_zero(s));
    }
    return out;
  }

  // Image of a subset under an element map.
  inline Subset image_of(Subset s, ElementMap const& f) {
    Subset out = 0;
    for (; s != 0; s &= s - 1) {
      out |= Subset{1} << f[std::countr_zero(s)];
    }
    return out;
  }

  // Preimage of a subset of the codomain under an element map.
  inline Subset preimage_of(Subset t, ElementMap const& f) {
    Subset out = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (has_element(t, f[i])) {
        out |= Subset{1} << i;
      }
    }
    return out;
  }

  // Compresses the bits of `s` selected by `domain` into the low bits, in
  // order; used to relabel a subset of a substructure on 0..|domain|-1.
  inline Subset compress(Subset s, Subset domain) {
    Subset out = 0;
    int    pos = 0;
    for (; domain != 0; domain &= domain - 1, ++pos) {
      if (has_element(s, std::countr_zero(domain))) {
        out |= Subset{1} << pos;
      }
    }
    return out;
  }

  inline bool is_surjective(ElementMap const& f, int codomain_size) {
    Subset hit = 0;
    for (int y : f) {
      hit |= Subset{1} << y;
    }
    return hit == full_subset(codomain_size);
  }

  // All maps from an m-set to an n-set, in lexicographic order.
  std::vector<ElementMap> all_maps(int m, int n);

}  // namespace conrad
