#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "conrad/bits.hpp"

namespace conrad {

  // An equivalence relation on 0..n-1, stored as a restricted growth string:
  // block indices appear in order of least element, so equal partitions have
  // identical representations.
  class Partition {
   public:
    Partition() = default;

    // Normalizes an arbitrary labelling; labels need only be consistent.
    explicit Partition(std::vector<int> labels);

    static Partition discrete(int n);
    static Partition indiscrete(int n);
    static Partition from_blocks(int n, std::span<Subset const> blocks);
    // Partition whose blocks are the fibres of a map.
    static Partition kernel_of(ElementMap const& f);

    [[nodiscard]] int size() const noexcept {
      return static_cast<int>(_class_id.size());
    }
    [[nodiscard]] int number_of_blocks() const noexcept {
      return _blocks;
    }
    [[nodiscard]] int block_of(int x) const {
      return _class_id[x];
    }
    [[nodiscard]] std::vector<int> const& class_ids() const noexcept {
      return _class_id;
    }
    [[nodiscard]] bool related(int x, int y) const {
      return _class_id[x] == _class_id[y];
    }

    // Block masks indexed by block number.
    [[nodiscard]] std::vector<Subset> blocks() const;
    [[nodiscard]] Subset block_containing(int x) const;

    [[nodiscard]] bool is_discrete() const noexcept {
      return _blocks == size();
    }
    [[nodiscard]] bool is_indiscrete() const noexcept {
      return _blocks <= 1;
    }

    // True iff every block is a union of blocks of this partition.
    [[nodiscard]] bool saturates(Subset s) const;
    // Union of the blocks meeting s.
    [[nodiscard]] Subset saturation(Subset s) const;

    // Relation containment: every pair related here is related in other.
    [[nodiscard]] bool refines(Partition const& other) const;

    // Partition of the subset `s`, relabelled to 0..|s|-1 in order.
    [[nodiscard]] Partition restricted_to(Subset s) const;

    // Partition of the blocks of `finer` (which must refine this one) induced
    // by this partition.
    [[nodiscard]] Partition over_blocks_of(Partition const& finer) const;

    // Transports a partition along an element map: result relates f(a), f(b)
    // iff a, b related. Requires every fibre of f to lie inside one block.
    [[nodiscard]] Partition pushed_along(ElementMap const& f,
                                         int codomain_size) const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend std::strong_ordering operator<=>(Partition const& a,
                                            Partition const& b) {
      return a._class_id <=> b._class_id;
    }

   private:
    std::vector<int> _class_id;
    int              _blocks = 0;
  };

  // Common refinement of all partitions; the list must be non-empty.
  Partition meet(std::span<Partition const> parts);
  // Transitive closure of the union of the relations.
  Partition join(std::span<Partition const> parts);

  Partition meet(Partition const& a, Partition const& b);
  Partition join(Partition const& a, Partition const& b);

  // All partitions of 0..n-1 in restricted-growth-string order.
  std::vector<Partition> all_partitions(int n);

}  // namespace conrad
