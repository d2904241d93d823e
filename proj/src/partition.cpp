#include "conrad/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "conrad/error.hpp"

namespace conrad {

  Partition::Partition(std::vector<int> labels) : _class_id(std::move(labels)) {
    std::vector<int> seen;
    for (int& c : _class_id) {
      auto it = std::find(seen.begin(), seen.end(), c);
      if (it == seen.end()) {
        seen.push_back(c);
        c = static_cast<int>(seen.size()) - 1;
      } else {
        c = static_cast<int>(it - seen.begin());
      }
    }
    _blocks = static_cast<int>(seen.size());
  }

  Partition Partition::discrete(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return Partition(std::move(ids));
  }

  Partition Partition::indiscrete(int n) {
    return Partition(std::vector<int>(n, 0));
  }

  Partition Partition::from_blocks(int n, std::span<Subset const> blocks) {
    std::vector<int> ids(n, -1);
    int              label = 0;
    for (Subset b : blocks) {
      if (b == 0) {
        fail(ErrorCode::InvalidCongruence, "empty block");
      }
      for (int x : elements_of(b)) {
        if (x >= n || ids[x] != -1) {
          fail(ErrorCode::InvalidCongruence,
               "blocks overlap or leave the element range");
        }
        ids[x] = label;
      }
      ++label;
    }
    if (std::find(ids.begin(), ids.end(), -1) != ids.end()) {
      fail(ErrorCode::InvalidCongruence, "blocks do not cover every element");
    }
    return Partition(std::move(ids));
  }

  Partition Partition::kernel_of(ElementMap const& f) {
    return Partition(std::vector<int>(f.begin(), f.end()));
  }

  std::vector<Subset> Partition::blocks() const {
    std::vector<Subset> out(_blocks, 0);
    for (int x = 0; x < size(); ++x) {
      out[_class_id[x]] |= Subset{1} << x;
    }
    return out;
  }

  Subset Partition::block_containing(int x) const {
    Subset out = 0;
    for (int y = 0; y < size(); ++y) {
      if (_class_id[y] == _class_id[x]) {
        out |= Subset{1} << y;
      }
    }
    return out;
  }

  bool Partition::saturates(Subset s) const {
    return saturation(s) == s;
  }

  Subset Partition::saturation(Subset s) const {
    Subset out = 0;
    for (Subset b : blocks()) {
      if ((b & s) != 0) {
        out |= b;
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    // related here => related there; equivalently the map block -> block is
    // well defined.
    std::vector<int> target(_blocks, -1);
    for (int x = 0; x < size(); ++x) {
      int& t = target[_class_id[x]];
      if (t == -1) {
        t = other._class_id[x];
      } else if (t != other._class_id[x]) {
        return false;
      }
    }
    return true;
  }

  Partition Partition::restricted_to(Subset s) const {
    std::vector<int> ids;
    for (int x : elements_of(s)) {
      ids.push_back(_class_id[x]);
    }
    return Partition(std::move(ids));
  }

  Partition Partition::over_blocks_of(Partition const& finer) const {
    std::vector<int> ids(finer.number_of_blocks());
    for (int x = 0; x < size(); ++x) {
      ids[finer.block_of(x)] = _class_id[x];
    }
    return Partition(std::move(ids));
  }

  Partition Partition::pushed_along(ElementMap const& f,
                                    int               codomain_size) const {
    std::vector<int> ids(codomain_size, -1);
    for (int x = 0; x < size(); ++x) {
      ids[f[x]] = _class_id[x];
    }
    // Unhit codomain elements stay singletons.
    int next = _blocks;
    for (int& c : ids) {
      if (c == -1) {
        c = next++;
      }
    }
    return Partition(std::move(ids));
  }

  std::string Partition::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first_block = true;
    for (Subset b : blocks()) {
      os << (first_block ? "" : ",") << "{";
      first_block = false;
      bool first    = true;
      for (int x : elements_of(b)) {
        os << (first ? "" : ",") << x;
        first = false;
      }
      os << "}";
    }
    os << "}";
    return os.str();
  }

  Partition meet(std::span<Partition const> parts) {
    if (parts.empty()) {
      fail(ErrorCode::EmptyList, "meet of no partitions");
    }
    int n = parts.front().size();
    // Label each element by the tuple of its block numbers.
    std::vector<std::vector<int>> keys(n);
    for (auto const& p : parts) {
      for (int x = 0; x < n; ++x) {
        keys[x].push_back(p.block_of(x));
      }
    }
    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) {
      ids[x] = static_cast<int>(
          std::find(keys.begin(), keys.end(), keys[x]) - keys.begin());
    }
    return Partition(std::move(ids));
  }

  Partition join(std::span<Partition const> parts) {
    if (parts.empty()) {
      fail(ErrorCode::EmptyList, "join of no partitions");
    }
    int              n = parts.front().size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    for (auto const& p : parts) {
      for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
          if (p.related(x, y)) {
            parent[find(y)] = find(x);
          }
        }
      }
    }
    std::vector<int> ids(n);
    for (int x = 0; x < n; ++x) {
      ids[x] = find(x);
    }
    return Partition(std::move(ids));
  }

  Partition meet(Partition const& a, Partition const& b) {
    Partition const parts[] = {a, b};
    return meet(parts);
  }

  Partition join(Partition const& a, Partition const& b) {
    Partition const parts[] = {a, b};
    return join(parts);
  }

  std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n <= 0) {
      return out;
    }
    std::vector<int> rgs(n, 0);
    std::vector<int> maxes(n, 0);  // maxes[i] = max(rgs[0..i])
    while (true) {
      out.emplace_back(rgs);
      // Advance to the next restricted growth string.
      int i = n - 1;
      while (i > 0 && rgs[i] > maxes[i - 1]) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++rgs[i];
      maxes[i] = std::max(maxes[i - 1], rgs[i]);
      for (int j = i + 1; j < n; ++j) {
        rgs[j]   = 0;
        maxes[j] = maxes[i];
      }
    }
    return out;
  }

}  // namespace conrad
