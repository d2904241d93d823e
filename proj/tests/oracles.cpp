#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

  namespace {

    std::vector<std::vector<int>> permutations(int n) {
      std::vector<int> p(n);
      std::iota(p.begin(), p.end(), 0);
      std::vector<std::vector<int>> out;
      do {
        out.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      return out;
    }

    PairSet relabel(PairSet const& e, std::vector<int> const& p) {
      PairSet out;
      for (auto [a, b] : e) {
        out.insert(std::minmax(p[a], p[b]));
      }
      return out;
    }

    Opens relabel(Opens const& t, std::vector<int> const& p) {
      Opens out;
      for (auto const& u : t) {
        PointSet v;
        for (int x : u) {
          v.insert(p[x]);
        }
        out.insert(v);
      }
      return out;
    }

    Opens to_opens(conrad::Family f) {
      Opens out;
      for (auto s : f.members()) {
        auto e = conrad::elements_of(s);
        out.insert(PointSet(e.begin(), e.end()));
      }
      return out;
    }

    std::vector<PointSet> all_subsets(int n) {
      std::vector<PointSet> out;
      for (int m = 0; m < (1 << n); ++m) {
        PointSet s;
        for (int i = 0; i < n; ++i) {
          if ((m >> i) & 1) {
            s.insert(i);
          }
        }
        out.push_back(s);
      }
      return out;
    }

    // Equivalence on 0..n-1 generated by the pairs, as class labels.
    std::vector<int> generated(int n, std::vector<Pair> const& pairs) {
      std::vector<int> label(n);
      std::iota(label.begin(), label.end(), 0);
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto [a, b] : pairs) {
          int lo = std::min(label[a], label[b]);
          int hi = std::max(label[a], label[b]);
          if (lo != hi) {
            std::replace(label.begin(), label.end(), hi, lo);
            changed = true;
          }
        }
      }
      return label;
    }

    bool related(Blocks const& blocks, int a, int b) {
      for (auto const& bl : blocks) {
        bool has_a = std::find(bl.begin(), bl.end(), a) != bl.end();
        bool has_b = std::find(bl.begin(), bl.end(), b) != bl.end();
        if (has_a || has_b) {
          return has_a && has_b;
        }
      }
      return false;
    }

  }  // namespace

  std::vector<Blocks> set_partitions(int n) {
    std::vector<Blocks> out{{}};
    for (int x = 0; x < n; ++x) {
      std::vector<Blocks> next;
      for (auto const& p : out) {
        for (std::size_t i = 0; i <= p.size(); ++i) {
          Blocks q = p;
          if (i == q.size()) {
            q.push_back({x});
          } else {
            q[i].push_back(x);
          }
          next.push_back(q);
        }
      }
      out = std::move(next);
    }
    return out;
  }

  int count_graph_classes(int n, bool loops) {
    std::vector<Pair> possible;
    for (int a = 0; a < n; ++a) {
      for (int b = loops ? a : a + 1; b < n; ++b) {
        possible.emplace_back(a, b);
      }
    }
    auto             perms = permutations(n);
    std::set<PairSet> classes;
    for (long m = 0; m < (1L << possible.size()); ++m) {
      PairSet e;
      for (std::size_t i = 0; i < possible.size(); ++i) {
        if ((m >> i) & 1) {
          e.insert(possible[i]);
        }
      }
      PairSet best = e;
      for (auto const& p : perms) {
        best = std::min(best, relabel(e, p));
      }
      classes.insert(best);
    }
    return static_cast<int>(classes.size());
  }

  bool is_topology(int n, Opens const& opens) {
    PointSet full;
    for (int i = 0; i < n; ++i) {
      full.insert(i);
    }
    if (!opens.contains({}) || !opens.contains(full)) {
      return false;
    }
    for (auto const& u : opens) {
      for (auto const& v : opens) {
        PointSet un, in;
        std::set_union(u.begin(), u.end(), v.begin(), v.end(),
                       std::inserter(un, un.end()));
        std::set_intersection(u.begin(), u.end(), v.begin(), v.end(),
                              std::inserter(in, in.end()));
        if (!opens.contains(un) || !opens.contains(in)) {
          return false;
        }
      }
    }
    return true;
  }

  int count_space_classes(int n) {
    auto            subsets = all_subsets(n);
    auto            perms   = permutations(n);
    std::set<Opens> classes;
    for (long m = 0; m < (1L << subsets.size()); ++m) {
      Opens t;
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        if ((m >> i) & 1) {
          t.insert(subsets[i]);
        }
      }
      if (!is_topology(n, t)) {
        continue;
      }
      Opens best = t;
      for (auto const& p : perms) {
        best = std::min(best, relabel(t, p));
      }
      classes.insert(best);
    }
    return static_cast<int>(classes.size());
  }

  int count_space_congruences(conrad::FiniteSpace const& x) {
    int   n     = x.order();
    Opens opens = to_opens(x.opens());
    std::vector<PointSet> members(opens.begin(), opens.end());
    int count = 0;
    for (auto const& blocks : set_partitions(n)) {
      for (long m = 0; m < (1L << members.size()); ++m) {
        Opens t;
        for (std::size_t i = 0; i < members.size(); ++i) {
          if ((m >> i) & 1) {
            t.insert(members[i]);
          }
        }
        if (!is_topology(n, t)) {
          continue;
        }
        bool saturated = true;
        for (auto const& u : t) {
          for (int a : u) {
            for (int b = 0; b < n; ++b) {
              saturated = saturated && (!related(blocks, a, b) || u.contains(b));
            }
          }
        }
        count += saturated ? 1 : 0;
      }
    }
    return count;
  }

  int count_graph_congruences(conrad::FiniteGraph const& g, bool loopless) {
    int               n = g.order();
    std::vector<Pair> possible;
    for (int a = 0; a < n; ++a) {
      for (int b = loopless ? a + 1 : a; b < n; ++b) {
        possible.emplace_back(a, b);
      }
    }
    int count = 0;
    for (auto const& blocks : set_partitions(n)) {
      for (long m = 0; m < (1L << possible.size()); ++m) {
        PairSet e;
        for (std::size_t i = 0; i < possible.size(); ++i) {
          if ((m >> i) & 1) {
            e.insert(possible[i]);
          }
        }
        bool ok = true;
        for (auto [a, b] : possible) {
          if (g.has_edge(a, b) && !e.contains({a, b})) {
            ok = false;
          }
          if (loopless && related(blocks, a, b)
              && (e.contains({a, b}) || g.has_edge(a, b))) {
            ok = false;
          }
        }
        for (auto [x, y] : e) {
          for (int x2 = 0; x2 < n; ++x2) {
            for (int y2 = 0; y2 < n; ++y2) {
              if (related(blocks, x, x2) && related(blocks, y, y2)
                  && !e.contains(std::minmax(x2, y2))) {
                ok = false;
              }
            }
          }
        }
        count += ok ? 1 : 0;
      }
    }
    return count;
  }

  conrad::TopoCongruence image_tc(conrad::FiniteSpace const&    x,
                                  conrad::FiniteSpace const&    y,
                                  conrad::ElementMap const&     f,
                                  conrad::TopoCongruence const& rho) {
    std::vector<Pair> pairs;
    for (int a = 0; a < x.order(); ++a) {
      for (int b = 0; b < x.order(); ++b) {
        if (rho.partition.related(a, b)) {
          pairs.emplace_back(f[a], f[b]);
        }
      }
    }
    conrad::Family ctop;
    for (auto v : y.opens().members()) {
      if (rho.ctop.contains(conrad::preimage_of(v, f))) {
        ctop.insert(v);
      }
    }
    return {conrad::Partition(generated(y.order(), pairs)), ctop};
  }

  conrad::GraphCongruence image_gc(conrad::FiniteGraph const&     g,
                                   conrad::FiniteGraph const&     h,
                                   conrad::ElementMap const&      f,
                                   conrad::GraphCongruence const& theta) {
    std::vector<Pair> pairs;
    for (int a = 0; a < g.order(); ++a) {
      for (int b = 0; b < g.order(); ++b) {
        if (theta.partition.related(a, b)) {
          pairs.emplace_back(f[a], f[b]);
        }
      }
    }
    conrad::Partition p(generated(h.order(), pairs));
    conrad::EdgeSet   e = h.edges();
    for (auto [a, b] : theta.cedges.pairs()) {
      e.insert(f[a], f[b]);
    }
    // saturate by hand
    conrad::EdgeSet out;
    for (int a = 0; a < h.order(); ++a) {
      for (int b = 0; b < h.order(); ++b) {
        for (auto [c, d] : e.pairs()) {
          if ((p.related(a, c) && p.related(b, d))
              || (p.related(a, d) && p.related(b, c))) {
            out.insert(a, b);
          }
        }
      }
    }
    return {p, out};
  }

  bool families_meet_to_identity(
      conrad::FiniteGraph const&                  g,
      std::vector<conrad::GraphCongruence> const& list) {
    for (int a = 0; a < g.order(); ++a) {
      for (int b = a; b < g.order(); ++b) {
        bool all_related = a != b;
        bool all_edges   = true;
        for (auto const& theta : list) {
          all_related = all_related && theta.partition.related(a, b);
          all_edges   = all_edges && theta.cedges.contains(a, b);
        }
        if (all_related || all_edges != g.has_edge(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  bool has_nontrivial_decomposition(
      conrad::FiniteGraph const&                  g,
      std::vector<conrad::GraphCongruence> const& all) {
    conrad::GraphCongruence iota{conrad::Partition::discrete(g.order()),
                                 g.edges()};
    std::vector<conrad::GraphCongruence> rest;
    for (auto const& theta : all) {
      if (theta != iota) {
        rest.push_back(theta);
      }
    }
    // Meets only shrink, so the full family decides every subfamily.
    return !rest.empty() && families_meet_to_identity(g, rest);
  }

  namespace {

    // Calls fn on every map from n points into k points.
    template <typename Fn>
    bool any_map(int n, int k, Fn fn) {
      std::vector<int> f(n, 0);
      while (true) {
        if (fn(f)) {
          return true;
        }
        int i = 0;
        while (i < n && ++f[i] == k) {
          f[i++] = 0;
        }
        if (i == n) {
          return false;
        }
      }
    }

    bool onto(std::vector<int> const& f, int k) {
      std::vector<bool> hit(k, false);
      for (int v : f) {
        hit[v] = true;
      }
      return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
    }

  }  // namespace

  bool has_nontrivial_image(conrad::FiniteGraph const&                        g,
                            std::function<bool(conrad::FiniteGraph const&)> in_m) {
    int const n = g.order();
    for (int k = 2; k <= n; ++k) {
      for (auto const& h : conrad::enumerate_graphs(k, g.policy(), k)) {
        if (!in_m(h)) {
          continue;
        }
        bool found = any_map(n, k, [&](std::vector<int> const& f) {
          if (!onto(f, k)) {
            return false;
          }
          for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
              if (g.has_edge(a, b) && !h.has_edge(f[a], f[b])) {
                return false;
              }
            }
          }
          return true;
        });
        if (found) {
          return true;
        }
      }
    }
    return false;
  }

  bool has_nontrivial_image(conrad::FiniteSpace const&                        x,
                            std::function<bool(conrad::FiniteSpace const&)> in_m) {
    int const n = x.order();
    for (int k = 2; k <= n; ++k) {
      for (auto const& y : conrad::enumerate_spaces(k, k)) {
        if (!in_m(y)) {
          continue;
        }
        bool found = any_map(n, k, [&](std::vector<int> const& f) {
          if (!onto(f, k)) {
            return false;
          }
          for (conrad::Subset v : y.opens().members()) {
            conrad::Subset pre = 0;
            for (int p = 0; p < n; ++p) {
              if ((v >> f[p]) & 1u) {
                pre |= conrad::Subset{1} << p;
              }
            }
            if (!x.is_open(pre)) {
              return false;
            }
          }
          return true;
        });
        if (found) {
          return true;
        }
      }
    }
    return false;
  }

  bool has_clique(conrad::FiniteGraph const& g, int k) {
    int const n = g.order();
    std::vector<int> pick(k);
    std::function<bool(int, int)> extend = [&](int depth, int from) {
      if (depth == k) {
        return true;
      }
      for (int v = from; v < n; ++v) {
        bool adjacent = true;
        for (int i = 0; i < depth; ++i) {
          adjacent = adjacent && g.has_edge(pick[i], v);
        }
        if (adjacent) {
          pick[depth] = v;
          if (extend(depth + 1, v + 1)) {
            return true;
          }
        }
      }
      return false;
    };
    return extend(0, 0);
  }

}  // namespace oracle
