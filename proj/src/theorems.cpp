#include "conrad/theorems.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "conrad/error.hpp"
#include "conrad/graph_congruence.hpp"
#include "conrad/loopless_congruence.hpp"
#include "conrad/topo_congruence.hpp"

namespace conrad {

  namespace {

    struct TopoOps {
      using S = FiniteSpace;
      using C = TopoCongruence;

      static std::vector<S> representatives(int n) {
        return enumerate_spaces(n, n);
      }
      static std::vector<C> congruences(S const& x) {
        return enumerate_congruences_tc(x);
      }
      static std::pair<S, ElementMap> quotient(S const& x, C const& c) {
        auto q = quotient_tc(x, c);
        return {q.space, q.projection};
      }
      static C kernel(S const& x, S const& y, ElementMap const& f) {
        return kernel_tc(x, y, f);
      }
      static C restrict(S const& x, C const& c, Subset s) {
        return restrict_tc(x, c, s);
      }
      static C quotient_cong(S const& x, C const& a, C const& b) {
        return quotient_cong_tc(x, a, b);
      }
      static bool morphism(S const& x, S const& y, ElementMap const& f) {
        return is_continuous(x, y, f);
      }
      static std::vector<ElementMap> surjections(S const& x, S const& y) {
        return surjective_continuous_maps(x, y);
      }
      static S sub(S const& x, Subset s) {
        return subspace(x, s);
      }
      static S relabel(S const& x, ElementMap const& p) {
        return S::unchecked(x.order(), x.opens().mapped(p));
      }
      static bool carried_onto(S const& a, S const& b, ElementMap const& p) {
        return a.opens().mapped(p) == b.opens();
      }
    };

    template <bool Loopless>
    struct GraphOpsBase {
      using S = FiniteGraph;
      using C = GraphCongruence;

      static std::vector<S> representatives(int n) {
        return enumerate_graphs(
            n, Loopless ? LoopPolicy::NoLoops : LoopPolicy::LoopsAllowed, n);
      }
      static std::vector<C> congruences(S const& g) {
        return Loopless ? enumerate_congruences_lc(g)
                        : enumerate_congruences_gc(g);
      }
      static std::pair<S, ElementMap> quotient(S const& g, C const& c) {
        auto q = Loopless ? quotient_lc(g, c) : quotient_gc(g, c);
        return {q.graph, q.projection};
      }
      static C kernel(S const& g, S const& h, ElementMap const& f) {
        return Loopless ? kernel_lc(g, h, f) : kernel_gc(g, h, f);
      }
      static C restrict(S const& g, C const& c, Subset s) {
        return Loopless ? restrict_lc(g, c, s) : restrict_gc(g, c, s);
      }
      static C quotient_cong(S const& g, C const& a, C const& b) {
        return Loopless ? quotient_cong_lc(g, a, b) : quotient_cong_gc(g, a, b);
      }
      static bool morphism(S const& g, S const& h, ElementMap const& f) {
        return is_homomorphism(g, h, f);
      }
      static std::vector<ElementMap> surjections(S const& g, S const& h) {
        return surjective_homomorphisms(g, h);
      }
      static S sub(S const& g, Subset s) {
        return induced(g, s);
      }
      static S relabel(S const& g, ElementMap const& p) {
        return S(g.order(), g.policy(), g.edges().mapped(p));
      }
      static bool carried_onto(S const& a, S const& b, ElementMap const& p) {
        return a.edges().mapped(p) == b.edges();
      }
    };

    using GraphOps    = GraphOpsBase<false>;
    using LooplessOps = GraphOpsBase<true>;

    // p is a bijection a -> b carrying the structure of a exactly onto b.
    template <typename Ops>
    bool isomorphism_via(typename Ops::S const& a,
                         typename Ops::S const& b,
                         ElementMap const&      p) {
      return a.order() == b.order()
             && static_cast<int>(p.size()) == a.order()
             && is_surjective(p, b.order()) && Ops::carried_onto(a, b, p);
    }

    // Map defined on classes by psi[from[x]] = to[x]; empty if ill-defined.
    ElementMap induced_map(ElementMap const& from,
                           ElementMap const& to,
                           int               size) {
      ElementMap psi(size, -1);
      for (std::size_t x = 0; x < from.size(); ++x) {
        int& slot = psi[from[x]];
        if (slot != -1 && slot != to[x]) {
          return {};
        }
        slot = to[x];
      }
      if (std::find(psi.begin(), psi.end(), -1) != psi.end()) {
        return {};
      }
      return psi;
    }

    template <typename Ops>
    bool first_holds(typename Ops::S const& x,
                     typename Ops::S const& y,
                     ElementMap const&      f) {
      auto [q, pi] = Ops::quotient(x, Ops::kernel(x, y, f));
      auto psi     = induced_map(pi, f, q.order());
      return !psi.empty() && isomorphism_via<Ops>(q, y, psi);
    }

    template <typename Ops>
    bool second_holds(typename Ops::S const& x,
                      typename Ops::C const& rho,
                      Subset                 s) {
      auto [q, pi]  = Ops::quotient(x, rho);
      auto h        = Ops::sub(x, s);
      auto [qh, ph] = Ops::quotient(h, Ops::restrict(x, rho, s));
      Subset const target = image_of(s, pi);
      ElementMap   ranks;
      for (int v : elements_of(s)) {
        ranks.push_back(cardinality(target & ((Subset{1} << pi[v]) - 1)));
      }
      auto psi = induced_map(ph, ranks, qh.order());
      return !psi.empty() && isomorphism_via<Ops>(qh, Ops::sub(q, target), psi);
    }

    template <typename Ops>
    bool third_holds(typename Ops::S const& x,
                     typename Ops::C const& alpha,
                     typename Ops::C const& beta) {
      auto [q1, p1] = Ops::quotient(x, alpha);
      auto [q2, p2] = Ops::quotient(q1, Ops::quotient_cong(x, alpha, beta));
      auto [q3, p3] = Ops::quotient(x, beta);
      ElementMap composed(x.order());
      for (int v = 0; v < x.order(); ++v) {
        composed[v] = p2[p1[v]];
      }
      auto psi = induced_map(composed, p3, q2.order());
      return !psi.empty() && isomorphism_via<Ops>(q2, q3, psi);
    }

    std::string map_text(ElementMap const& f) {
      std::string out = "[";
      for (std::size_t i = 0; i < f.size(); ++i) {
        out += (i ? " " : "") + std::to_string(f[i]);
      }
      return out + "]";
    }

    class Runner {
     public:
      explicit Runner(SuiteResult& r) : _r(r) {}

      void check(bool sampled, std::function<bool()> const& holds,
                 std::function<std::string()> const& describe) {
        ++(sampled ? _r.sampled : _r.exhaustive);
        bool ok = false;
        std::string why;
        try {
          ok = holds();
        } catch (Error const& e) {
          why = std::string(" (") + e.what() + ")";
        }
        if (!ok) {
          if (_r.failures++ == 0) {
            _r.first_failure = describe() + why;
          }
        }
      }

     private:
      SuiteResult& _r;
    };

    int pick(std::mt19937_64& rng, std::size_t bound) {
      return static_cast<int>(rng() % bound);
    }

    template <typename Ops>
    class Suite {
     public:
      using S = typename Ops::S;
      using C = typename Ops::C;

      Suite(SuiteOptions const& o, SuiteResult& r)
          : _options(o), _run(r), _rng(o.seed) {
        int const top = std::max(o.exhaustive_max_n, o.random_max_n);
        for (int n = 1; n <= top; ++n) {
          _reps.push_back(Ops::representatives(n));
        }
      }

      void first() {
        for (int n = 1; n <= _options.exhaustive_max_n; ++n) {
          for (auto const& x : _reps[n - 1]) {
            for (int k = 1; k <= n; ++k) {
              for (auto const& y : _reps[k - 1]) {
                for (auto const& f : Ops::surjections(x, y)) {
                  check_first(false, x, y, f);
                }
              }
            }
          }
        }
        for (int i = 0; i < _options.random_count; ++i) {
          auto x    = random_structure();
          auto [y, f] = random_surjection(x);
          check_first(true, x, y, f);
        }
      }

      void second() {
        for (auto const& x : exhaustive_structures()) {
          for (auto const& rho : Ops::congruences(x)) {
            for (Subset s = 1; s <= full_subset(x.order()); ++s) {
              check_second(false, x, rho, s);
            }
          }
        }
        for (int i = 0; i < _options.random_count; ++i) {
          auto x   = random_structure();
          auto all = Ops::congruences(x);
          auto rho = all[pick(_rng, all.size())];
          Subset s = 1 + pick(_rng, full_subset(x.order()));
          check_second(true, x, rho, s);
        }
      }

      void third() {
        for (auto const& x : exhaustive_structures()) {
          auto all = Ops::congruences(x);
          for (auto const& a : all) {
            for (auto const& b : all) {
              if (contained_in(a, b)) {
                check_third(false, x, a, b);
              }
            }
          }
        }
        for (int i = 0; i < _options.random_count; ++i) {
          auto x     = random_structure();
          auto all   = Ops::congruences(x);
          auto alpha = all[pick(_rng, all.size())];
          std::vector<C> above;
          std::copy_if(all.begin(), all.end(), std::back_inserter(above),
                       [&](C const& b) { return contained_in(alpha, b); });
          check_third(true, x, alpha, above[pick(_rng, above.size())]);
        }
      }

     private:
      std::vector<S> exhaustive_structures() const {
        std::vector<S> out;
        for (int n = 1; n <= _options.exhaustive_max_n; ++n) {
          out.insert(out.end(), _reps[n - 1].begin(), _reps[n - 1].end());
        }
        return out;
      }

      ElementMap random_permutation(int n) {
        ElementMap p(n);
        std::iota(p.begin(), p.end(), 0);
        for (int i = n - 1; i > 0; --i) {
          std::swap(p[i], p[pick(_rng, i + 1)]);
        }
        return p;
      }

      S random_structure() {
        int const   n    = 1 + pick(_rng, _options.random_max_n);
        auto const& reps = _reps[n - 1];
        return Ops::relabel(reps[pick(_rng, reps.size())], random_permutation(n));
      }

      // A random map onto a random target, falling back to a relabelled
      // quotient when rejection sampling finds nothing.
      std::pair<S, ElementMap> random_surjection(S const& x) {
        int const n = x.order();
        for (int attempt = 0; attempt < 64; ++attempt) {
          int const   k    = 1 + pick(_rng, n);
          auto const& reps = _reps[k - 1];
          S           y    = Ops::relabel(reps[pick(_rng, reps.size())],
                                   random_permutation(k));
          ElementMap  f(n);
          for (int& v : f) {
            v = pick(_rng, k);
          }
          if (is_surjective(f, k) && Ops::morphism(x, y, f)) {
            return {y, f};
          }
        }
        auto all     = Ops::congruences(x);
        auto [q, pi] = Ops::quotient(x, all[pick(_rng, all.size())]);
        auto p       = random_permutation(q.order());
        for (int& v : pi) {
          v = p[v];
        }
        return {Ops::relabel(q, p), pi};
      }

      void check_first(bool sampled, S const& x, S const& y, ElementMap const& f) {
        _run.check(
            sampled, [&] { return first_holds<Ops>(x, y, f); },
            [&] {
              return to_string(x) + " onto " + to_string(y) + " by " + map_text(f);
            });
      }

      void check_second(bool sampled, S const& x, C const& rho, Subset s) {
        _run.check(
            sampled, [&] { return second_holds<Ops>(x, rho, s); },
            [&] {
              return to_string(x) + " with " + to_string(rho) + " on "
                     + map_text(elements_of(s));
            });
      }

      void check_third(bool sampled, S const& x, C const& a, C const& b) {
        _run.check(
            sampled, [&] { return third_holds<Ops>(x, a, b); },
            [&] {
              return to_string(x) + " with " + to_string(a) + " below "
                     + to_string(b);
            });
      }

      SuiteOptions                _options;
      Runner                      _run;
      std::mt19937_64             _rng;
      std::vector<std::vector<S>> _reps;
    };

    template <typename Ops>
    void run(int which, SuiteOptions const& o, SuiteResult& r) {
      Suite<Ops> suite(o, r);
      switch (which) {
        case 0: suite.first(); break;
        case 1: suite.second(); break;
        default: suite.third(); break;
      }
    }

  }  // namespace

  std::string_view to_string(Theorem t) noexcept {
    switch (t) {
      case Theorem::TopoFirst: return "topo-first";
      case Theorem::TopoSecond: return "topo-second";
      case Theorem::TopoThird: return "topo-third";
      case Theorem::GraphFirst: return "graph-first";
      case Theorem::GraphSecond: return "graph-second";
      case Theorem::GraphThird: return "graph-third";
      case Theorem::LooplessFirst: return "loopless-first";
      case Theorem::LooplessSecond: return "loopless-second";
      case Theorem::LooplessThird: return "loopless-third";
    }
    return "unknown";
  }

  std::vector<Theorem> const& all_theorems() {
    static std::vector<Theorem> const all = {
        Theorem::TopoFirst,     Theorem::TopoSecond,     Theorem::TopoThird,
        Theorem::GraphFirst,    Theorem::GraphSecond,    Theorem::GraphThird,
        Theorem::LooplessFirst, Theorem::LooplessSecond, Theorem::LooplessThird,
    };
    return all;
  }

  SuiteResult run_theorem_suite(Theorem t, SuiteOptions const& options) {
    if (options.exhaustive_max_n < 0 || options.random_max_n < 1
        || options.random_count < 0) {
      fail(ErrorCode::UsageError, "bad theorem suite options");
    }
    SuiteResult r;
    r.theorem       = t;
    int const which = static_cast<int>(t) % 3;
    switch (static_cast<int>(t) / 3) {
      case 0: run<TopoOps>(which, options, r); break;
      case 1: run<GraphOps>(which, options, r); break;
      default: run<LooplessOps>(which, options, r); break;
    }
    return r;
  }

}  // namespace conrad
