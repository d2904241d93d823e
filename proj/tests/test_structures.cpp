#include "doctest.h"

#include <numeric>

#include "conrad/error.hpp"
#include "conrad/structures.hpp"
#include "oracles.hpp"

using namespace conrad;

namespace {

  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::UsageError;
  }

  ElementMap inverse(ElementMap const& f) {
    ElementMap g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[f[i]] = static_cast<int>(i);
    }
    return g;
  }

  ElementMap compose(ElementMap const& g, ElementMap const& f) {
    ElementMap out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      out[i] = g[f[i]];
    }
    return out;
  }

}  // namespace

TEST_CASE("validate_space") {
  CHECK(validate_space(2, Family{0, 0b01, 0b11}) == named::S2());
  CHECK(validate_space(1, Family{0, 1}) == named::point());
  CHECK(code_of([] { validate_space(2, Family{0, 0b01, 0b10}); })
        == ErrorCode::MissingEmptyOrFull);
  CHECK(code_of([] { validate_space(3, Family{0, 0b001, 0b010, 0b111}); })
        == ErrorCode::NotClosedUnderUnion);
  CHECK(code_of([] { validate_space(3, Family{0, 0b011, 0b110, 0b111}); })
        == ErrorCode::NotClosedUnderIntersection);
}

TEST_CASE("iso_graphs and homeo_spaces") {
  FiniteGraph swapped(2, LoopPolicy::LoopsAllowed, EdgeSet{{0, 1}});
  CHECK(iso_graphs(named::B(2), swapped) == ElementMap{0, 1});
  FiniteGraph b3_swapped(2, LoopPolicy::LoopsAllowed, EdgeSet{{1, 1}});
  CHECK(iso_graphs(named::B(3), b3_swapped) == ElementMap{1, 0});
  CHECK_FALSE(iso_graphs(named::B(3), named::B(5)));
  CHECK_FALSE(iso_graphs(named::K(3), named::path(3)));
  CHECK(code_of([] { iso_graphs(named::B(1), named::edgeless(2)); })
        == ErrorCode::PolicyMismatch);

  CHECK(homeo_spaces(named::S2(), FiniteSpace(2, Family{0, 0b10, 0b11}))
        == ElementMap{1, 0});
  CHECK_FALSE(homeo_spaces(named::S2(), named::I2()));
  CHECK(homeo_spaces(named::D2(), named::D2()) == ElementMap{0, 1});
}

TEST_CASE("isomorphism is an equivalence on enumerated graphs") {
  for (auto policy : {LoopPolicy::LoopsAllowed, LoopPolicy::NoLoops}) {
    for (int n = 1; n <= 3; ++n) {
      // All labelled graphs, not only representatives.
      std::vector<FiniteGraph> graphs;
      EdgeSet                  all = EdgeSet::all_pairs(n, policy == LoopPolicy::LoopsAllowed);
      for (std::uint64_t m = 0; m <= all.bits(); ++m) {
        if ((m & ~all.bits()) == 0) {
          graphs.emplace_back(n, policy, EdgeSet(m));
        }
      }
      for (auto const& g : graphs) {
        CHECK(iso_graphs(g, g));
        for (auto const& h : graphs) {
          auto f = iso_graphs(g, h);
          if (!f) {
            CHECK_FALSE(iso_graphs(h, g));
            continue;
          }
          CHECK(is_homomorphism(g, h, *f));
          CHECK(is_homomorphism(h, g, inverse(*f)));
          for (auto const& k : graphs) {
            if (auto f2 = iso_graphs(h, k)) {
              CHECK(is_homomorphism(g, k, compose(*f2, *f)));
              CHECK(iso_graphs(g, k));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("homeomorphism is an equivalence on all topologies up to 3 points") {
  for (int n = 1; n <= 3; ++n) {
    for (Family a : all_topologies(n)) {
      FiniteSpace x(n, a);
      for (Family b : all_topologies(n)) {
        FiniteSpace y(n, b);
        auto        f = homeo_spaces(x, y);
        CHECK(f.has_value() == homeo_spaces(y, x).has_value());
        if (f) {
          CHECK(x.opens().mapped(*f) == y.opens());
          CHECK(canonical_form(x) == canonical_form(y));
        } else {
          CHECK(canonical_form(x) != canonical_form(y));
        }
      }
    }
  }
}

TEST_CASE("enumerate_graphs against brute force") {
  auto two = enumerate_graphs(2, LoopPolicy::LoopsAllowed);
  REQUIRE(two.size() == 6);
  for (int i = 1; i <= 6; ++i) {
    int matches = 0;
    for (auto const& g : two) {
      matches += iso_graphs(g, named::B(i)) ? 1 : 0;
    }
    CHECK(matches == 1);
  }
  CHECK(enumerate_graphs(2, LoopPolicy::NoLoops).size() == 2);
  CHECK(enumerate_graphs(4, LoopPolicy::NoLoops).size() == 11);
  CHECK(enumerate_graphs(5, LoopPolicy::NoLoops).size() == 34);
  for (int n = 1; n <= 4; ++n) {
    CHECK(static_cast<int>(enumerate_graphs(n, LoopPolicy::NoLoops).size())
          == oracle::count_graph_classes(n, false));
  }
  for (int n = 1; n <= 3; ++n) {
    CHECK(static_cast<int>(enumerate_graphs(n, LoopPolicy::LoopsAllowed).size())
          == oracle::count_graph_classes(n, true));
  }
  CHECK(code_of([] { enumerate_graphs(7, LoopPolicy::NoLoops, 6); })
        == ErrorCode::BoundExceeded);
}

TEST_CASE("enumerated graphs are canonical, sorted and pairwise distinct") {
  for (int n = 1; n <= 4; ++n) {
    auto list = enumerate_graphs(n, LoopPolicy::LoopsAllowed);
    CHECK(std::is_sorted(list.begin(), list.end()));
    for (std::size_t i = 0; i < list.size(); ++i) {
      CHECK(canonical_form(list[i]) == list[i]);
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        CHECK_FALSE(iso_graphs(list[i], list[j]));
      }
    }
  }
}

TEST_CASE("enumerate_spaces against brute force") {
  CHECK(enumerate_spaces(1) == std::vector{named::point()});
  auto two = enumerate_spaces(2);
  REQUIRE(two.size() == 3);
  CHECK(enumerate_spaces(3).size() == 9);
  for (int n = 1; n <= 3; ++n) {
    CHECK(static_cast<int>(enumerate_spaces(n).size())
          == oracle::count_space_classes(n));
  }
  CHECK(enumerate_spaces(4).size() == 33);
  CHECK(all_topologies(3).size() == 29);
  CHECK(all_topologies(4).size() == 355);
  CHECK(code_of([] { enumerate_spaces(5, 4); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("induced substructures") {
  CHECK(induced(named::B(6), 0b01) == named::T0());
  CHECK(induced(named::A3(), 0b011) == named::B(6));
  CHECK(subspace(named::S2(), 0b10) == named::point());
  CHECK(code_of([] { induced(named::B(1), 0); }) == ErrorCode::EmptySubset);
  for (auto const& g : enumerate_graphs(3, LoopPolicy::LoopsAllowed)) {
    CHECK(induced(g, g.vertices()) == g);
  }
  for (auto const& x : enumerate_spaces(3)) {
    CHECK(subspace(x, x.points()) == x);
  }
}

TEST_CASE("completion") {
  CHECK(completion(named::edgeless(2)) == named::K(2));
  CHECK(completion(named::K(3)) == named::K(3));
  CHECK(completion(named::path(3)) == named::K(3));
  CHECK(code_of([] { completion(named::B(1)); }) == ErrorCode::PolicyMismatch);
  for (int n = 1; n <= 5; ++n) {
    for (auto const& g : enumerate_graphs(n, LoopPolicy::NoLoops)) {
      CHECK(completion(completion(g)) == completion(g));
    }
  }
}

TEST_CASE("named constants") {
  CHECK(named::B(1).edges().empty());
  CHECK(named::B(6).edges() == EdgeSet{{0, 0}, {0, 1}, {1, 1}});
  CHECK(named::A3().edges() == EdgeSet{{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  CHECK(named::S2().opens() == Family{0, 0b01, 0b11});
  CHECK(named::I2().is_indiscrete());
  CHECK(named::D2().is_discrete());
  CHECK(named::D2().is_t1());
  CHECK_FALSE(named::S2().is_t1());
  CHECK(named::S2().is_t0());
  CHECK_FALSE(named::I2().is_t0());
}

TEST_CASE("partitions") {
  auto parts = all_partitions(4);
  CHECK(parts.size() == 15);
  CHECK(oracle::set_partitions(4).size() == 15);
  CHECK(std::is_sorted(parts.begin(), parts.end()));
  for (auto const& a : parts) {
    for (auto const& b : parts) {
      auto m = meet(a, b);
      auto j = join(a, b);
      CHECK(m.refines(a));
      CHECK(m.refines(b));
      CHECK(a.refines(j));
      CHECK(b.refines(j));
      for (auto const& c : parts) {
        if (c.refines(a) && c.refines(b)) {
          CHECK(c.refines(m));
        }
        if (a.refines(c) && b.refines(c)) {
          CHECK(j.refines(c));
        }
      }
    }
  }
  CHECK(Partition({5, 3, 5}) == Partition({0, 1, 0}));
}
