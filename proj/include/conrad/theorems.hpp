#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace conrad {

  // The three isomorphism theorems for each structure kind. Each instance
  // check builds the canonical bijection explicitly and verifies that it is
  // an isomorphism, rather than only comparing isomorphism classes.
  enum class Theorem {
    TopoFirst,
    TopoSecond,
    TopoThird,
    GraphFirst,
    GraphSecond,
    GraphThird,
    LooplessFirst,
    LooplessSecond,
    LooplessThird,
  };

  std::string_view       to_string(Theorem t) noexcept;
  std::vector<Theorem> const& all_theorems();

  struct SuiteOptions {
    int           exhaustive_max_n = 3;
    int           random_count     = 1000;
    int           random_max_n     = 4;
    std::uint64_t seed             = 1;
  };

  struct SuiteResult {
    Theorem     theorem{};
    long        exhaustive = 0;  // instances checked exhaustively
    long        sampled    = 0;  // seeded random instances
    long        failures   = 0;
    std::string first_failure;   // empty when there were none

    [[nodiscard]] bool ok() const noexcept {
      return failures == 0;
    }
  };

  // Every instance on structures with at most exhaustive_max_n points, then
  // random_count random instances drawn with the seed. Random structures are
  // randomly relabelled representatives, so non-canonical inputs are covered.
  SuiteResult run_theorem_suite(Theorem t, SuiteOptions const& options);

}  // namespace conrad
