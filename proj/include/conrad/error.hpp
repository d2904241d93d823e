#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conrad {

  enum class ErrorCode {
    // structures
    MissingEmptyOrFull,
    NotClosedUnderUnion,
    NotClosedUnderIntersection,
    PolicyMismatch,
    BoundExceeded,
    EmptySubset,
    InvalidStructure,
    // congruences
    NotATopology,
    NotSubTopology,
    NotSaturated,
    EdgeSetOutOfRange,
    SubstitutionViolated,
    IndependenceViolated,
    NotContinuous,
    NotHomomorphism,
    NotSurjective,
    NotContained,
    InvalidCongruence,
    EmptyList,
    TrivialSpace,
    SearchExhausted,
    // radicals
    NoQualifyingCongruence,
    KindMismatch,
    KindUnsupported,
    BadCatalogId,
    LemmaConditionFailed,
    UnknownClass,
    // io
    SyntaxError,
    SemanticError,
    UsageError,
  };

  std::string_view to_string(ErrorCode code) noexcept;

  // Every library failure is reported through this one exception type; the
  // code identifies which contract was broken.
  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          _code(code) {}

    [[nodiscard]] ErrorCode code() const noexcept {
      return _code;
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void fail(ErrorCode code, std::string const& what) {
    throw Error(code, what);
  }

}  // namespace conrad
