#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hullprob {

enum class ErrorKind {
  Parse,
  Io,
  InvalidInstance,
  InvalidContext,
  DegenerateInstance,
  DegenerateSupport,
  DegenerateInput,
  CollinearCandidates,
  EmptyOthers,
  NonIntegerAreas,
  BudgetOverflow,
  InvalidEpsilon,
  InvalidParams,
  RoundedDegeneracy,
  TooLarge,
  PropertyViolation,
  NonIntegralCount,
  PreconditionViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Library-wide exception. `kind()` is the machine-readable reason the CLI
/// reports; `witness()` carries offending point indices when there are any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

}  // namespace hullprob
