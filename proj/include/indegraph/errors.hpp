#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace indegraph {

/// Raised when a request exceeds a configured size limit (graph build,
/// exact NP-hard searches). Never raised for invalid input.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::string operation, std::uint64_t requested, std::uint64_t limit)
      : std::runtime_error(operation + ": n = " + std::to_string(requested) +
                           " exceeds configured limit " + std::to_string(limit)),
        operation_(std::move(operation)),
        requested_(requested),
        limit_(limit) {}

  const std::string& operation() const noexcept { return operation_; }
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string operation_;
  std::uint64_t requested_;
  std::uint64_t limit_;
};

/// A statement was evaluated outside its hypothesis (e.g. a formula stated
/// only for n > 2).
class NotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace indegraph
