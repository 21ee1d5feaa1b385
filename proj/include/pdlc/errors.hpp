#pragma once

#include <stdexcept>
#include <string>

namespace pdlc {

/// Base class for all library errors.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed inputs: non-positive time constants, quotas outside the window,
/// empty pools, bad gain factors.
class InvalidParameterError : public SimError {
 public:
  using SimError::SimError;
};

/// Structurally valid inputs that admit no solution: capacity shortfalls,
/// unreachable duty cycles, empty packet-length or quota ranges, diverging
/// gain settings.
class InfeasibleError : public SimError {
 public:
  using SimError::SimError;
};

/// Scenario file problems: unreadable input, schema violations, malformed
/// run logs.
class ScenarioError : public SimError {
 public:
  using SimError::SimError;
};

}  // namespace pdlc
