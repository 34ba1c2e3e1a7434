#pragma once

#include <stdexcept>
#include <string>

namespace hrec {

/// Invalid configuration or violated call precondition.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Point outside the closed unit square.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A linear solve missed its residual contract.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, double achieved_residual)
      : std::runtime_error(what), achieved_residual(achieved_residual) {}
  double achieved_residual;
};

/// Recovery-level failure (e.g. Gramian singular to working precision).
class RecoveryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace hrec
