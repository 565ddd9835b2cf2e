#pragma once

#include <stdexcept>
#include <string>

namespace jicert {

class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for its inputs.
class PreconditionError : public Error
{
public:
  using Error::Error;
};

/// The operation needs a full element table and was handed a chain-mode group.
class NeedsDenseMode : public Error
{
public:
  using Error::Error;
};

/// Constructing a dense group would exceed the configured element bound.
class DenseBoundExceeded : public Error
{
public:
  using Error::Error;
};

/// Generator images do not extend to a homomorphism.
class InvalidHomomorphism : public Error
{
public:
  using Error::Error;
};

/// A hypothesis required by a constructive procedure fails; `level` names where.
class HypothesisError : public Error
{
public:
  HypothesisError(std::string const &what, std::size_t level)
  : Error(what), level_(level)
  {}

  std::size_t level() const noexcept { return level_; }

private:
  std::size_t level_;
};

/// A search that cannot fail on valid input came up empty. Always an engine bug.
class ExhaustionFailure : public Error
{
public:
  using Error::Error;
};

} // namespace jicert
