#pragma once

#include <stdexcept>
#include <string>

namespace secorder
{

/// Caller passed arguments that violate an operation's signature contract
/// (width or arity mismatch, out-of-range coordinate, malformed input).
class usage_error : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Arguments are well formed but outside the mathematical domain of the
/// operation, e.g. a family with an empty component passed to Sec.
class domain_error : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

/// A configured enumeration or sweep budget would be exceeded.
class resource_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

} // namespace secorder
