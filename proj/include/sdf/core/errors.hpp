#pragma once

#include <stdexcept>

namespace sdf {

// Bad call arguments: count totals that do not match n, malformed grouping
// breaks, zero bandwidth and the like.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A probability model that cannot be built (non-monotone G, mass far from 1).
class ModelError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace sdf
