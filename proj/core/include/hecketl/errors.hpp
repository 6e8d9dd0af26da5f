#pragma once

#include <stdexcept>
#include <string>

namespace hecketl {

/// Malformed or unsupported Coxeter graph description.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Group enumeration exceeded its element cap (infinite or too-large group).
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its domain (e.g. b_w for a complex w).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An algebraic invariant the computation relies on was found violated.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hecketl
