#pragma once

#include <stdexcept>
#include <string>

namespace trifree {

/// Invalid graph construction input (bad endpoint, self-loop, bad blow-up sizes).
class GraphError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 or edge-list text.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on an input outside its contract
/// (triangles where triangle-free is required, non-regular graph, a != 0, ...).
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// QL iteration failed to converge for the eigenvalue at `index`.
class SolverError : public std::runtime_error {
public:
  SolverError(const std::string& what, int index)
      : std::runtime_error(what), index_(index) {}
  int index() const noexcept { return index_; }

private:
  int index_;
};

/// SRG parameters whose eigenvalue multiplicities are not positive integers.
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace trifree
