#ifndef PRIN_ERRORS_HPP
#define PRIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prin {

// Input text did not conform to the polynomial grammar.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

// Two operands live in different rings.
class ring_mismatch_error : public std::runtime_error {
public:
  explicit ring_mismatch_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A configurable cap (generator count, total degree, step budget) was hit.
class resource_limit_error : public std::runtime_error {
public:
  explicit resource_limit_error(const std::string& what)
      : std::runtime_error(what) {}
};

// A stated precondition failed (bad center, zero restriction, marking
// mismatch, divisibility failure, non-rectifiable contact, ...).
class precondition_error : public std::runtime_error {
public:
  explicit precondition_error(const std::string& what)
      : std::runtime_error(what) {}
};

struct Limits {
  std::size_t max_generators = 512;
  long max_total_degree = 64;
  std::size_t max_steps = 10000;
};

Limits& global_limits();

} // namespace prin

#endif
