#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclecon {

/// Invalid graph input: endpoint out of range, loop in strict mode, missing arc.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed network, partition or vector file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when a cycle/clique enumeration exceeds its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t partial_count)
      : std::runtime_error(what + " (enumerated " + std::to_string(partial_count) +
                           " before aborting)"),
        partial_count_(partial_count) {}
  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

/// An internal identity failed (e.g. an odd triangle-weight sum at a vertex).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cyclecon
