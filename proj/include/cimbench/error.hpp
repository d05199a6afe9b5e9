#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cimbench {

// Malformed edge-list or config input. `line` is 1-based; 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what
                                : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A continuous-state solver produced NaN or Inf.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& solver, std::size_t step)
      : std::runtime_error(solver + " diverged at step " +
                           std::to_string(step)),
        step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace cimbench
