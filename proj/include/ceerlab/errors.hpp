#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ceerlab {

using Natural = std::uint64_t;
using Stage = std::uint64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pair was asserted at a stage earlier than one already enumerated.
class MonotonicityError : public Error {
 public:
  using Error::Error;
};

// An index at or beyond a table's working bound.
class RangeError : public Error {
 public:
  using Error::Error;
};

// A reduction was asked for a value it has not converged on.
class PartialityError : public Error {
 public:
  PartialityError(Natural argument, const std::string& what)
      : Error(what), argument_(argument) {}
  Natural argument() const noexcept { return argument_; }

 private:
  Natural argument_;
};

// A degree-truncated query above the ideal's materialization horizon.
class HorizonError : public Error {
 public:
  HorizonError(std::size_t degree, std::size_t horizon)
      : Error("degree " + std::to_string(degree) + " is above the horizon " +
              std::to_string(horizon)),
        degree_(degree),
        horizon_(horizon) {}
  std::size_t degree() const noexcept { return degree_; }
  std::size_t horizon() const noexcept { return horizon_; }

 private:
  std::size_t degree_;
  std::size_t horizon_;
};

class ModulusMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A structural invariant (triangularity, alternation, ...) was broken.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The Golod-Shafarevich inequality failed during a construction.
class GSViolation : public Error {
 public:
  GSViolation(Stage stage, std::size_t degree, const std::string& what)
      : Error(what), stage_(stage), degree_(degree) {}
  Stage stage() const noexcept { return stage_; }
  std::size_t degree() const noexcept { return degree_; }

 private:
  Stage stage_;
  std::size_t degree_;
};

// The star-universal construction ran out of level generators.
class BudgetExhausted : public Error {
 public:
  BudgetExhausted(std::size_t level, std::string requirement,
                  const std::string& what)
      : Error(what), level_(level), requirement_(std::move(requirement)) {}
  std::size_t level() const noexcept { return level_; }
  const std::string& requirement() const noexcept { return requirement_; }

 private:
  std::size_t level_;
  std::string requirement_;
};

}  // namespace ceerlab
