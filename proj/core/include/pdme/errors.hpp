#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdme {

/// Base class for all pdme errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two values from structurally different rings were combined.
class RingMismatchError : public Error {
public:
  using Error::Error;
};

/// Malformed expression or document text.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Input that parses but violates a semantic precondition
/// (antisymmetry, unknown variable, non-unit image, ...).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A computation exceeded its configured step budget.
class ResourceError : public Error {
public:
  ResourceError(std::uint64_t budget, std::uint64_t used)
      : Error("step budget exceeded: budget=" + std::to_string(budget) +
              " steps_used=" + std::to_string(used)),
        budget_(budget), used_(used) {}

  std::uint64_t budget() const { return budget_; }
  std::uint64_t steps_used() const { return used_; }

private:
  std::uint64_t budget_;
  std::uint64_t used_;
};

/// Counts work done by iterative algorithms and throws ResourceError
/// once the limit is hit. A default-constructed budget is effectively
/// unlimited.
class StepBudget {
public:
  static constexpr std::uint64_t kDefaultLimit = 200'000'000;

  StepBudget() = default;
  explicit StepBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > limit_) throw ResourceError(limit_, used_);
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_ = kDefaultLimit;
  std::uint64_t used_ = 0;
};

} // namespace pdme
