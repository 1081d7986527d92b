#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdsym {

/// Malformed literal or sequence description.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Inconsistent configuration: wrong arity, zero initial value, coefficient
/// index past the end of an explicit list.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAUnit : public std::domain_error {
 public:
  NotAUnit() : std::domain_error("not a unit") {}
};

/// Evaluation point outside the domain of the equation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Location of the first vanishing denominator.
///
/// `index` is the first u-index whose value is undefined. `chain` is the
/// parity k (sixth order, chain r~_{2j+k}) or residue i (fifth order, chain
/// V_{3s+i}) of the reduced quantity that vanished, and `step` is its position
/// j or s in that chain. For the sixth order the non-vanishing conditions are
/// usually written with theta_step() = step - 1.
struct Singularity {
  std::size_t index = 0;
  int chain = 0;
  std::size_t step = 0;

  [[nodiscard]] std::size_t theta_step() const { return step - 1; }
  friend bool operator==(const Singularity&, const Singularity&) = default;
};

class SingularError : public std::domain_error {
 public:
  explicit SingularError(const Singularity& where)
      : std::domain_error("singular at index " + std::to_string(where.index) + " (chain " +
                          std::to_string(where.chain) + ", step " + std::to_string(where.step) +
                          ")"),
        where_(where) {}

  [[nodiscard]] const Singularity& where() const { return where_; }

 private:
  Singularity where_;
};

}  // namespace rdsym
