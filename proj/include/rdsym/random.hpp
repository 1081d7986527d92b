#pragma once

// Deterministic generators for randomized specs, shared by the CLI's
// randomized verify/symmetry commands and the test suites. Bounded draws use
// plain modular reduction on mt19937_64 so reports are reproducible across
// standard library implementations.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rdsym/coefficients.hpp"
#include "rdsym/rational.hpp"

namespace rdsym {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng_() % span);
  }

  /// Integer in [-bound, bound] \ {0}.
  std::int64_t nonzero(std::int64_t bound) {
    const std::int64_t v = uniform(1, bound);
    return (rng_() & 1U) ? v : -v;
  }

  /// p/q with p, q drawn from [-bound, bound] \ {0}; never zero.
  Rational rational(std::int64_t bound = 9) {
    return Rational{static_cast<long>(nonzero(bound)), static_cast<long>(nonzero(bound))};
  }

  /// Nonzero rational with |value| in [lo, hi], numerator/denominator <= bound.
  Rational rational_in(const Rational& lo, const Rational& hi, std::int64_t bound = 9) {
    while (true) {
      Rational r = rational(bound);
      const Rational a = abs(r);
      if (a >= lo && a <= hi) return r;
    }
  }

  std::vector<Rational> rationals(std::size_t count, std::int64_t bound = 9) {
    std::vector<Rational> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(rational(bound));
    return out;
  }

  /// Constant, periodic (period <= max_period) or explicit (length
  /// explicit_length), chosen uniformly.
  CoefficientSequence sequence(std::size_t explicit_length, std::size_t max_period = 4,
                               std::int64_t bound = 9) {
    switch (uniform(0, 2)) {
      case 0: return CoefficientSequence::constant(rational(bound));
      case 1:
        return CoefficientSequence::periodic(
            rationals(static_cast<std::size_t>(uniform(1, static_cast<std::int64_t>(max_period))), bound));
      default: return CoefficientSequence::explicit_list(rationals(explicit_length, bound));
    }
  }

  bool coin() { return (rng_() & 1U) != 0; }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rdsym
