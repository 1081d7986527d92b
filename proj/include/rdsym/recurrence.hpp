#pragma once

// Forward iteration of the two equation families over exact rationals:
//
//   sixth order:  u_{n+6} = u_n / (A_n + B_n u_n u_{n+2} u_{n+4})
//   fifth order:  u_{n+5} = u_n u_{n+1} u_{n+2} / (u_{n+3} u_{n+4} (lambda + mu u_n u_{n+1} u_{n+2}))
//
// These are the reference trajectories every closed form is checked against.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rdsym/coefficients.hpp"
#include "rdsym/errors.hpp"
#include "rdsym/rational.hpp"

namespace rdsym {

enum class Family { sixth, fifth };

inline std::string to_string(Family f) { return f == Family::sixth ? "sixth" : "fifth"; }

/// Order of the family, which is also the number of initial values.
constexpr std::size_t order(Family f) { return f == Family::sixth ? 6 : 5; }

/// Offset between the u- and x-indexings: x_i = u_{i + offset}.
constexpr long x_offset(Family f) { return f == Family::sixth ? 5 : 4; }

struct SixthOrderParams {
  CoefficientSequence A;
  CoefficientSequence B;
};

struct FifthOrderParams {
  Rational lambda;
  Rational mu;
};

class EquationSpec {
 public:
  static EquationSpec sixth(CoefficientSequence A, CoefficientSequence B,
                            std::vector<Rational> initial) {
    return EquationSpec(SixthOrderParams{std::move(A), std::move(B)}, std::move(initial));
  }
  static EquationSpec fifth(Rational lambda, Rational mu, std::vector<Rational> initial) {
    return EquationSpec(FifthOrderParams{std::move(lambda), std::move(mu)}, std::move(initial));
  }

  [[nodiscard]] Family family() const {
    return std::holds_alternative<SixthOrderParams>(params_) ? Family::sixth : Family::fifth;
  }
  [[nodiscard]] const std::vector<Rational>& initial() const { return initial_; }
  [[nodiscard]] const SixthOrderParams& sixth_params() const {
    return std::get<SixthOrderParams>(params_);
  }
  [[nodiscard]] const FifthOrderParams& fifth_params() const {
    return std::get<FifthOrderParams>(params_);
  }

 private:
  EquationSpec(std::variant<SixthOrderParams, FifthOrderParams> params,
               std::vector<Rational> initial)
      : params_(std::move(params)), initial_(std::move(initial)) {
    const std::size_t want = order(family());
    if (initial_.size() != want)
      throw ConfigError(to_string(family()) + "-order equation needs " + std::to_string(want) +
                        " initial values, got " + std::to_string(initial_.size()));
    for (std::size_t i = 0; i < initial_.size(); ++i)
      if (initial_[i].is_zero())
        throw ConfigError("initial value u_" + std::to_string(i) + " must be nonzero");
  }

  std::variant<SixthOrderParams, FifthOrderParams> params_;
  std::vector<Rational> initial_;
};

/// Values u_0, u_1, ... up to the requested length or up to the first index
/// whose defining denominator vanished.
struct Trajectory {
  std::vector<Rational> values;
  std::optional<std::size_t> singular_at;

  [[nodiscard]] std::size_t size() const { return values.size(); }
  [[nodiscard]] bool singular() const { return singular_at.has_value(); }
  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

inline Trajectory iterate(const EquationSpec& spec, std::size_t count) {
  Trajectory t;
  const auto& init = spec.initial();
  t.values.reserve(count);
  for (std::size_t i = 0; i < count && i < init.size(); ++i) t.values.push_back(init[i]);
  auto& u = t.values;

  if (spec.family() == Family::sixth) {
    const auto& p = spec.sixth_params();
    for (std::size_t m = 6; m < count; ++m) {
      const std::size_t n = m - 6;
      const Rational den = p.A[n] + p.B[n] * u[n] * u[n + 2] * u[n + 4];
      if (den.is_zero()) {
        t.singular_at = m;
        break;
      }
      u.push_back(u[n] / den);
    }
  } else {
    const auto& p = spec.fifth_params();
    for (std::size_t m = 5; m < count; ++m) {
      const std::size_t n = m - 5;
      const Rational prod = u[n] * u[n + 1] * u[n + 2];
      const Rational den = u[n + 3] * u[n + 4] * (p.lambda + p.mu * prod);
      if (den.is_zero()) {
        t.singular_at = m;
        break;
      }
      u.push_back(prod / den);
    }
  }
  return t;
}

/// Read-only x-indexed view of a trajectory: x_i = u_{i+5} (sixth order) or
/// x_i = u_{i+4} (fifth order).
class XIndexView {
 public:
  XIndexView(const Trajectory& traj, Family family) : traj_(&traj), offset_(x_offset(family)) {}

  [[nodiscard]] const Rational& at(long i) const {
    const long u_index = i + offset_;
    if (u_index < 0 || static_cast<std::size_t>(u_index) >= traj_->values.size())
      throw OutOfRange("x_" + std::to_string(i) + " outside computed range");
    return traj_->values[static_cast<std::size_t>(u_index)];
  }
  [[nodiscard]] long first() const { return -offset_; }
  /// One past the last computed x-index.
  [[nodiscard]] long end() const { return static_cast<long>(traj_->values.size()) - offset_; }

 private:
  const Trajectory* traj_;
  long offset_;
};

inline XIndexView x_index_view(const Trajectory& traj, Family family) {
  return XIndexView(traj, family);
}

}  // namespace rdsym
