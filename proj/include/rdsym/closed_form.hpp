#pragma once

// Closed-form solutions of both equation families, evaluated from the
// initial data and coefficient products/sums alone.
//
// Sixth order. Write Phi = u_0 u_2 u_4, Psi = u_1 u_3 u_5, P_0 = Phi, P_1 = Psi
// and define the chain denominators
//
//   D_k(j) = Theta^k(A, 0, j-1) + P_k sum_{l=0}^{j-1} B_{2l+k} Theta^k(A, l+1, j-1)
//
// so that r~_{2j+k} = D_k(j) / P_k. Then for n = 6q + i, k = i mod 2,
// h = floor(i / 2):
//
//   u_{6q+i} = u_i prod_{s=0}^{q-1} D_k(3s+h) / D_k(3s+h+1).
//
// u_n is defined iff D_k(j) != 0 for every 2 <= 2j+k <= n-4.
//
// Fifth order. With Delta_i = u_i u_{i+1} u_{i+2}, V_{3s+i} = Delta_i / E_i(s)
// where E_i(s) = lambda^s + mu Delta_i sum_{j<s} lambda^j, and
//
//   u_{6q+i} = u_i prod_{s=1}^{2q} V_{3(s-1)+i+1} / V_{3(s-1)+i},
//
// with u_5 itself expressed as u_2 V_3 / V_2. u_n is defined iff
// E_i(s) != 0 for every 3 <= 3s+i <= n-2.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdsym/coefficients.hpp"
#include "rdsym/errors.hpp"
#include "rdsym/rational.hpp"
#include "rdsym/recurrence.hpp"
#include "rdsym/reduced.hpp"

namespace rdsym {

enum class SolveBranch {
  general,
  two_periodic,
  constant_lambda_one,
  constant_lambda_other,
  constant_lambda_minus_one,
  fifth_lambda_one,
  fifth_lambda_other,
};

inline std::string to_string(SolveBranch b) {
  switch (b) {
    case SolveBranch::general: return "general";
    case SolveBranch::two_periodic: return "two-periodic";
    case SolveBranch::constant_lambda_one: return "constant-lambda=1";
    case SolveBranch::constant_lambda_other: return "constant-lambda!=1";
    case SolveBranch::constant_lambda_minus_one: return "constant-lambda=-1";
    case SolveBranch::fifth_lambda_one: return "fifth-lambda=1";
    case SolveBranch::fifth_lambda_other: return "fifth-lambda!=1";
  }
  return "unknown";
}

/// Six nonzero initial values u_0..u_5 (equivalently x_{-5}..x_0).
class SixthInit {
 public:
  explicit SixthInit(const std::vector<Rational>& u) {
    if (u.size() != 6) throw ConfigError("sixth-order initial data needs 6 values");
    for (std::size_t i = 0; i < 6; ++i) {
      if (u[i].is_zero()) throw ConfigError("initial value u_" + std::to_string(i) + " must be nonzero");
      u_[i] = u[i];
    }
  }

  [[nodiscard]] const Rational& u(std::size_t i) const { return u_.at(i); }
  /// x_{-5} x_{-3} x_{-1} = u_0 u_2 u_4
  [[nodiscard]] Rational phi() const { return u_[0] * u_[2] * u_[4]; }
  /// x_{-4} x_{-2} x_0 = u_1 u_3 u_5
  [[nodiscard]] Rational psi() const { return u_[1] * u_[3] * u_[5]; }
  [[nodiscard]] Rational chain_product(int parity) const { return parity == 0 ? phi() : psi(); }
  [[nodiscard]] std::vector<Rational> values() const { return {u_.begin(), u_.end()}; }

 private:
  std::array<Rational, 6> u_;
};

/// Five nonzero initial values u_0..u_4 (A..E, or a..e = x_{-4}..x_0).
class FifthInit {
 public:
  explicit FifthInit(const std::vector<Rational>& u) {
    if (u.size() != 5) throw ConfigError("fifth-order initial data needs 5 values");
    for (std::size_t i = 0; i < 5; ++i) {
      if (u[i].is_zero()) throw ConfigError("initial value u_" + std::to_string(i) + " must be nonzero");
      u_[i] = u[i];
    }
  }

  [[nodiscard]] const Rational& u(std::size_t i) const { return u_.at(i); }
  /// Delta_i = u_i u_{i+1} u_{i+2}, i = 0, 1, 2.
  [[nodiscard]] Rational delta(std::size_t i) const { return u_.at(i) * u_.at(i + 1) * u_.at(i + 2); }
  [[nodiscard]] std::vector<Rational> values() const { return {u_.begin(), u_.end()}; }

 private:
  std::array<Rational, 5> u_;
};

/// Verdict of a forbidden-set scan: defined, or the first singularity.
struct ForbiddenVerdict {
  std::optional<Singularity> witness;

  [[nodiscard]] bool defined() const { return !witness.has_value(); }
  friend bool operator==(const ForbiddenVerdict&, const ForbiddenVerdict&) = default;
};

namespace detail {

/// First (parity, j) in trajectory order with D_k(j) == 0 and 2j+k <= n-4.
template <class ChainDen>
std::optional<Singularity> first_sixth_singularity(std::size_t n, ChainDen&& den) {
  for (std::size_t m = 2; m + 4 <= n; ++m) {
    const int k = static_cast<int>(m % 2);
    const std::size_t j = m / 2;
    if (den(k, j).is_zero()) return Singularity{m + 4, k, j};
  }
  return std::nullopt;
}

/// u_n by the product formula, given a chain-denominator rule D_k(j).
template <class ChainDen>
Rational evaluate_sixth(const SixthInit& init, std::size_t n, ChainDen&& den) {
  if (auto sing = first_sixth_singularity(n, den)) throw SingularError(*sing);
  const std::size_t q = n / 6;
  const std::size_t i = n % 6;
  const int k = static_cast<int>(i % 2);
  const std::size_t h = i / 2;
  Rational u = init.u(i);
  for (std::size_t s = 0; s < q; ++s) u *= den(k, 3 * s + h) / den(k, 3 * s + h + 1);
  return u;
}

}  // namespace detail

/// Chain denominators D_k(j) and solution values of the sixth-order equation
/// with general coefficient sequences, tabulated for u-indices <= max_index.
/// Immutable after construction.
class SixthOrderSolution {
 public:
  SixthOrderSolution(const CoefficientSequence& A, const CoefficientSequence& B,
                     const SixthInit& init, std::size_t max_index)
      : max_index_(max_index) {
    // D_k(j) is needed for 2j+k <= max_index - 4.
    for (int k = 0; k < 2; ++k) {
      const Rational pk = init.chain_product(k);
      auto& chain = den_[static_cast<std::size_t>(k)];
      for (std::size_t j = 0; 2 * j + static_cast<std::size_t>(k) + 4 <= max_index || j < 1; ++j) {
        const AffineSolutionTerms t = affine_solution_terms(A, B, k, j);
        chain.push_back(t.homogeneous + pk * t.forced);
        if (2 * j + static_cast<std::size_t>(k) >= 2 && chain.back().is_zero()) break;
      }
    }
    singularity_ = detail::first_sixth_singularity(
        max_index, [this](int k, std::size_t j) -> const Rational& { return chain_den(k, j); });

    const std::size_t limit = singularity_ ? singularity_->index : max_index + 1;
    values_.reserve(limit);
    for (std::size_t n = 0; n < limit; ++n) {
      if (n < 6) {
        values_.push_back(init.u(n));
        continue;
      }
      const std::size_t i = n % 6;
      const int k = static_cast<int>(i % 2);
      const std::size_t j = 3 * ((n - 6) / 6) + i / 2;
      values_.push_back(values_[n - 6] * chain_den(k, j) / chain_den(k, j + 1));
    }
  }

  /// D_k(j); D_k(0) = 1.
  [[nodiscard]] const Rational& chain_den(int k, std::size_t j) const {
    return den_.at(static_cast<std::size_t>(k)).at(j);
  }
  [[nodiscard]] const std::optional<Singularity>& singularity() const { return singularity_; }
  [[nodiscard]] std::size_t max_index() const { return max_index_; }

  [[nodiscard]] const Rational& value(std::size_t n) const {
    if (n > max_index_) throw OutOfRange("index beyond tabulated range");
    if (singularity_ && n >= singularity_->index) throw SingularError(*singularity_);
    return values_[n];
  }

 private:
  std::size_t max_index_;
  std::array<std::vector<Rational>, 2> den_;
  std::optional<Singularity> singularity_;
  std::vector<Rational> values_;
};

inline Rational solve_sixth(const CoefficientSequence& A, const CoefficientSequence& B,
                            const SixthInit& init, std::size_t n) {
  return SixthOrderSolution(A, B, init, n).value(n);
}

/// x_n for n >= -5, initial data given as x_{-5}..x_0.
inline Rational solve_sixth_x(const CoefficientSequence& a, const CoefficientSequence& b,
                              const SixthInit& init_x, long n) {
  if (n < -5) throw OutOfRange("x-index below -5");
  return solve_sixth(a, b, init_x, static_cast<std::size_t>(n + 5));
}

/// Two-periodic coefficients a = (lambda, mu, ...), b = (eta, zeta, ...).
/// Chain 0 is governed by (lambda, eta, Phi), chain 1 by (mu, zeta, Psi):
///   D_0(j) = lambda^j + eta Phi sum_{l<j} lambda^l.
inline Rational solve_sixth_two_periodic(const Rational& lambda, const Rational& mu,
                                         const Rational& eta, const Rational& zeta_coef,
                                         const SixthInit& init, std::size_t n) {
  const std::array<Rational, 2> base{lambda, mu};
  const std::array<Rational, 2> forcing{eta * init.phi(), zeta_coef * init.psi()};
  auto den = [&](int k, std::size_t j) {
    const auto kk = static_cast<std::size_t>(k);
    const Rational lp = pow(base[kk], static_cast<std::int64_t>(j));
    return lp + forcing[kk] * geometric_sum(base[kk], lp, j);
  };
  return detail::evaluate_sixth(init, n, den);
}

/// Constant coefficients a_n = lambda, b_n = eta. Returns the value and the
/// branch used.
inline std::pair<Rational, SolveBranch> solve_sixth_constant_branch(const Rational& lambda,
                                                                    const Rational& eta,
                                                                    const SixthInit& init,
                                                                    std::size_t n) {
  const std::array<Rational, 2> forcing{eta * init.phi(), eta * init.psi()};

  if (lambda == Rational{-1}) {
    // Period 12: D_k(j) alternates between 1 (j even) and -1 + eta P_k (j odd).
    const Rational one{1};
    const std::array<Rational, 2> odd{forcing[0] - one, forcing[1] - one};
    auto den = [&](int k, std::size_t j) -> const Rational& {
      return j % 2 == 0 ? one : odd[static_cast<std::size_t>(k)];
    };
    if (auto sing = detail::first_sixth_singularity(n, den)) throw SingularError(*sing);
    const std::size_t r = n % 12;
    if (r < 6) return {init.u(r), SolveBranch::constant_lambda_minus_one};
    const std::size_t i = r - 6;
    const Rational& d = odd[i % 2];
    // u_6, u_7: /d;  u_8, u_9: *d;  u_10, u_11: /d
    Rational v = (i / 2 == 1) ? init.u(i) * d : init.u(i) / d;
    return {std::move(v), SolveBranch::constant_lambda_minus_one};
  }

  if (lambda == Rational{1}) {
    auto den = [&](int k, std::size_t j) {
      return Rational{1} + Rational{static_cast<long>(j)} * forcing[static_cast<std::size_t>(k)];
    };
    return {detail::evaluate_sixth(init, n, den), SolveBranch::constant_lambda_one};
  }

  auto den = [&](int k, std::size_t j) {
    const Rational lp = pow(lambda, static_cast<std::int64_t>(j));
    return lp + forcing[static_cast<std::size_t>(k)] * (Rational{1} - lp) / (Rational{1} - lambda);
  };
  return {detail::evaluate_sixth(init, n, den), SolveBranch::constant_lambda_other};
}

inline Rational solve_sixth_constant(const Rational& lambda, const Rational& eta,
                                     const SixthInit& init, std::size_t n) {
  return solve_sixth_constant_branch(lambda, eta, init, n).first;
}

inline ForbiddenVerdict forbidden_sixth(const CoefficientSequence& A, const CoefficientSequence& B,
                                        const SixthInit& init, std::size_t horizon) {
  return ForbiddenVerdict{SixthOrderSolution(A, B, init, horizon).singularity()};
}

/// Moebius chains and solution values of the fifth-order equation, tabulated
/// for u-indices <= max_index. Immutable after construction.
class FifthOrderSolution {
 public:
  FifthOrderSolution(Rational lambda, Rational mu, const FifthInit& init, std::size_t max_index)
      : lambda_(std::move(lambda)), mu_(std::move(mu)), max_index_(max_index) {
    // V_m is needed for m <= max_index - 2; its denominator E_i(s) is scanned
    // in trajectory order.
    const std::size_t v_count = max_index >= 2 ? max_index - 1 : 1;
    const std::size_t want = std::max<std::size_t>(v_count, 3);
    for (std::size_t m = 0; m < want; ++m) {
      const std::size_t i = m % 3;
      const std::size_t s = m / 3;
      const Rational delta = init.delta(i);
      Rational den = moebius_denominator(lambda_, mu_, delta, s);
      if (den.is_zero()) {
        singularity_ = Singularity{m + 2, static_cast<int>(i), s};
        break;
      }
      v_.push_back(delta / den);
    }
    if (singularity_ && singularity_->index > max_index) singularity_.reset();

    const std::size_t limit = singularity_ ? singularity_->index : max_index + 1;
    values_.reserve(limit);
    for (std::size_t n = 0; n < limit; ++n) {
      if (n < 5) {
        values_.push_back(init.u(n));
      } else if (n == 5) {
        values_.push_back(values_[2] * v_[3] / v_[2]);
      } else {
        values_.push_back(values_[n - 6] * v_[n - 5] * v_[n - 2] / (v_[n - 6] * v_[n - 3]));
      }
    }
  }

  [[nodiscard]] SolveBranch branch() const {
    return lambda_ == Rational{1} ? SolveBranch::fifth_lambda_one : SolveBranch::fifth_lambda_other;
  }
  [[nodiscard]] const std::optional<Singularity>& singularity() const { return singularity_; }
  /// V_m for the tabulated, defined range.
  [[nodiscard]] const Rational& v(std::size_t m) const { return v_.at(m); }

  [[nodiscard]] const Rational& value(std::size_t n) const {
    if (n > max_index_) throw OutOfRange("index beyond tabulated range");
    if (singularity_ && n >= singularity_->index) throw SingularError(*singularity_);
    return values_[n];
  }

 private:
  Rational lambda_;
  Rational mu_;
  std::size_t max_index_;
  std::vector<Rational> v_;
  std::optional<Singularity> singularity_;
  std::vector<Rational> values_;
};

inline Rational solve_fifth(const Rational& lambda, const Rational& mu, const FifthInit& init,
                            std::size_t n) {
  return FifthOrderSolution(lambda, mu, init, n).value(n);
}

/// x_n for n >= -4, initial data given as a..e = x_{-4}..x_0.
inline Rational solve_fifth_x(const Rational& lambda, const Rational& mu, const FifthInit& init_x,
                              long n) {
  if (n < -4) throw OutOfRange("x-index below -4");
  return solve_fifth(lambda, mu, init_x, static_cast<std::size_t>(n + 4));
}

inline ForbiddenVerdict forbidden_fifth(const Rational& lambda, const Rational& mu,
                                        const FifthInit& init, std::size_t horizon) {
  return ForbiddenVerdict{FifthOrderSolution(lambda, mu, init, horizon).singularity()};
}

}  // namespace rdsym
