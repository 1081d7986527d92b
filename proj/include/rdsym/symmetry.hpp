#pragma once

// Exact checks of the Lie point symmetry structure of both families.
//
// A characteristic Q(n, u) = alpha_n u^2 + beta_n u with beta_n = root^n and
// alpha_n = alpha * root^n acts through the prolonged generator
//   X = sum_k (S^k Q) d/du_{n+k},   S^k Q = Q(n+k, u_{n+k}),
// and is a symmetry when the linearized condition S^p Q - X Omega = 0 holds
// on solutions. All roots live in Q(zeta6), so every residual is exact.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdsym/cyclotomic.hpp"
#include "rdsym/errors.hpp"
#include "rdsym/rational.hpp"
#include "rdsym/recurrence.hpp"

namespace rdsym {

struct Characteristic {
  Family family = Family::sixth;
  std::string name;
  Cyclotomic root{1};
  Cyclotomic alpha{0};

  /// beta_n = root^n
  [[nodiscard]] Cyclotomic beta(std::int64_t n) const { return cyc_pow(root, n); }

  /// Q(n, u) = alpha root^n u^2 + root^n u
  [[nodiscard]] Cyclotomic eval(std::int64_t n, const Rational& u) const {
    const Cyclotomic rn = beta(n);
    return rn * u + alpha * rn * (u * u);
  }
};

/// Q1 = (-beta)^n u, Q2 = (-conj beta)^n u, Q3 = conj(beta)^n u, Q4 = beta^n u
/// with beta = exp(i pi/3) = zeta.
inline std::array<Characteristic, 4> sixth_characteristics() {
  const Cyclotomic z = Cyclotomic::zeta();
  return {{
      {Family::sixth, "Q1", -z, 0},
      {Family::sixth, "Q2", -z.conj(), 0},
      {Family::sixth, "Q3", z.conj(), 0},
      {Family::sixth, "Q4", z, 0},
  }};
}

/// Q5 = beta^n u, Q6 = conj(beta)^n u with beta = exp(-2 i pi/3) = zeta^4.
inline std::array<Characteristic, 2> fifth_characteristics() {
  const Cyclotomic b = Cyclotomic::zeta_pow(4);
  return {{
      {Family::fifth, "Q5", b, 0},
      {Family::fifth, "Q6", b.conj(), 0},
  }};
}

/// Arguments of the sixth-order map at step n: only u_n, u_{n+2}, u_{n+4}
/// enter Omega.
struct SixthPoint {
  std::int64_t n = 0;
  Rational u0, u2, u4;  // u_n, u_{n+2}, u_{n+4}
  Rational A, B;        // A_n, B_n

  [[nodiscard]] Rational denominator() const { return A + B * u0 * u2 * u4; }
  void validate() const {
    if (u0.is_zero() || u2.is_zero() || u4.is_zero())
      throw PreconditionError("evaluation point needs nonzero u values");
    if (denominator().is_zero()) throw PreconditionError("Omega undefined at evaluation point");
  }
  [[nodiscard]] Rational omega() const { return u0 / denominator(); }
};

struct FifthPoint {
  std::int64_t n = 0;
  std::array<Rational, 5> u;  // u_n .. u_{n+4}
  Rational lambda, mu;

  [[nodiscard]] Rational product() const { return u[0] * u[1] * u[2]; }
  void validate() const {
    for (const auto& x : u)
      if (x.is_zero()) throw PreconditionError("evaluation point needs nonzero u values");
    if ((lambda + mu * product()).is_zero())
      throw PreconditionError("Omega undefined at evaluation point");
  }
  [[nodiscard]] Rational omega() const {
    return product() / (u[3] * u[4] * (lambda + mu * product()));
  }
};

/// Partial derivatives dOmega/du_{n+k}, k = 0..5, of
/// Omega = u_n / (A + B u_n u_{n+2} u_{n+4}); odd k vanish.
inline std::array<Rational, 6> sixth_omega_partials(const SixthPoint& p) {
  const Rational d = p.denominator();
  const Rational d2 = d * d;
  return {p.A / d2,
          Rational{0},
          -(p.B * p.u0 * p.u0 * p.u4) / d2,
          Rational{0},
          -(p.B * p.u0 * p.u0 * p.u2) / d2,
          Rational{0}};
}

/// Partial derivatives dOmega/du_{n+k}, k = 0..4, of
/// Omega = P / (u_{n+3} u_{n+4} E),  P = u_n u_{n+1} u_{n+2},  E = lambda + mu P.
inline std::array<Rational, 5> fifth_omega_partials(const FifthPoint& p) {
  const Rational prod = p.product();
  const Rational e = p.lambda + p.mu * prod;
  const Rational omega = p.omega();
  // d(P/E)/dP = lambda / E^2
  const Rational dp = p.lambda / (p.u[3] * p.u[4] * e * e);
  return {dp * prod / p.u[0], dp * prod / p.u[1], dp * prod / p.u[2], -omega / p.u[3],
          -omega / p.u[4]};
}

/// Simplified sixth-order condition
///   S^6 Q + (B u_n^2 u_{n+2} S^4 Q + B u_n^2 u_{n+4} S^2 Q - A Q) / (B u_n u_{n+2} u_{n+4} + A)^2.
inline Cyclotomic lsc_residual_sixth(const Characteristic& q, const SixthPoint& p) {
  if (q.family != Family::sixth) throw PreconditionError("sixth-order residual needs a sixth-family characteristic");
  p.validate();
  const std::int64_t n = p.n;
  const Rational d = p.denominator();
  const Cyclotomic s6 = q.eval(n + 6, p.omega());
  const Cyclotomic s4 = q.eval(n + 4, p.u4);
  const Cyclotomic s2 = q.eval(n + 2, p.u2);
  const Cyclotomic s0 = q.eval(n, p.u0);
  const Rational bu0sq = p.B * p.u0 * p.u0;
  Cyclotomic bracket = s4 * (bu0sq * p.u2) + s2 * (bu0sq * p.u4) - s0 * p.A;
  return s6 + bracket * (d * d).inverse();
}

/// Generic form S^6 Q - X Omega using the prolonged generator.
inline Cyclotomic lsc_residual_sixth_generic(const Characteristic& q, const SixthPoint& p) {
  if (q.family != Family::sixth) throw PreconditionError("sixth-order residual needs a sixth-family characteristic");
  p.validate();
  const auto partials = sixth_omega_partials(p);
  // Odd-shift values do not enter Omega; their partials are zero, so any
  // nonzero placeholder gives the same X Omega.
  const std::array<Rational, 6> args{p.u0, Rational{1}, p.u2, Rational{1}, p.u4, Rational{1}};
  Cyclotomic x_omega{0};
  for (std::size_t k = 0; k < 6; ++k)
    x_omega += q.eval(p.n + static_cast<std::int64_t>(k), args[k]) * partials[k];
  return q.eval(p.n + 6, p.omega()) - x_omega;
}

/// S^5 Q - X Omega for the fifth-order map.
inline Cyclotomic lsc_residual_fifth(const Characteristic& q, const FifthPoint& p) {
  if (q.family != Family::fifth) throw PreconditionError("fifth-order residual needs a fifth-family characteristic");
  p.validate();
  const auto partials = fifth_omega_partials(p);
  Cyclotomic x_omega{0};
  for (std::size_t k = 0; k < 5; ++k)
    x_omega += q.eval(p.n + static_cast<std::int64_t>(k), p.u[k]) * partials[k];
  return q.eval(p.n + 5, p.omega()) - x_omega;
}

/// Coefficient of the generator acting on the family's invariant. For the
/// sixth order, X r_n = root^{n+4} + root^{n+2} + root^n where
/// r_n = beta^{n+4} s_{n+4} + beta^{n+2} s_{n+2} + beta^n s_n and
/// s_n = ln|u_n| / beta^n. For the fifth order, X V_n / V_n =
/// root^n + root^{n+1} + root^{n+2} with V_n = u_n u_{n+1} u_{n+2}.
inline Cyclotomic generator_annihilates_invariant(const Characteristic& q, std::int64_t n) {
  if (q.family == Family::sixth) return q.beta(n + 4) + q.beta(n + 2) + q.beta(n);
  return q.beta(n) + q.beta(n + 1) + q.beta(n + 2);
}

/// Checks the determining relations over n in [from, to]:
///  - alpha_n = 0,
///  - beta_{n+4} + beta_{n+2} + beta_n = 0 (and, for the fifth family,
///    beta_{n+2} + beta_{n+1} + beta_n = 0),
///  - Q'' - (2/u) Q' + (2/u^2) Q = 0 identically in u.
inline bool determining_relations_check(const Characteristic& q, std::int64_t from, std::int64_t to) {
  if (!q.alpha.is_zero()) return false;
  for (std::int64_t n = from; n <= to; ++n) {
    if (!(q.beta(n + 4) + q.beta(n + 2) + q.beta(n)).is_zero()) return false;
    if (q.family == Family::fifth && !(q.beta(n + 2) + q.beta(n + 1) + q.beta(n)).is_zero())
      return false;
    // For Q = a u^2 + b u: Q' = 2a u + b, Q'' = 2a. Evaluate the residual at
    // a few sample points; it is a Laurent polynomial of degree <= 1 in u, so
    // three points decide identical vanishing.
    const Cyclotomic a = q.alpha * q.beta(n);
    const Cyclotomic b = q.beta(n);
    for (const Rational& u : {Rational{1}, Rational{-2}, Rational{3, 7}}) {
      const Cyclotomic d1 = a * (Rational{2} * u) + b;
      const Cyclotomic d2 = a * Rational{2};
      const Cyclotomic value = a * (u * u) + b * u;
      const Cyclotomic residual =
          d2 - d1 * (Rational{2} / u) + value * (Rational{2} / (u * u));
      if (!residual.is_zero()) return false;
    }
  }
  return true;
}

enum class ReductionVerdict { holds, violated, singular };

inline std::string to_string(ReductionVerdict v) {
  switch (v) {
    case ReductionVerdict::holds: return "holds";
    case ReductionVerdict::violated: return "violated";
    case ReductionVerdict::singular: return "singular";
  }
  return "unknown";
}

/// Checks the reduced law on a trajectory: r~_{n+2} = A_n r~_n + B_n
/// (sixth order) or V_{n+3} = V_n / (lambda + mu V_n) (fifth order), at
/// every index the trajectory covers.
inline ReductionVerdict check_reduction(const EquationSpec& spec, const Trajectory& traj) {
  const auto& u = traj.values;
  if (spec.family() == Family::sixth) {
    const auto& p = spec.sixth_params();
    auto rtilde = [&](std::size_t n) -> std::optional<Rational> {
      const Rational prod = u[n] * u[n + 2] * u[n + 4];
      if (prod.is_zero()) return std::nullopt;
      return prod.inverse();
    };
    for (std::size_t n = 0; n + 6 < u.size(); ++n) {
      const auto lhs = rtilde(n + 2);
      const auto rn = rtilde(n);
      if (!lhs || !rn || *lhs != p.A[n] * *rn + p.B[n]) return ReductionVerdict::violated;
    }
  } else {
    const auto& p = spec.fifth_params();
    for (std::size_t n = 0; n + 5 < u.size(); ++n) {
      const Rational vn = u[n] * u[n + 1] * u[n + 2];
      const Rational v3 = u[n + 3] * u[n + 4] * u[n + 5];
      const Rational den = p.lambda + p.mu * vn;
      if (den.is_zero() || v3 != vn / den) return ReductionVerdict::violated;
    }
  }
  return traj.singular() ? ReductionVerdict::singular : ReductionVerdict::holds;
}

inline ReductionVerdict reduction_check(const EquationSpec& spec, std::size_t count) {
  return check_reduction(spec, iterate(spec, count));
}

}  // namespace rdsym
