#pragma once

// Reduced dynamics in canonical coordinates.
//
// Sixth order: r~_n = 1/(u_n u_{n+2} u_{n+4}) obeys the affine law
//   r~_{n+2} = A_n r~_n + B_n,
// two interleaved chains (parity k = n mod 2) solved by variation of
// parameters.
//
// Fifth order: V_n = u_n u_{n+1} u_{n+2} obeys the Moebius law
//   V_{n+3} = V_n / (lambda + mu V_n),
// three interleaved chains (residue i = n mod 3). W = 1/V linearizes it to
// W_{n+3} = lambda W_n + mu.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "rdsym/coefficients.hpp"
#include "rdsym/errors.hpp"
#include "rdsym/rational.hpp"
#include "rdsym/recurrence.hpp"

namespace rdsym {

struct ReducedLinearState {
  CoefficientSequence A;
  CoefficientSequence B;
  std::array<Rational, 2> seeds;  // r~_0, r~_1
};

inline std::vector<Rational> rtilde_iterate(const ReducedLinearState& state, std::size_t count) {
  std::vector<Rational> r;
  r.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    if (n < 2)
      r.push_back(state.seeds[n]);
    else
      r.push_back(state.A[n - 2] * r[n - 2] + state.B[n - 2]);
  }
  return r;
}

/// Theta-product prod_{j=s}^{l} theta_{2j+parity}; 1 when s > l.
inline Rational theta(const CoefficientSequence& seq, int parity, long s, long l) {
  Rational p{1};
  for (long j = s; j <= l; ++j) p *= seq[static_cast<std::size_t>(2 * j + parity)];
  return p;
}

/// Terms of the variation-of-parameters solution of chain `parity` at step n:
///   homogeneous = prod_{j=0}^{n-1} A_{2j+k}
///   forced      = sum_{l=0}^{n-1} B_{2l+k} prod_{j=l+1}^{n-1} A_{2j+k}
/// so that r~_{2n+k} = r~_k * homogeneous + forced.
struct AffineSolutionTerms {
  Rational homogeneous{1};
  Rational forced{0};
};

inline AffineSolutionTerms affine_solution_terms(const CoefficientSequence& A,
                                                 const CoefficientSequence& B, int parity,
                                                 std::size_t n) {
  // Walk l downwards so the suffix product is extended by one factor per step.
  AffineSolutionTerms t;
  Rational suffix{1};
  for (std::size_t l = n; l-- > 0;) {
    const std::size_t idx = 2 * l + static_cast<std::size_t>(parity);
    t.forced += B[idx] * suffix;
    suffix *= A[idx];
  }
  t.homogeneous = std::move(suffix);
  return t;
}

inline Rational rtilde_closed(const ReducedLinearState& state, int parity, std::size_t n) {
  if (parity != 0 && parity != 1) throw PreconditionError("parity must be 0 or 1");
  const AffineSolutionTerms t = affine_solution_terms(state.A, state.B, parity, n);
  return state.seeds[static_cast<std::size_t>(parity)] * t.homogeneous + t.forced;
}

struct MoebiusState {
  Rational lambda;
  Rational mu;
  std::array<Rational, 3> seeds;  // V_0, V_1, V_2

  MoebiusState(Rational lambda_, Rational mu_, std::array<Rational, 3> seeds_)
      : lambda(std::move(lambda_)), mu(std::move(mu_)), seeds(std::move(seeds_)) {
    for (const auto& v : seeds)
      if (v.is_zero()) throw ConfigError("Moebius seeds must be nonzero");
  }
};

inline Trajectory v_iterate(const MoebiusState& state, std::size_t count) {
  Trajectory t;
  auto& v = t.values;
  for (std::size_t n = 0; n < count; ++n) {
    if (n < 3) {
      v.push_back(state.seeds[n]);
      continue;
    }
    const Rational den = state.lambda + state.mu * v[n - 3];
    if (den.is_zero()) {
      t.singular_at = n;
      break;
    }
    v.push_back(v[n - 3] / den);
  }
  return t;
}

/// sum_{j=0}^{s-1} lambda^j, given lambda^s.
inline Rational geometric_sum(const Rational& lambda, const Rational& lambda_pow_s, std::size_t s) {
  if (lambda == Rational{1}) return Rational{static_cast<long>(s)};
  return (Rational{1} - lambda_pow_s) / (Rational{1} - lambda);
}

/// lambda^s + mu * delta * sum_{j<s} lambda^j, i.e. delta * W_{3s+i} where
/// delta = V_i. Zero exactly when V_{3s+i} is undefined.
inline Rational moebius_denominator(const Rational& lambda, const Rational& mu,
                                    const Rational& delta, std::size_t s) {
  const Rational lp = pow(lambda, static_cast<std::int64_t>(s));
  return lp + mu * delta * geometric_sum(lambda, lp, s);
}

/// V_{3s+i} from the seeds alone. Throws SingularError if any V_{3t+i},
/// 1 <= t <= s, is undefined.
inline Rational v_closed(const MoebiusState& state, int residue, std::size_t s) {
  if (residue < 0 || residue > 2) throw PreconditionError("residue must be 0, 1 or 2");
  const Rational& delta = state.seeds[static_cast<std::size_t>(residue)];
  Rational lp{1};
  Rational den{1};
  for (std::size_t t = 1; t <= s; ++t) {
    lp *= state.lambda;
    den = lp + state.mu * delta * geometric_sum(state.lambda, lp, t);
    if (den.is_zero())
      throw SingularError(Singularity{3 * t + static_cast<std::size_t>(residue), residue, t});
  }
  return delta / den;
}

/// Default bound on n for the floating spectral evaluation.
inline constexpr std::size_t kSpectralMaxN = 30;

using ComplexLD = std::complex<long double>;

namespace detail {

inline ComplexLD ipow(ComplexLD base, std::size_t k) {
  ComplexLD r{1};
  for (std::size_t i = 0; i < k; ++i) r *= base;
  return r;
}

inline ComplexLD unit_root(long double turns) {
  const long double pi = std::acos(-1.0L);
  return std::polar(1.0L, 2.0L * pi * turns);
}

/// Solves M c = rhs for a 3x3 complex system by Gaussian elimination with
/// partial pivoting. Throws NumericalError on a (near) singular matrix.
inline std::array<ComplexLD, 3> solve3(std::array<std::array<ComplexLD, 3>, 3> m,
                                       std::array<ComplexLD, 3> rhs) {
  long double scale = 0;
  for (const auto& row : m)
    for (const auto& x : row) scale = std::max(scale, std::abs(x));
  ComplexLD det{1};
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < 3; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      std::swap(rhs[piv], rhs[col]);
      det = -det;
    }
    det *= m[col][col];
    if (std::abs(m[col][col]) <= 1e-12L * scale) throw NumericalError("ill-conditioned constant system");
    for (std::size_t r = col + 1; r < 3; ++r) {
      const ComplexLD f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < 3; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  if (std::abs(det) <= 1e-12L * scale * scale * scale)
    throw NumericalError("ill-conditioned constant system");
  std::array<ComplexLD, 3> c{};
  for (std::size_t r = 3; r-- > 0;) {
    ComplexLD acc = rhs[r];
    for (std::size_t k = r + 1; k < 3; ++k) acc -= m[r][k] * c[k];
    c[r] = acc / m[r][r];
  }
  return c;
}

}  // namespace detail

/// V_n from the complex spectral form of the Moebius law, in floating point.
///
/// lambda != 1:  1/V_n = c10 rho^n + c8 (w^2 rho)^n + c9 (-w rho)^n + mu/(1 - lambda)
/// lambda == 1:  1/V_n = mu[(w^2 - 1)n - w + 1 + b] / (3(w^2 - 1)) + c6 + c7 conj(b)^n + c8 b^n
///
/// with rho the principal cube root of lambda, w = exp(i pi/3) and
/// b = exp(-2 i pi/3). The constants are fitted to 1/V_0, 1/V_1, 1/V_2.
inline ComplexLD v_closed_spectral(const MoebiusState& state, std::size_t n,
                                   std::size_t max_n = kSpectralMaxN) {
  if (n > max_n) throw PreconditionError("spectral evaluation limited to n <= " + std::to_string(max_n));
  const long double lambda = state.lambda.to_long_double();
  const long double mu = state.mu.to_long_double();
  std::array<ComplexLD, 3> w0{};
  for (std::size_t k = 0; k < 3; ++k) w0[k] = ComplexLD(state.seeds[k].inverse().to_long_double(), 0);

  const ComplexLD w = detail::unit_root(1.0L / 6);   // (-1)^{1/3}
  const ComplexLD w2 = detail::unit_root(1.0L / 3);  // (-1)^{2/3}
  const ComplexLD b = detail::unit_root(-1.0L / 3);  // exp(-2 i pi / 3)

  std::array<ComplexLD, 3> roots{};
  std::function<ComplexLD(long double)> offset;
  if (state.lambda == Rational{1}) {
    roots = {ComplexLD(1, 0), std::conj(b), b};
    offset = [=](long double k) {
      return mu * ((w2 - 1.0L) * k - w + 1.0L + b) / (3.0L * (w2 - 1.0L));
    };
  } else {
    const ComplexLD rho =
        lambda >= 0 ? ComplexLD(std::cbrt(lambda), 0) : std::cbrt(-lambda) * w;
    roots = {rho, w2 * rho, -w * rho};
    const long double k0 = mu / (1.0L - lambda);
    offset = [=](long double) { return ComplexLD(k0, 0); };
  }

  std::array<std::array<ComplexLD, 3>, 3> m{};
  std::array<ComplexLD, 3> rhs{};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t j = 0; j < 3; ++j) m[k][j] = detail::ipow(roots[j], k);
    rhs[k] = w0[k] - offset(static_cast<long double>(k));
  }
  const auto c = detail::solve3(m, rhs);

  ComplexLD inv = offset(static_cast<long double>(n));
  for (std::size_t j = 0; j < 3; ++j) inv += c[j] * detail::ipow(roots[j], n);
  return 1.0L / inv;
}

struct SpectralCheck {
  ComplexLD spectral;
  Rational exact;
  long double relative_error = 0;
  bool pass = false;
};

/// Compares the spectral value against the exact V_n; relative error is
/// |spectral - exact| / |exact| and includes any imaginary residue.
inline SpectralCheck spectral_check(const MoebiusState& state, std::size_t n, long double tolerance,
                                    std::size_t max_n = kSpectralMaxN) {
  SpectralCheck out;
  out.exact = v_closed(state, static_cast<int>(n % 3), n / 3);
  out.spectral = v_closed_spectral(state, n, max_n);
  const long double exact = out.exact.to_long_double();
  out.relative_error = std::abs(out.spectral - ComplexLD(exact, 0)) / std::abs(exact);
  out.pass = out.relative_error <= tolerance;
  return out;
}

}  // namespace rdsym
