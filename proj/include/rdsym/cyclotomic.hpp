#pragma once

// Exact arithmetic in Q(zeta), zeta = exp(i*pi/3), in the basis {1, zeta}.
// The minimal polynomial zeta^2 = zeta - 1 gives zeta^3 = -1 and zeta^6 = 1.

#include <cstdint>
#include <ostream>
#include <string>

#include "rdsym/rational.hpp"

namespace rdsym {

class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(Rational re0, Rational re1 = Rational{0})  // NOLINT(google-explicit-constructor)
      : re0_(std::move(re0)), re1_(std::move(re1)) {}
  Cyclotomic(int value) : re0_(value) {}  // NOLINT(google-explicit-constructor)

  static Cyclotomic zeta() { return {Rational{0}, Rational{1}}; }

  /// zeta^k for any integer k, read off the period-6 table.
  static Cyclotomic zeta_pow(std::int64_t k) {
    switch (((k % 6) + 6) % 6) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 1};
      case 3: return {-1, 0};
      case 4: return {0, -1};
      default: return {1, -1};
    }
  }

  [[nodiscard]] const Rational& re0() const { return re0_; }
  [[nodiscard]] const Rational& re1() const { return re1_; }

  [[nodiscard]] bool is_zero() const { return re0_.is_zero() && re1_.is_zero(); }

  /// a + b*zeta -> (a + b) - b*zeta, since conj(zeta) = zeta^5 = 1 - zeta.
  [[nodiscard]] Cyclotomic conj() const { return {re0_ + re1_, -re1_}; }

  /// Field norm x * conj(x) = a^2 + ab + b^2, a non-negative rational.
  [[nodiscard]] Rational norm() const { return re0_ * re0_ + re0_ * re1_ + re1_ * re1_; }

  [[nodiscard]] Cyclotomic inverse() const {
    const Rational n = norm();
    if (n.is_zero()) throw NotAUnit();
    const Cyclotomic c = conj();
    return {c.re0_ / n, c.re1_ / n};
  }

  Cyclotomic& operator+=(const Cyclotomic& o) {
    re0_ += o.re0_;
    re1_ += o.re1_;
    return *this;
  }
  Cyclotomic& operator-=(const Cyclotomic& o) {
    re0_ -= o.re0_;
    re1_ -= o.re1_;
    return *this;
  }
  Cyclotomic& operator*=(const Cyclotomic& o) {
    // (a + b z)(c + d z) = ac + (ad + bc) z + bd z^2,  z^2 = z - 1
    const Rational bd = re1_ * o.re1_;
    Rational c0 = re0_ * o.re0_ - bd;
    Rational c1 = re0_ * o.re1_ + re1_ * o.re0_ + bd;
    re0_ = std::move(c0);
    re1_ = std::move(c1);
    return *this;
  }
  Cyclotomic& operator*=(const Rational& s) {
    re0_ *= s;
    re1_ *= s;
    return *this;
  }
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
  friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a) { return {-a.re0_, -a.re1_}; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.re0_ == b.re0_ && a.re1_ == b.re1_;
  }

  [[nodiscard]] std::string str() const { return "(" + re0_.str() + ", " + re1_.str() + ")"; }
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  Rational re0_{0};
  Rational re1_{0};
};

inline Cyclotomic cyc_pow(const Cyclotomic& base, std::int64_t k) {
  if (k < 0) return cyc_pow(base.inverse(), -k);
  Cyclotomic result{1};
  Cyclotomic b = base;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

inline bool cyc_is_zero(const Cyclotomic& x) { return x.is_zero(); }

}  // namespace rdsym
