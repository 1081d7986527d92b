#pragma once

// Exact rational scalar backed by GMP. Every value is kept in canonical
// form: positive denominator, numerator and denominator coprime.

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "rdsym/errors.hpp"

namespace rdsym {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  Rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }
  explicit Rational(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" in base 10 with an optional leading minus sign.
  static Rational parse(std::string_view text) {
    auto digits = [&](std::string_view s, bool allow_sign) {
      if (s.empty()) return false;
      std::size_t i = 0;
      if (allow_sign && (s[0] == '-' || s[0] == '+')) ++i;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
      return true;
    };
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!digits(num, true) || !digits(den, false))
      throw ParseError("malformed rational literal '" + std::string(text) + "'");
    std::string num_str(num);
    if (num_str[0] == '+') num_str.erase(0, 1);
    mpz_class n(num_str, 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
  }

  [[nodiscard]] std::string str() const { return q_.get_str(10); }

  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return q_; }

  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] long double to_long_double() const {
    const mpz_class& n = q_.get_num();
    const mpz_class& d = q_.get_den();
    if (n.fits_slong_p() && d.fits_slong_p())
      return static_cast<long double>(n.get_si()) / static_cast<long double>(d.get_si());
    // Wide values: round through a 128-bit float and its decimal form so the
    // result keeps long double precision and range.
    const mpf_class f(q_, 128);
    mp_exp_t exp = 0;
    const std::string digits = f.get_str(exp, 10, 40);
    if (digits.empty()) return 0.0L;
    const bool neg = digits[0] == '-';
    const std::string mant = neg ? digits.substr(1) : digits;
    const std::string text = (neg ? "-0." : "0.") + mant + "e" + std::to_string(exp);
    return std::strtold(text.c_str(), nullptr);
  }

  [[nodiscard]] Rational inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
  }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// Integer power by repeated squaring; negative exponents invert.
inline Rational pow(const Rational& base, std::int64_t k) {
  if (k < 0) return pow(base.inverse(), -k);
  Rational result{1};
  Rational b = base;
  auto e = static_cast<std::uint64_t>(k);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace rdsym
