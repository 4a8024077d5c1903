#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace pdme {

/// Exact rational number. Always stored canonically: gcd(|num|, den) = 1,
/// den > 0. Backed by GMP.
class Scalar {
public:
  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) {}
  Scalar(long num, long den);
  explicit Scalar(mpq_class v);

  /// Parses "p" or "p/q" with optional sign.
  static Scalar from_string(std::string_view s);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Scalar operator-() const { return Scalar(mpq_class(-v_)); }
  Scalar abs() const { return sign() < 0 ? -*this : *this; }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
  Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
  Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return a.v_ >= b.v_; }

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  std::string to_string() const { return v_.get_str(); }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

} // namespace pdme
