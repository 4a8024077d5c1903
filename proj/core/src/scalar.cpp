#include "pdme/scalar.hpp"

#include <ostream>

#include "pdme/errors.hpp"

namespace pdme {

Scalar::Scalar(long num, long den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar::Scalar(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Scalar Scalar::from_string(std::string_view s) {
  mpq_class v;
  if (s.empty() || v.set_str(std::string(s), 10) != 0)
    throw ParseError("invalid rational literal '" + std::string(s) + "'", 0);
  if (v.get_den() == 0) throw ValidationError("rational with zero denominator");
  v.canonicalize();
  return Scalar(std::move(v));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ValidationError("division by zero");
  return Scalar(mpq_class(1) / v_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

} // namespace pdme
