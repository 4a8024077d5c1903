#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdme/ring.hpp"
#include "pdme/scalar.hpp"

namespace pdme {

/// Sparse multivariate polynomial over Q, Laurent-capable: exponents of
/// invertible variables may be negative. Held in canonical form (no zero
/// coefficients), so equality is term-map equality.
class Poly {
public:
  using TermMap = std::map<Monomial, Scalar>;

  Poly() = default;

  static Poly zero(RingPtr ring);
  static Poly constant(RingPtr ring, Scalar c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Monomial exps, Scalar c);

  const RingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const;
  /// Value of a constant polynomial (zero polynomial included).
  Scalar constant_value() const;

  /// Single term whose exponents live only on invertible variables.
  bool is_unit_monomial() const;
  Poly unit_inverse() const;

  /// Max over terms of the sum of |exponents|; -1 for the zero polynomial.
  std::int64_t degree() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scaled(const Scalar& c) const;
  Poly pow(std::uint64_t n) const;

  /// Formal partial derivative in variable `index`; the integer-exponent
  /// power rule applies to invertible variables.
  Poly derivative(std::size_t index) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Terms sorted descending under grevlex; "0" for the zero polynomial.
  std::string to_string() const;

private:
  void insert_term(Monomial m, Scalar c); // accumulates, drops zeros
  void check_exponents() const;

  RingPtr ring_;
  TermMap terms_;

  friend Poly substitute(const Poly&, const RingPtr&, const std::vector<Poly>&);
};

/// Ring homomorphism determined by an image for every source variable.
/// Images live in `target`. An invertible source variable used with a
/// negative exponent must map to a unit monomial.
Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images);

/// Same-ring convenience overload.
Poly substitute(const Poly& f, const std::vector<Poly>& images);

/// k-linear derivation on a ring, given by its values on the generators.
/// The induced map satisfies the Leibniz rule by construction.
struct Derivation {
  RingPtr ring;
  std::vector<Poly> values; // one per ring variable

  static Derivation make(RingPtr ring, std::vector<Poly> values);
  static Derivation zero(RingPtr ring);
  bool is_zero() const;
};

/// apply(d, f) = sum_i df/dz_i * d(z_i).
Poly apply_derivation(const Derivation& d, const Poly& f);

/// Derivative of f's coefficients under the base-field derivation. The
/// base field is Q, where every derivation vanishes, so this is the zero
/// map; it exists so prolongation formulas keep their shape.
Poly coeff_derivative(const Poly& f);

} // namespace pdme
