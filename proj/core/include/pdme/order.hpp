#pragma once

#include <cstddef>
#include <string>

#include "pdme/ring.hpp"

namespace pdme {

/// Total order on monomials, compatible with multiplication.
///
/// grevlex: degree first, ties broken by the last nonzero entry of the
/// difference being negative. lex: first nonzero entry of the difference.
/// block(k): grevlex on the first k variables, ties broken by grevlex on
/// the rest; an elimination order for the leading block.
struct MonomialOrder {
  enum class Kind { Grevlex, Lex, Block };

  Kind kind = Kind::Grevlex;
  std::size_t split = 0; // Block only: size of the leading block

  static MonomialOrder grevlex() { return {Kind::Grevlex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder block(std::size_t split) { return {Kind::Block, split}; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind != Kind::Block || a.split == b.split);
  }

  std::string to_string() const;
};

/// Three-way comparison under the order: negative, zero, or positive as
/// a <, =, > b.
int cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

inline bool mono_less(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return cmp_monomials(a, b, ord) < 0;
}

// Exponent-vector helpers. Division here is the monoid notion on
// nonnegative vectors; the Laurent cases are handled by normalization
// before any of these run.
bool mono_divides(const Monomial& a, const Monomial& b);     // a | b
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);     // a / b, requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
std::int64_t mono_degree(const Monomial& a);                 // plain exponent sum
std::int64_t mono_abs_degree(const Monomial& a);             // sum of |exponents|
bool mono_is_constant(const Monomial& a);

} // namespace pdme
