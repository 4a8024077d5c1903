#include "pdme/order.hpp"

#include <algorithm>
#include <cstdlib>

namespace pdme {

namespace {

// grevlex on the index range [lo, hi).
int cmp_grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    std::int64_t d = a[i] - b[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

} // namespace

std::string MonomialOrder::to_string() const {
  switch (kind) {
    case Kind::Grevlex: return "grevlex";
    case Kind::Lex: return "lex";
    case Kind::Block: return "block(" + std::to_string(split) + ")";
  }
  return "?";
}

int cmp_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  const std::size_t n = a.size();
  switch (ord.kind) {
    case MonomialOrder::Kind::Grevlex:
      return cmp_grevlex_range(a, b, 0, n);
    case MonomialOrder::Kind::Lex:
      for (std::size_t i = 0; i < n; ++i) {
        std::int64_t d = a[i] - b[i];
        if (d != 0) return d < 0 ? -1 : 1;
      }
      return 0;
    case MonomialOrder::Kind::Block: {
      const std::size_t k = std::min(ord.split, n);
      if (int c = cmp_grevlex_range(a, b, 0, k)) return c;
      return cmp_grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

std::int64_t mono_degree(const Monomial& a) {
  std::int64_t d = 0;
  for (auto e : a) d += e;
  return d;
}

std::int64_t mono_abs_degree(const Monomial& a) {
  std::int64_t d = 0;
  for (auto e : a) d += std::abs(e);
  return d;
}

bool mono_is_constant(const Monomial& a) {
  for (auto e : a)
    if (e != 0) return false;
  return true;
}

} // namespace pdme
