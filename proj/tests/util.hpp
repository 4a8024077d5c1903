#pragma once

// Shared helpers for the test suites.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "pdme/parse.hpp"
#include "pdme/poly.hpp"
#include "pdme/ring.hpp"

namespace testutil {

inline pdme::RingPtr ring_of(std::initializer_list<const char*> poly_vars,
                             std::initializer_list<const char*> inv_vars = {}) {
  std::vector<std::pair<std::string, pdme::VarKind>> vars;
  for (auto* n : poly_vars) vars.emplace_back(n, pdme::VarKind::Polynomial);
  for (auto* n : inv_vars) vars.emplace_back(n, pdme::VarKind::Invertible);
  return pdme::RingSpec::make(std::move(vars));
}

inline pdme::Poly P(const pdme::RingPtr& ring, const std::string& text) {
  return pdme::parse_poly(text, ring);
}

// Deterministic xorshift generator for the property suites.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }

  long range(long lo, long hi) { // inclusive
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

// Random polynomial with exponents bounded by `degree` per term (abs sum),
// small integer coefficients; invertible variables may get negative
// exponents when `laurent` is set.
inline pdme::Poly random_poly(Rng& rng, const pdme::RingPtr& ring, int degree, int terms,
                              bool laurent = false) {
  pdme::Poly out = pdme::Poly::zero(ring);
  for (int t = 0; t < terms; ++t) {
    pdme::Monomial m(ring->arity(), 0);
    int budget = static_cast<int>(rng.range(0, degree));
    for (std::size_t i = 0; i < ring->arity() && budget > 0; ++i) {
      int e = static_cast<int>(rng.range(0, budget));
      if (laurent && ring->kind(i) == pdme::VarKind::Invertible && rng.range(0, 1))
        m[i] = -e;
      else
        m[i] = e;
      budget -= e;
    }
    long c = rng.range(-4, 4);
    out += pdme::Poly::monomial(ring, m, pdme::Scalar(c));
  }
  return out;
}

} // namespace testutil
