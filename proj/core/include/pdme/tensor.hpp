#pragma once

#include "pdme/poly.hpp"
#include "pdme/ring.hpp"

namespace pdme {

/// The tensor square A (x) A realized as a doubled ring: a left copy z_L
/// and a right copy z_R of each variable z, kinds inherited. a (x) b
/// corresponds to a(z_L) * b(z_R).
struct TensorRing {
  RingPtr base;
  RingPtr doubled; // left copies first, then right copies

  static TensorRing make(const RingPtr& base);

  std::size_t left(std::size_t i) const { return i; }
  std::size_t right(std::size_t i) const { return base->arity() + i; }

  Poly embed_left(const Poly& f) const;  // a -> a (x) 1
  Poly embed_right(const Poly& f) const; // b -> 1 (x) b
  Poly swap_sides(const Poly& f) const;  // a (x) b -> b (x) a
};

} // namespace pdme
