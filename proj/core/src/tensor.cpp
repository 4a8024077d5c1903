#include "pdme/tensor.hpp"

#include "pdme/errors.hpp"

namespace pdme {

TensorRing TensorRing::make(const RingPtr& base) {
  std::vector<std::pair<std::string, VarKind>> vars;
  vars.reserve(2 * base->arity());
  for (const auto& [n, k] : base->variables()) vars.emplace_back(n + "_L", k);
  for (const auto& [n, k] : base->variables()) vars.emplace_back(n + "_R", k);
  return TensorRing{base, RingSpec::make(std::move(vars))};
}

namespace {

Poly embed(const Poly& f, const RingPtr& doubled, std::size_t offset) {
  const std::size_t n = f.ring()->arity();
  Poly out = Poly::zero(doubled);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) m2[offset + i] = m[i];
    out += Poly::monomial(doubled, std::move(m2), c);
  }
  return out;
}

} // namespace

Poly TensorRing::embed_left(const Poly& f) const {
  require_same_ring(f.ring(), base, "embed_left");
  return embed(f, doubled, 0);
}

Poly TensorRing::embed_right(const Poly& f) const {
  require_same_ring(f.ring(), base, "embed_right");
  return embed(f, doubled, base->arity());
}

Poly TensorRing::swap_sides(const Poly& f) const {
  require_same_ring(f.ring(), doubled, "swap_sides");
  const std::size_t n = base->arity();
  Poly out = Poly::zero(doubled);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      m2[i] = m[n + i];
      m2[n + i] = m[i];
    }
    out += Poly::monomial(doubled, std::move(m2), c);
  }
  return out;
}

} // namespace pdme
