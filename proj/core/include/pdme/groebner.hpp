#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "pdme/errors.hpp"
#include "pdme/order.hpp"
#include "pdme/poly.hpp"

namespace pdme {

/// Reduced Groebner basis of the Laurent-normalized ideal under `order`.
/// Elements are integer-primitive with positive leading coefficient and
/// sorted ascending by leading monomial, so the basis is a canonical
/// certificate for the ideal.
struct ReducedBasis {
  MonomialOrder order;
  std::vector<Poly> polys;

  bool is_unit() const;
  bool is_zero() const { return polys.empty(); }
};

/// Finitely generated ideal of a polynomial or Laurent ring.
///
/// Laurent rings are handled by normalization: generators are cleared of
/// negative exponents and the result is saturated by the product of the
/// invertible variables. Every query below is a statement about the
/// Laurent ideal, answered through the normalized form.
///
/// Values are immutable; the Groebner cache is write-once per (ideal,
/// order) pair and shared between copies.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);
  static Ideal zero(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }

  const ReducedBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex(),
                               StepBudget* budget = nullptr) const;

  bool is_unit(StepBudget* budget = nullptr) const;
  bool is_zero_ideal(StepBudget* budget = nullptr) const;

private:
  RingPtr ring_;
  std::vector<Poly> gens_;

  struct CacheBox {
    std::mutex mu;
    std::map<std::pair<int, std::size_t>, ReducedBasis> entries;
  };
  std::shared_ptr<CacheBox> cache_ = std::make_shared<CacheBox>();
};

/// The ideal presented by its reduced basis (cache filled). Idempotent and
/// independent of the generator presentation.
Ideal groebner_basis(const Ideal& I, const MonomialOrder& order = MonomialOrder::grevlex(),
                     StepBudget* budget = nullptr);

/// Unique remainder of f modulo the reduced basis. For a Laurent f the
/// remainder of the cleared form is scaled back by the clearing unit, so
/// normal_form(f) == 0 iff f lies in the ideal.
Poly normal_form(const Poly& f, const Ideal& I,
                 const MonomialOrder& order = MonomialOrder::grevlex(),
                 StepBudget* budget = nullptr);

bool ideal_member(const Poly& f, const Ideal& I, StepBudget* budget = nullptr);
bool ideal_contains(const Ideal& I, const Ideal& J, StepBudget* budget = nullptr);
bool ideal_eq(const Ideal& I, const Ideal& J, StepBudget* budget = nullptr);

/// True iff f^n lies in I for some n >= 1 (Rabinowitsch trick: 1 in
/// I + (1 - t*f) over the ring extended by a fresh variable).
bool radical_member(const Poly& f, const Ideal& I, StepBudget* budget = nullptr);

/// I intersected with the subring generated by the remaining variables,
/// via a block order with the eliminated variables in front. The result
/// is returned over the original ring, generated by polynomials free of
/// the eliminated variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars,
                StepBudget* budget = nullptr);

/// (I : f^infinity), computed as eliminate(I + (1 - t*f), {t}).
Ideal saturate(const Ideal& I, const Poly& f, StepBudget* budget = nullptr);

/// I intersect J via the t*I + (1-t)*J elimination trick.
Ideal intersect(const Ideal& I, const Ideal& J, StepBudget* budget = nullptr);

/// I + (more), over I's ring.
Ideal ideal_sum(const Ideal& I, const std::vector<Poly>& more);

/// Smallest unit monomial u such that u*f has no negative exponents;
/// returns (u*f, u).
std::pair<Poly, Poly> clear_denominators(const Poly& f);

} // namespace pdme
