#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pdme/groebner.hpp"
#include "pdme/poly.hpp"
#include "pdme/syzygy.hpp"

namespace pdme {

/// Deterministic name for the prolongation fiber coordinate of variable
/// `var` in the block of derivation `mu` (1-based): "u<mu>_<var>".
std::string prolongation_coord_name(std::size_t mu, const std::string& var);

/// Base ring extended by the fiber coordinates of blocks 1..m; fiber
/// coordinates are polynomial-kind (the fibers are affine spaces).
RingPtr prolongation_ring(const RingPtr& base, std::size_t m);
/// Base ring extended by the single block `mu`.
RingPtr single_prolongation_ring(const RingPtr& base, std::size_t mu);

/// Prolongation of I along one derivation: for each generator f, the
/// equations f = 0 and sum_i df/dz_i * u[mu,i] + f^delta = 0 (the last
/// term vanishes over Q but is kept in the formula).
Ideal prolongation_ideal(const Ideal& I, std::size_t mu);

/// Fibred product of the m single prolongations over the base: one copy
/// of the base equations, m blocks of linear fiber equations.
Ideal full_prolongation(const Ideal& I, std::size_t m);

/// Affine variety whose coordinate ring carries a family of derivations,
/// equivalently a regular section of the prolongation. Construction
/// validates that every derivation maps the ideal's generators back into
/// the ideal, so the family descends to the coordinate ring.
class DVariety {
public:
  static DVariety make(RingPtr ring, Ideal ideal, std::vector<Derivation> derivations,
                       StepBudget* budget = nullptr);

  const RingPtr& ring() const { return ring_; }
  const Ideal& ideal() const { return ideal_; }
  const std::vector<Derivation>& derivations() const { return ders_; }

private:
  DVariety(RingPtr ring, Ideal ideal, std::vector<Derivation> ders)
      : ring_(std::move(ring)), ideal_(std::move(ideal)), ders_(std::move(ders)) {}

  RingPtr ring_;
  Ideal ideal_;
  std::vector<Derivation> ders_;
};

struct SectionCheck {
  bool ok = true;
  std::size_t generator = 0; // first failing generator index
  std::size_t mu = 0;        // first failing derivation index
};

/// True iff apply(d_mu, g) lies in I for every generator g and index mu;
/// reports the first failure.
SectionCheck validate_dvariety(const Ideal& I, const std::vector<Derivation>& derivations,
                               StepBudget* budget = nullptr);

/// W cut out by J inside V is a D-subvariety iff J is stable under V's
/// derivations. Requires J to contain V's ideal.
bool is_d_subvariety(const DVariety& V, const Ideal& J, StepBudget* budget = nullptr);

/// Regular map V -> W given by an image in K[V] for each coordinate of W.
struct RegularMap {
  RingPtr source;
  RingPtr target;
  std::vector<Poly> images; // one per target variable, over `source`

  static RegularMap make(RingPtr source, RingPtr target, std::vector<Poly> images);
  /// f(images); f lives in the target ring. An invertible target variable
  /// used with negative exponents must have a unit-monomial image (ideal
  /// level callers clear denominators first, which avoids the restriction).
  Poly pullback(const Poly& f) const;
};

/// phi is a D-morphism iff its pullback commutes with the derivations on
/// target coordinates modulo V's ideal. Throws if phi does not map V into
/// W (some generator of W's ideal does not pull back into V's ideal).
bool is_d_morphism(const RegularMap& phi, const DVariety& V, const DVariety& W,
                   StepBudget* budget = nullptr);

struct StabilityReport {
  Ideal ideal;
  bool d_stable = false;
};

/// Zariski closure of phi(V) inside W: eliminate the source variables from
/// the graph ideal. The report asserts D-stability of the result in W.
StabilityReport image_closure(const RegularMap& phi, const DVariety& V, const DVariety& W,
                              StepBudget* budget = nullptr);

/// Pullback ideal V.ideal + phi^#(generators of X), with generator-level
/// D-stability verified. X must be a D-subvariety ideal of W. The radical
/// of the returned ideal is then D-stable as well (radicals of
/// derivation-stable ideals are derivation-stable); it is not computed.
StabilityReport preimage(const RegularMap& phi, const DVariety& V, const DVariety& W,
                         const Ideal& X, StepBudget* budget = nullptr);

/// Smallest derivation-stable ideal containing V's ideal and the seeds:
/// ascending iteration J <- J + d(generators of J) with Groebner
/// stabilization test; terminates by the ascending chain condition.
Ideal d_closure(const DVariety& V, const std::vector<Poly>& seeds,
                StepBudget* budget = nullptr);

/// Largest derivation-stable ideal inside I, by the descending iteration
/// J_{k+1} = { f in J_k : d(f) in J_k for all d }. Each refinement is
/// exact: writing J_k = (b_1..b_r), f = sum g_i b_i satisfies d(f) in J_k
/// iff sum g_i d(b_i) does, so the refinement is generated by
/// { sum v_i b_i } for v in the projection of Syz(d(b_1)..d(b_r),
/// b_1..b_r) to its first half. Refinements are intersected over the
/// family, descending until a fixpoint (status Exact, and the result is
/// the largest stable ideal inside I) or the iteration cap (status
/// UpperBound: the true core is contained in the returned ideal).
struct CoreResult {
  enum class Status { Exact, UpperBound };
  Ideal ideal;
  Status status = Status::Exact;
  std::size_t iterations = 0;          // strict descents performed
  std::vector<std::string> trace;      // one line per iterate: "J_k = { ... }"
};

CoreResult d_core(const DVariety& V, const Ideal& I, std::size_t cap,
                  StepBudget* budget = nullptr);

} // namespace pdme
