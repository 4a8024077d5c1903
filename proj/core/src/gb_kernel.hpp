#pragma once

// Internal polynomial Groebner engine. Works on plain exponent vectors
// with nonnegative entries; Laurent normalization happens in the public
// layer before anything lands here.

#include <vector>

#include "pdme/errors.hpp"
#include "pdme/order.hpp"
#include "pdme/poly.hpp"

namespace pdme::gbk {

struct Term {
  Monomial m;
  Scalar c;
};

/// Terms strictly descending under the active monomial order.
struct OrdPoly {
  std::vector<Term> t;

  bool empty() const { return t.empty(); }
  const Term& lead() const { return t.front(); }
};

OrdPoly to_ord(const Poly& p, const MonomialOrder& ord);
Poly to_poly(const OrdPoly& p, const RingPtr& ring);

OrdPoly scale_shift(const OrdPoly& g, const Scalar& c, const Monomial& shift);
OrdPoly add(const OrdPoly& a, const OrdPoly& b, const MonomialOrder& ord);
/// p - c * x^shift * g
OrdPoly sub_scaled(const OrdPoly& p, const Scalar& c, const Monomial& shift,
                   const OrdPoly& g, const MonomialOrder& ord);
OrdPoly spoly(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& ord);

/// Full normal form against G (leading and lower terms reduced). When
/// `quotients` is non-null it receives one entry per element of G with
/// f = sum quotients[k] * G[k] + result.
OrdPoly normal_form(OrdPoly f, const std::vector<OrdPoly>& G,
                    const MonomialOrder& ord, StepBudget& budget,
                    std::vector<OrdPoly>* quotients = nullptr);

/// Scales to the integer-primitive form with positive leading
/// coefficient; returns the factor that was applied.
Scalar content_normalize(OrdPoly& p);

/// Reduced Groebner basis, content-normalized, ascending by leading
/// monomial. Uses the Gebauer-Moeller pair criteria with normal-strategy
/// selection.
std::vector<OrdPoly> reduced_groebner(const std::vector<OrdPoly>& gens,
                                      const MonomialOrder& ord, StepBudget& budget);

/// Reduced basis of the ideal generated by `row`, with cofactors over the
/// row: basis[j] = sum_i cofactors[j][i] * row[i].
struct TrackedBasis {
  std::vector<OrdPoly> basis;
  std::vector<std::vector<OrdPoly>> cofactors;
};
TrackedBasis reduced_groebner_tracked(const std::vector<OrdPoly>& row,
                                      const MonomialOrder& ord, StepBudget& budget);

} // namespace pdme::gbk
