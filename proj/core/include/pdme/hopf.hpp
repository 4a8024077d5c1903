#pragma once

#include <vector>

#include "pdme/groebner.hpp"
#include "pdme/linalg.hpp"
#include "pdme/poisson.hpp"
#include "pdme/poly.hpp"
#include "pdme/tensor.hpp"

namespace pdme {

enum class HopfKind { Primitive, Grouplike };

/// Hopf structure on k[x_1..x_s, y_1^+-..y_t^+-] in normal form: each
/// variable is either primitive (Delta x = x(x)1 + 1(x)x, a polynomial
/// variable) or group-like (Delta y = y(x)y, an invertible variable).
class HopfSignature {
public:
  static HopfSignature make(RingPtr ring, std::vector<HopfKind> kinds);

  const RingPtr& ring() const { return ring_; }
  HopfKind kind(std::size_t i) const { return kinds_[i]; }
  std::vector<std::size_t> primitive_indices() const;
  std::vector<std::size_t> grouplike_indices() const;
  /// Primitive indices followed by group-like indices, both in ring order.
  std::vector<std::size_t> generator_order() const;

private:
  HopfSignature(RingPtr ring, std::vector<HopfKind> kinds)
      : ring_(std::move(ring)), kinds_(std::move(kinds)) {}

  RingPtr ring_;
  std::vector<HopfKind> kinds_;
};

/// Coproduct, extended from generators as an algebra map into the doubled
/// ring.
Poly coproduct(const HopfSignature& H, const TensorRing& T, const Poly& f);
/// Counit: x -> 0, y -> 1.
Scalar counit(const HopfSignature& H, const Poly& f);
/// Antipode: x -> -x, y -> y^-1.
Poly antipode(const HopfSignature& H, const Poly& f);

/// The derivation on A(x)A with d(a(x)b) = d(a)(x)b + a(x)d(b):
/// values z_L -> d(z)_L and z_R -> d(z)_R.
Derivation lift_derivation(const TensorRing& T, const Derivation& d);

struct PairCheck {
  bool ok = true;
  std::size_t i = 0, j = 0; // first failing generator pair
};

/// The bracket commutes with the coproduct iff it does on generator
/// pairs: Delta({z_i, z_j}) = {Delta z_i, Delta z_j} in the tensor
/// square. Requires check_jacobi(P) to pass.
PairCheck is_poisson_hopf(const PoissonStructure& P, const HopfSignature& H);

struct DerGenCheck {
  bool ok = true;
  std::size_t mu = 0, generator = 0; // first failing (derivation, generator)
};

/// Each derivation commutes with the coproduct iff it does on generators:
/// lift(d)(Delta z) = Delta(d z).
DerGenCheck is_differential_hopf(const std::vector<Derivation>& D, const HopfSignature& H);

/// The canonical family spanning the Hamiltonians: {x_i, -} for the
/// primitive generators and the normalized y_j^-1 {y_j, -} for the
/// group-like ones, in generator_order.
std::vector<Derivation> prop_key_derivations(const PoissonStructure& P, const HopfSignature& H);

/// Diagonal transition matrix relating D to the generator Hamiltonians:
/// entry mu is the unit u with D[mu] = u * {g_mu, -}. Every entry is a
/// unit monomial (1 for primitives, y^-1 for the canonical family), which
/// certifies span_A(D) = span_A(Hamiltonians). A family whose transition
/// is not diagonal-unit is rejected with ValidationError.
std::vector<Poly> span_certificate(const std::vector<Derivation>& D,
                                   const PoissonStructure& P, const HopfSignature& H);

/// The section z -> (z, d_1 z, .., d_m z) is a group homomorphism into
/// the prolongation iff the derivations commute with the coproduct.
bool d_group_check(const HopfSignature& H, const std::vector<Derivation>& D);

/// For an all-primitive signature with linear homogeneous constant-
/// coefficient derivations, the matrices A_mu with d_mu(x_i) =
/// sum_j (A_mu)_ij x_j. Nonlinear or inhomogeneous values are rejected
/// naming the offending (mu, i).
std::vector<ScalarMatrix> isoadd_matrices(const HopfSignature& H,
                                          const std::vector<Derivation>& D);

/// Quotient of the section by the zero section, componentwise: for each
/// mu the block (d_mu x_1..d_mu x_s, y_1^-1 d_mu y_1..y_t^-1 d_mu y_t).
/// Components of a group-homomorphic section are primitive, hence
/// polynomial; a component with negative exponents is rejected.
/// Requires d_group_check to pass.
std::vector<Poly> forcom_map(const HopfSignature& H, const std::vector<Derivation>& D);

struct ForcomImageKernel {
  RingPtr target_ring;  // w_1 .. w_{m(s+t)}
  Ideal image;          // closure of the image, in target_ring
  Ideal kernel;         // fiber over 0, in the source ring
};

/// Image closure (eliminating the source variables from the graph ideal)
/// and kernel (ideal generated by the components) of the forcom map.
ForcomImageKernel forcom_image_kernel(const HopfSignature& H, const std::vector<Derivation>& D,
                                      StepBudget* budget = nullptr);

} // namespace pdme
