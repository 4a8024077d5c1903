#pragma once

#include <array>
#include <optional>
#include <tuple>
#include <vector>

#include "pdme/groebner.hpp"
#include "pdme/poly.hpp"
#include "pdme/tensor.hpp"

namespace pdme {

/// Antisymmetric bracket on a polynomial or Laurent ring, stored as the
/// matrix B with B_ij = {z_i, z_j}. The bracket extends to arbitrary
/// elements as a biderivation:
///
///   {f, g} = sum_{i<j} B_ij * (df/dz_i dg/dz_j - df/dz_j dg/dz_i)
///
/// Antisymmetry and the Leibniz rule hold by construction; the Jacobi
/// identity is a property of B and is checked by check_jacobi.
class PoissonStructure {
public:
  /// Full matrix; throws unless B_ii = 0 and B_ji = -B_ij.
  static PoissonStructure make(RingPtr ring, std::vector<std::vector<Poly>> matrix);
  /// Entries for pairs (i, j); the opposite pair is filled by
  /// antisymmetry, and giving both inconsistently is an error.
  static PoissonStructure from_entries(
      RingPtr ring, const std::vector<std::tuple<std::size_t, std::size_t, Poly>>& entries);

  const RingPtr& ring() const { return ring_; }
  const Poly& entry(std::size_t i, std::size_t j) const { return b_[i][j]; }

  Poly bracket(const Poly& f, const Poly& g) const;

  /// Checks the Jacobi identity on all generator triples i < j < k, which
  /// suffices for the biderivation extension: the Jacobiator is a
  /// derivation in each argument, so it vanishes identically iff it
  /// vanishes on generators. Returns the first failing triple, or nullopt.
  std::optional<std::array<std::size_t, 3>> check_jacobi() const;

  /// The Hamiltonian derivation {a, -}: values z_i -> {a, z_i}.
  Derivation hamiltonian(const Poly& a) const;
  std::vector<Derivation> generator_hamiltonians() const;

private:
  PoissonStructure(RingPtr ring, std::vector<std::vector<Poly>> b)
      : ring_(std::move(ring)), b_(std::move(b)) {}

  RingPtr ring_;
  std::vector<std::vector<Poly>> b_;
};

/// Structure constants c_ijk of a finite-dimensional Lie algebra,
/// [x_i, x_j] = sum_k c_ijk x_k, antisymmetric in (i, j).
struct LieData {
  std::size_t dim = 0;
  std::vector<std::vector<std::vector<Scalar>>> c; // c[i][j][k]

  /// Fills the opposite pairs by antisymmetry; inconsistent or diagonal
  /// entries are rejected.
  static LieData make(std::size_t dim,
                      const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& entries);
};

/// The symmetric-algebra Poisson structure: B_ij = sum_k c_ijk z_k.
/// check_jacobi passes on the result iff the constants satisfy the Lie
/// Jacobi identity. The ring must have dim variables.
PoissonStructure from_lie_algebra(const LieData& lie, RingPtr ring);

/// True iff {z_i, g} lies in I for every ring variable z_i and generator
/// g of I; by the generator reduction this is exactly Poisson stability.
bool is_poisson_ideal(const PoissonStructure& P, const Ideal& I, StepBudget* budget = nullptr);

/// Q-basis of the degree-bounded Poisson center of A/I: elements
/// p = sum c_m m over monomials of degree <= d that are independent
/// modulo I, with {z_i, p} in I for all i. Exact linear algebra.
/// Requires is_poisson_ideal(P, I).
std::vector<Poly> poisson_center_upto(const PoissonStructure& P, const Ideal& I, int degree_bound,
                                      StepBudget* budget = nullptr);

/// Same computation for an arbitrary derivation family: the degree-bounded
/// constants { p : apply(d, p) in I for all d in family } modulo I.
std::vector<Poly> dconstants_upto(const std::vector<Derivation>& family, const Ideal& I,
                                  int degree_bound, StepBudget* budget = nullptr);

/// True iff apply(d, g) lies in I for every d in the family and generator g.
bool is_d_ideal(const std::vector<Derivation>& family, const Ideal& I, StepBudget* budget = nullptr);

/// The product Poisson structure on the doubled ring: left and right
/// copies bracket as in A, and {z_iL, z_jR} = 0. Realizes the
/// tensor-square bracket {a(x)b, a'(x)b'} = {a,a'}(x)bb' + aa'(x){b,b'}.
PoissonStructure doubled_structure(const PoissonStructure& P, const TensorRing& T);

/// Bracket of u, v in the doubled ring under the tensor-square structure.
Poly tensor_bracket(const PoissonStructure& P, const TensorRing& T, const Poly& u, const Poly& v);

/// All monomials of the ring with sum of |exponents| <= d, ascending.
/// Exponents of invertible variables range over negative values too.
std::vector<Monomial> monomials_upto(const RingPtr& ring, int degree_bound);

} // namespace pdme
