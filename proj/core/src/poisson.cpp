#include "pdme/poisson.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gb_kernel.hpp"
#include "pdme/linalg.hpp"
#include "pdme/order.hpp"

namespace pdme {

PoissonStructure PoissonStructure::make(RingPtr ring, std::vector<std::vector<Poly>> matrix) {
  const std::size_t n = ring->arity();
  if (matrix.size() != n)
    throw ValidationError("bracket matrix must be n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw ValidationError("bracket matrix must be n x n");
    for (std::size_t j = 0; j < n; ++j)
      require_same_ring(matrix[i][j].ring(), ring, "bracket entry");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix[i][i].is_zero())
      throw ValidationError("bracket matrix has nonzero diagonal entry at " +
                            ring->name(i));
    for (std::size_t j = i + 1; j < n; ++j)
      if (matrix[j][i] != -matrix[i][j])
        throw ValidationError("bracket matrix is not antisymmetric at pair (" +
                              ring->name(i) + ", " + ring->name(j) + ")");
  }
  return PoissonStructure(std::move(ring), std::move(matrix));
}

PoissonStructure PoissonStructure::from_entries(
    RingPtr ring, const std::vector<std::tuple<std::size_t, std::size_t, Poly>>& entries) {
  const std::size_t n = ring->arity();
  std::vector<std::vector<Poly>> b(n, std::vector<Poly>(n, Poly::zero(ring)));
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (const auto& [i, j, p] : entries) {
    if (i >= n || j >= n) throw ValidationError("bracket entry index out of range");
    if (given[i][j]) throw ValidationError("duplicate bracket entry");
    b[i][j] = p;
    given[i][j] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!given[i][j]) continue;
      if (i == j && !b[i][j].is_zero())
        throw ValidationError("bracket {z,z} must vanish for " + ring->name(i));
      if (given[j][i]) {
        if (b[j][i] != -b[i][j])
          throw ValidationError("bracket entries for (" + ring->name(i) + ", " +
                                ring->name(j) + ") violate antisymmetry");
      } else {
        b[j][i] = -b[i][j];
        given[j][i] = true;
      }
    }
  return make(std::move(ring), std::move(b));
}

Poly PoissonStructure::bracket(const Poly& f, const Poly& g) const {
  require_same_ring(f.ring(), ring_, "bracket");
  require_same_ring(g.ring(), ring_, "bracket");
  const std::size_t n = ring_->arity();
  std::vector<Poly> df(n), dg(n);
  for (std::size_t i = 0; i < n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
  }
  Poly out = Poly::zero(ring_);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (b_[i][j].is_zero()) continue;
      out += b_[i][j] * (df[i] * dg[j] - df[j] * dg[i]);
    }
  return out;
}

std::optional<std::array<std::size_t, 3>> PoissonStructure::check_jacobi() const {
  const std::size_t n = ring_->arity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Poly zi = Poly::variable(ring_, i);
        Poly zj = Poly::variable(ring_, j);
        Poly zk = Poly::variable(ring_, k);
        Poly jac = bracket(zi, b_[j][k]) + bracket(zj, -b_[i][k]) + bracket(zk, b_[i][j]);
        if (!jac.is_zero()) return std::array<std::size_t, 3>{i, j, k};
      }
  return std::nullopt;
}

Derivation PoissonStructure::hamiltonian(const Poly& a) const {
  require_same_ring(a.ring(), ring_, "hamiltonian");
  std::vector<Poly> values;
  values.reserve(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    values.push_back(bracket(a, Poly::variable(ring_, i)));
  return Derivation::make(ring_, std::move(values));
}

std::vector<Derivation> PoissonStructure::generator_hamiltonians() const {
  std::vector<Derivation> out;
  out.reserve(ring_->arity());
  for (std::size_t i = 0; i < ring_->arity(); ++i)
    out.push_back(hamiltonian(Poly::variable(ring_, i)));
  return out;
}

LieData LieData::make(
    std::size_t dim,
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>& entries) {
  LieData lie;
  lie.dim = dim;
  lie.c.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(0))));
  std::vector<std::vector<std::vector<bool>>> given(
      dim, std::vector<std::vector<bool>>(dim, std::vector<bool>(dim, false)));
  for (const auto& [i, j, k, v] : entries) {
    if (i >= dim || j >= dim || k >= dim)
      throw ValidationError("structure constant index out of range");
    if (given[i][j][k]) throw ValidationError("duplicate structure constant");
    lie.c[i][j][k] = v;
    given[i][j][k] = true;
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        if (!given[i][j][k]) continue;
        if (i == j && !lie.c[i][j][k].is_zero())
          throw ValidationError("structure constants violate antisymmetry: c_iik != 0");
        if (given[j][i][k]) {
          if (lie.c[j][i][k] != -lie.c[i][j][k])
            throw ValidationError("structure constants violate antisymmetry");
        } else {
          lie.c[j][i][k] = -lie.c[i][j][k];
          given[j][i][k] = true;
        }
      }
  return lie;
}

PoissonStructure from_lie_algebra(const LieData& lie, RingPtr ring) {
  if (ring->arity() != lie.dim)
    throw ValidationError("ring arity does not match Lie algebra dimension");
  const std::size_t n = lie.dim;
  std::vector<std::vector<Poly>> b(n, std::vector<Poly>(n, Poly::zero(ring)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!lie.c[i][j][k].is_zero())
          b[i][j] += Poly::variable(ring, k).scaled(lie.c[i][j][k]);
  return PoissonStructure::make(std::move(ring), std::move(b));
}

bool is_poisson_ideal(const PoissonStructure& P, const Ideal& I, StepBudget* budget) {
  require_same_ring(P.ring(), I.ring(), "is_poisson_ideal");
  for (std::size_t i = 0; i < P.ring()->arity(); ++i) {
    Poly zi = Poly::variable(P.ring(), i);
    for (const auto& g : I.generators())
      if (!ideal_member(P.bracket(zi, g), I, budget)) return false;
  }
  return true;
}

bool is_d_ideal(const std::vector<Derivation>& family, const Ideal& I, StepBudget* budget) {
  for (const auto& d : family) {
    require_same_ring(d.ring, I.ring(), "is_d_ideal");
    for (const auto& g : I.generators())
      if (!ideal_member(apply_derivation(d, g), I, budget)) return false;
  }
  return true;
}

std::vector<Monomial> monomials_upto(const RingPtr& ring, int degree_bound) {
  std::vector<Monomial> out;
  Monomial current(ring->arity(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
    if (i == ring->arity()) {
      out.push_back(current);
      return;
    }
    const bool invertible = ring->kind(i) == VarKind::Invertible;
    for (int e = invertible ? -remaining : 0; e <= remaining; ++e) {
      current[i] = e;
      rec(i + 1, remaining - std::abs(e));
    }
    current[i] = 0;
  };
  rec(0, degree_bound);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    auto da = mono_abs_degree(a), db = mono_abs_degree(b);
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

namespace {

// Shared engine for the degree-bounded kernel searches. `operators` maps
// a monomial to the polynomial that must land in I.
std::vector<Poly> kernel_upto(const RingPtr& ring, const Ideal& I, int degree_bound,
                              const std::vector<std::function<Poly(const Poly&)>>& operators,
                              StepBudget* budget) {
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::vector<Monomial> candidates = monomials_upto(ring, degree_bound);

  // A global clearing unit makes every candidate polynomial, so classes
  // modulo I can be compared through plain normal forms.
  Monomial clear_shift(ring->arity(), 0);
  for (auto i : ring->invertible_indices()) clear_shift[i] = degree_bound;
  Poly global_unit = Poly::monomial(ring, clear_shift, Scalar(1));

  // Keep candidates whose classes modulo I are linearly independent.
  // `echelon` holds the images of the kept ones in row echelon form.
  std::vector<Monomial> kept;
  ScalarMatrix echelon;
  std::map<Monomial, std::size_t> image_cols;
  for (const auto& m : candidates) {
    Poly nf = normal_form(global_unit * Poly::monomial(ring, m, Scalar(1)), I,
                          MonomialOrder::grevlex(), budget);
    if (nf.is_zero()) continue;
    for (const auto& [mm, c] : nf.terms())
      image_cols.emplace(mm, image_cols.size());
    ScalarRow row(image_cols.size(), Scalar(0));
    for (const auto& [mm, c] : nf.terms()) row[image_cols[mm]] = c;
    ScalarMatrix with = echelon;
    for (auto& r : with) r.resize(image_cols.size(), Scalar(0));
    with.push_back(row);
    if (rref(with).size() > echelon.size()) {
      echelon = std::move(with); // already reduced, rank = row count
      while (!echelon.empty()) {
        bool zero = true;
        for (const auto& c : echelon.back())
          if (!c.is_zero()) { zero = false; break; }
        if (zero) echelon.pop_back(); else break;
      }
      kept.push_back(m);
    }
  }

  if (kept.empty()) return {};

  // Linear system: for each operator, sum_m c_m op(m) must lie in I.
  // A per-operator clearing unit keeps membership linear in the c_m.
  ScalarMatrix equations;
  std::size_t unknowns = kept.size();
  for (const auto& op : operators) {
    std::vector<Poly> images(unknowns);
    Monomial shift(ring->arity(), 0);
    for (std::size_t k = 0; k < unknowns; ++k) {
      images[k] = op(Poly::monomial(ring, kept[k], Scalar(1)));
      for (const auto& [mm, c] : images[k].terms())
        for (std::size_t i = 0; i < mm.size(); ++i)
          if (mm[i] < 0) shift[i] = std::max(shift[i], -mm[i]);
    }
    Poly unit = Poly::monomial(ring, shift, Scalar(1));
    std::map<Monomial, std::size_t> cols;
    std::vector<ScalarRow> local; // indexed by monomial of the normal form
    for (std::size_t k = 0; k < unknowns; ++k) {
      Poly nf = normal_form(unit * images[k], I, MonomialOrder::grevlex(), budget);
      for (const auto& [mm, c] : nf.terms()) {
        auto [it, fresh] = cols.emplace(mm, cols.size());
        if (fresh) local.emplace_back();
        auto& r = local[it->second];
        r.resize(unknowns, Scalar(0));
        r[k] = c;
      }
    }
    for (auto& r : local) {
      r.resize(unknowns, Scalar(0));
      equations.push_back(std::move(r));
    }
  }

  ScalarMatrix basis = nullspace(std::move(equations), unknowns);

  std::vector<Poly> out;
  for (const auto& v : basis) {
    Poly p = Poly::zero(ring);
    for (std::size_t k = 0; k < unknowns; ++k)
      if (!v[k].is_zero()) p += Poly::monomial(ring, kept[k], v[k]);
    if (p.is_zero()) continue;
    gbk::OrdPoly o = gbk::to_ord(p, ord);
    gbk::content_normalize(o);
    out.push_back(gbk::to_poly(o, ring));
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.terms() < b.terms();
  });
  return out;
}

} // namespace

std::vector<Poly> poisson_center_upto(const PoissonStructure& P, const Ideal& I,
                                      int degree_bound, StepBudget* budget) {
  require_same_ring(P.ring(), I.ring(), "poisson_center_upto");
  if (!is_poisson_ideal(P, I, budget))
    throw ValidationError("poisson_center_upto: ideal is not Poisson");
  std::vector<std::function<Poly(const Poly&)>> ops;
  for (std::size_t i = 0; i < P.ring()->arity(); ++i)
    ops.push_back([&P, i](const Poly& m) {
      return P.bracket(Poly::variable(P.ring(), i), m);
    });
  return kernel_upto(P.ring(), I, degree_bound, ops, budget);
}

std::vector<Poly> dconstants_upto(const std::vector<Derivation>& family, const Ideal& I,
                                  int degree_bound, StepBudget* budget) {
  std::vector<std::function<Poly(const Poly&)>> ops;
  for (const auto& d : family) {
    require_same_ring(d.ring, I.ring(), "dconstants_upto");
    ops.push_back([&d](const Poly& m) { return apply_derivation(d, m); });
  }
  return kernel_upto(I.ring(), I, degree_bound, ops, budget);
}

PoissonStructure doubled_structure(const PoissonStructure& P, const TensorRing& T) {
  require_same_ring(P.ring(), T.base, "doubled_structure");
  const std::size_t n = T.base->arity();
  std::vector<std::vector<Poly>> b(2 * n, std::vector<Poly>(2 * n, Poly::zero(T.doubled)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (P.entry(i, j).is_zero()) continue;
      b[T.left(i)][T.left(j)] = T.embed_left(P.entry(i, j));
      b[T.right(i)][T.right(j)] = T.embed_right(P.entry(i, j));
    }
  return PoissonStructure::make(T.doubled, std::move(b));
}

Poly tensor_bracket(const PoissonStructure& P, const TensorRing& T, const Poly& u,
                    const Poly& v) {
  require_same_ring(u.ring(), T.doubled, "tensor_bracket");
  require_same_ring(v.ring(), T.doubled, "tensor_bracket");
  return doubled_structure(P, T).bracket(u, v);
}

} // namespace pdme
