#include "pdme/hopf.hpp"

#include <algorithm>

namespace pdme {

HopfSignature HopfSignature::make(RingPtr ring, std::vector<HopfKind> kinds) {
  if (kinds.size() != ring->arity())
    throw ValidationError("Hopf signature must tag every variable");
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == HopfKind::Primitive && ring->kind(i) != VarKind::Polynomial)
      throw ValidationError("primitive variable '" + ring->name(i) +
                            "' must be of polynomial kind");
    if (kinds[i] == HopfKind::Grouplike && ring->kind(i) != VarKind::Invertible)
      throw ValidationError("group-like variable '" + ring->name(i) +
                            "' must be invertible");
  }
  return HopfSignature(std::move(ring), std::move(kinds));
}

std::vector<std::size_t> HopfSignature::primitive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kinds_.size(); ++i)
    if (kinds_[i] == HopfKind::Primitive) out.push_back(i);
  return out;
}

std::vector<std::size_t> HopfSignature::grouplike_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kinds_.size(); ++i)
    if (kinds_[i] == HopfKind::Grouplike) out.push_back(i);
  return out;
}

std::vector<std::size_t> HopfSignature::generator_order() const {
  std::vector<std::size_t> out = primitive_indices();
  for (auto i : grouplike_indices()) out.push_back(i);
  return out;
}

namespace {

std::vector<Poly> coproduct_images(const HopfSignature& H, const TensorRing& T) {
  std::vector<Poly> images;
  images.reserve(H.ring()->arity());
  for (std::size_t i = 0; i < H.ring()->arity(); ++i) {
    Poly l = Poly::variable(T.doubled, T.left(i));
    Poly r = Poly::variable(T.doubled, T.right(i));
    images.push_back(H.kind(i) == HopfKind::Primitive ? l + r : l * r);
  }
  return images;
}

} // namespace

Poly coproduct(const HopfSignature& H, const TensorRing& T, const Poly& f) {
  require_same_ring(f.ring(), H.ring(), "coproduct");
  require_same_ring(T.base, H.ring(), "coproduct");
  return substitute(f, T.doubled, coproduct_images(H, T));
}

Scalar counit(const HopfSignature& H, const Poly& f) {
  require_same_ring(f.ring(), H.ring(), "counit");
  std::vector<Poly> images;
  images.reserve(H.ring()->arity());
  for (std::size_t i = 0; i < H.ring()->arity(); ++i)
    images.push_back(Poly::constant(H.ring(), Scalar(H.kind(i) == HopfKind::Primitive ? 0 : 1)));
  return substitute(f, images).constant_value();
}

Poly antipode(const HopfSignature& H, const Poly& f) {
  require_same_ring(f.ring(), H.ring(), "antipode");
  std::vector<Poly> images;
  images.reserve(H.ring()->arity());
  for (std::size_t i = 0; i < H.ring()->arity(); ++i) {
    Poly z = Poly::variable(H.ring(), i);
    images.push_back(H.kind(i) == HopfKind::Primitive ? -z : z.unit_inverse());
  }
  return substitute(f, images);
}

Derivation lift_derivation(const TensorRing& T, const Derivation& d) {
  require_same_ring(d.ring, T.base, "lift_derivation");
  const std::size_t n = T.base->arity();
  std::vector<Poly> values(2 * n, Poly::zero(T.doubled));
  for (std::size_t i = 0; i < n; ++i) {
    values[T.left(i)] = T.embed_left(d.values[i]);
    values[T.right(i)] = T.embed_right(d.values[i]);
  }
  return Derivation::make(T.doubled, std::move(values));
}

PairCheck is_poisson_hopf(const PoissonStructure& P, const HopfSignature& H) {
  require_same_ring(P.ring(), H.ring(), "is_poisson_hopf");
  if (auto bad = P.check_jacobi())
    throw ValidationError("is_poisson_hopf: Jacobi identity fails on (" +
                          P.ring()->name((*bad)[0]) + ", " + P.ring()->name((*bad)[1]) +
                          ", " + P.ring()->name((*bad)[2]) + ")");
  TensorRing T = TensorRing::make(H.ring());
  PoissonStructure PT = doubled_structure(P, T);
  std::vector<Poly> delta = coproduct_images(H, T);
  const std::size_t n = H.ring()->arity();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Poly lhs = coproduct(H, T, P.entry(i, j));
      Poly rhs = PT.bracket(delta[i], delta[j]);
      if (lhs != rhs) return PairCheck{false, i, j};
    }
  return PairCheck{};
}

DerGenCheck is_differential_hopf(const std::vector<Derivation>& D, const HopfSignature& H) {
  TensorRing T = TensorRing::make(H.ring());
  std::vector<Poly> delta = coproduct_images(H, T);
  for (std::size_t mu = 0; mu < D.size(); ++mu) {
    require_same_ring(D[mu].ring, H.ring(), "is_differential_hopf");
    Derivation lifted = lift_derivation(T, D[mu]);
    for (std::size_t i = 0; i < H.ring()->arity(); ++i) {
      Poly lhs = apply_derivation(lifted, delta[i]);
      Poly rhs = coproduct(H, T, D[mu].values[i]);
      if (lhs != rhs) return DerGenCheck{false, mu, i};
    }
  }
  return DerGenCheck{};
}

std::vector<Derivation> prop_key_derivations(const PoissonStructure& P, const HopfSignature& H) {
  require_same_ring(P.ring(), H.ring(), "prop_key_derivations");
  if (auto bad = P.check_jacobi())
    throw ValidationError("prop_key_derivations: Jacobi identity fails");
  std::vector<Derivation> out;
  for (auto i : H.primitive_indices())
    out.push_back(P.hamiltonian(Poly::variable(P.ring(), i)));
  for (auto j : H.grouplike_indices()) {
    Poly yinv = Poly::variable(P.ring(), j).unit_inverse();
    Derivation h = P.hamiltonian(Poly::variable(P.ring(), j));
    std::vector<Poly> values;
    values.reserve(h.values.size());
    for (const auto& v : h.values) values.push_back(yinv * v);
    out.push_back(Derivation::make(P.ring(), std::move(values)));
  }
  return out;
}

std::vector<Poly> span_certificate(const std::vector<Derivation>& D,
                                   const PoissonStructure& P, const HopfSignature& H) {
  const std::vector<std::size_t> gens = H.generator_order();
  if (D.size() != gens.size())
    throw ValidationError("span_certificate: family size differs from generator count");
  std::vector<Poly> diag;
  for (std::size_t mu = 0; mu < gens.size(); ++mu) {
    Derivation ham = P.hamiltonian(Poly::variable(P.ring(), gens[mu]));
    const Derivation& d = D[mu];
    require_same_ring(d.ring, P.ring(), "span_certificate");
    if (ham.is_zero()) {
      if (!d.is_zero())
        throw ValidationError("span_certificate: nonzero derivation over a zero Hamiltonian");
      diag.push_back(Poly::constant(P.ring(), Scalar(1)));
      continue;
    }
    // Find the unit u with d = u * ham from the first nonzero value.
    Poly unit;
    for (std::size_t i = 0; i < ham.values.size(); ++i) {
      if (ham.values[i].is_zero()) continue;
      if (d.values[i].is_zero())
        throw ValidationError("span_certificate: transition is not a unit multiple");
      const auto& [mh, ch] = *ham.values[i].terms().begin();
      const auto& [md, cd] = *d.values[i].terms().begin();
      Monomial diff(mh.size());
      for (std::size_t k = 0; k < mh.size(); ++k) diff[k] = md[k] - mh[k];
      unit = Poly::monomial(P.ring(), std::move(diff), cd / ch);
      break;
    }
    if (!unit.is_unit_monomial())
      throw ValidationError("span_certificate: transition is not a unit multiple");
    for (std::size_t i = 0; i < ham.values.size(); ++i)
      if (d.values[i] != unit * ham.values[i])
        throw ValidationError("span_certificate: transition is not diagonal-unit");
    diag.push_back(unit);
  }
  return diag;
}

bool d_group_check(const HopfSignature& H, const std::vector<Derivation>& D) {
  return is_differential_hopf(D, H).ok;
}

std::vector<ScalarMatrix> isoadd_matrices(const HopfSignature& H,
                                          const std::vector<Derivation>& D) {
  if (!H.grouplike_indices().empty())
    throw ValidationError("isoadd_matrices: signature must be all-primitive");
  const std::size_t n = H.ring()->arity();
  std::vector<ScalarMatrix> out;
  for (std::size_t mu = 0; mu < D.size(); ++mu) {
    require_same_ring(D[mu].ring, H.ring(), "isoadd_matrices");
    ScalarMatrix A(n, ScalarRow(n, Scalar(0)));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [m, c] : D[mu].values[i].terms()) {
        if (mono_abs_degree(m) != 1)
          throw ValidationError("isoadd_matrices: value of derivation #" +
                                std::to_string(mu + 1) + " on " + H.ring()->name(i) +
                                " is not homogeneous linear");
        for (std::size_t j = 0; j < n; ++j)
          if (m[j] == 1) A[i][j] = c;
      }
    }
    out.push_back(std::move(A));
  }
  return out;
}

std::vector<Poly> forcom_map(const HopfSignature& H, const std::vector<Derivation>& D) {
  if (!d_group_check(H, D))
    throw ValidationError("forcom_map: section is not a group homomorphism");
  std::vector<Poly> components;
  for (const auto& d : D) {
    for (auto i : H.primitive_indices()) components.push_back(d.values[i]);
    for (auto j : H.grouplike_indices()) {
      Poly c = Poly::variable(H.ring(), j).unit_inverse() * d.values[j];
      components.push_back(std::move(c));
    }
  }
  for (const auto& c : components)
    for (const auto& [m, coeff] : c.terms())
      for (auto e : m)
        if (e < 0)
          throw ValidationError(
              "forcom_map: component escapes the polynomial span (non-homomorphic section)");
  return components;
}

ForcomImageKernel forcom_image_kernel(const HopfSignature& H, const std::vector<Derivation>& D,
                                      StepBudget* budget) {
  std::vector<Poly> components = forcom_map(H, D);
  const std::size_t k = components.size();

  std::vector<std::pair<std::string, VarKind>> wvars;
  for (std::size_t i = 1; i <= k; ++i)
    wvars.emplace_back("w" + std::to_string(i), VarKind::Polynomial);
  RingPtr target = RingSpec::make(wvars);

  auto combined_vars = H.ring()->variables();
  for (const auto& v : wvars) combined_vars.push_back(v);
  RingPtr combined = RingSpec::make(std::move(combined_vars));

  const std::size_t n = H.ring()->arity();
  std::vector<Poly> graph_gens;
  for (std::size_t i = 0; i < k; ++i) {
    Poly comp = Poly::zero(combined);
    for (const auto& [m, c] : components[i].terms()) {
      Monomial m2 = m;
      m2.resize(combined->arity(), 0);
      comp += Poly::monomial(combined, std::move(m2), c);
    }
    graph_gens.push_back(Poly::variable(combined, n + i) - comp);
  }
  std::vector<std::size_t> source_vars(n);
  for (std::size_t i = 0; i < n; ++i) source_vars[i] = i;
  Ideal graph(combined, std::move(graph_gens));
  Ideal eliminated = eliminate(graph, source_vars, budget);

  std::vector<Poly> image_gens;
  for (const auto& g : eliminated.generators()) {
    Poly out = Poly::zero(target);
    for (const auto& [m, c] : g.terms()) {
      Monomial m2(k);
      for (std::size_t i = 0; i < k; ++i) m2[i] = m[n + i];
      out += Poly::monomial(target, std::move(m2), c);
    }
    image_gens.push_back(std::move(out));
  }

  return ForcomImageKernel{target, Ideal(target, std::move(image_gens)),
                           Ideal(H.ring(), components)};
}

} // namespace pdme
