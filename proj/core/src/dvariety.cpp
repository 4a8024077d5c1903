#include "pdme/dvariety.hpp"

#include <algorithm>

namespace pdme {

namespace {

Poly widen(const Poly& f, const RingPtr& bigger) {
  Poly out = Poly::zero(bigger);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2 = m;
    m2.resize(bigger->arity(), 0);
    out += Poly::monomial(bigger, std::move(m2), c);
  }
  return out;
}

// Maps f into `target` by matching variable names; every variable f uses
// must exist in target.
Poly map_by_names(const Poly& f, const RingPtr& target) {
  const RingPtr& src = f.ring();
  std::vector<std::ptrdiff_t> where(src->arity(), -1);
  for (std::size_t i = 0; i < src->arity(); ++i)
    if (auto idx = target->index(src->name(i))) where[i] = static_cast<std::ptrdiff_t>(*idx);
  Poly out = Poly::zero(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2(target->arity(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (where[i] < 0)
        throw ValidationError("variable '" + src->name(i) + "' has no counterpart");
      m2[static_cast<std::size_t>(where[i])] = m[i];
    }
    out += Poly::monomial(target, std::move(m2), c);
  }
  return out;
}

std::string basis_line(const Ideal& J, std::size_t k, StepBudget* budget) {
  std::string line = "J_" + std::to_string(k) + " = { ";
  const auto& polys = J.groebner(MonomialOrder::grevlex(), budget).polys;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) line += ", ";
    line += polys[i].to_string();
  }
  line += polys.empty() ? "}" : " }";
  return line;
}

} // namespace

std::string prolongation_coord_name(std::size_t mu, const std::string& var) {
  return "u" + std::to_string(mu) + "_" + var;
}

RingPtr single_prolongation_ring(const RingPtr& base, std::size_t mu) {
  auto vars = base->variables();
  for (const auto& [n, k] : base->variables())
    vars.emplace_back(prolongation_coord_name(mu, n), VarKind::Polynomial);
  return RingSpec::make(std::move(vars));
}

RingPtr prolongation_ring(const RingPtr& base, std::size_t m) {
  auto vars = base->variables();
  for (std::size_t mu = 1; mu <= m; ++mu)
    for (const auto& [n, k] : base->variables())
      vars.emplace_back(prolongation_coord_name(mu, n), VarKind::Polynomial);
  return RingSpec::make(std::move(vars));
}

namespace {

// The linear fiber equation of f for the block starting at `offset`:
// sum_i df/dz_i * u_i + f^delta.
Poly fiber_equation(const Poly& f, const RingPtr& ext, std::size_t offset) {
  const std::size_t n = f.ring()->arity();
  Poly out = widen(coeff_derivative(f), ext);
  for (std::size_t i = 0; i < n; ++i) {
    Poly df = f.derivative(i);
    if (df.is_zero()) continue;
    out += widen(df, ext) * Poly::variable(ext, offset + i);
  }
  return out;
}

} // namespace

Ideal prolongation_ideal(const Ideal& I, std::size_t mu) {
  if (mu == 0) throw ValidationError("derivation index is 1-based");
  const RingPtr ext = single_prolongation_ring(I.ring(), mu);
  const std::size_t n = I.ring()->arity();
  std::vector<Poly> gens;
  for (const auto& f : I.generators()) {
    gens.push_back(widen(f, ext));
    gens.push_back(fiber_equation(f, ext, n));
  }
  return Ideal(ext, std::move(gens));
}

Ideal full_prolongation(const Ideal& I, std::size_t m) {
  if (m == 0) throw ValidationError("prolongation needs at least one derivation");
  const RingPtr ext = prolongation_ring(I.ring(), m);
  const std::size_t n = I.ring()->arity();
  std::vector<Poly> gens;
  for (const auto& f : I.generators()) gens.push_back(widen(f, ext));
  for (std::size_t mu = 1; mu <= m; ++mu)
    for (const auto& f : I.generators())
      gens.push_back(fiber_equation(f, ext, n * mu));
  return Ideal(ext, std::move(gens));
}

SectionCheck validate_dvariety(const Ideal& I, const std::vector<Derivation>& derivations,
                               StepBudget* budget) {
  for (std::size_t mu = 0; mu < derivations.size(); ++mu) {
    require_same_ring(derivations[mu].ring, I.ring(), "validate_dvariety");
    const auto& gens = I.generators();
    for (std::size_t g = 0; g < gens.size(); ++g)
      if (!ideal_member(apply_derivation(derivations[mu], gens[g]), I, budget))
        return SectionCheck{false, g, mu};
  }
  return SectionCheck{};
}

DVariety DVariety::make(RingPtr ring, Ideal ideal, std::vector<Derivation> derivations,
                        StepBudget* budget) {
  require_same_ring(ideal.ring(), ring, "DVariety");
  SectionCheck check = validate_dvariety(ideal, derivations, budget);
  if (!check.ok)
    throw ValidationError(
        "derivations do not preserve the ideal: generator #" +
        std::to_string(check.generator) + " under derivation #" + std::to_string(check.mu));
  return DVariety(std::move(ring), std::move(ideal), std::move(derivations));
}

bool is_d_subvariety(const DVariety& V, const Ideal& J, StepBudget* budget) {
  require_same_ring(V.ring(), J.ring(), "is_d_subvariety");
  if (!ideal_contains(J, V.ideal(), budget))
    throw ValidationError("is_d_subvariety: J does not contain the variety's ideal");
  return validate_dvariety(J, V.derivations(), budget).ok;
}

RegularMap RegularMap::make(RingPtr source, RingPtr target, std::vector<Poly> images) {
  if (images.size() != target->arity())
    throw ValidationError("regular map needs one image per target variable");
  for (const auto& p : images) require_same_ring(p.ring(), source, "regular map image");
  return RegularMap{std::move(source), std::move(target), std::move(images)};
}

Poly RegularMap::pullback(const Poly& f) const {
  require_same_ring(f.ring(), target, "pullback");
  return substitute(f, source, images);
}

bool is_d_morphism(const RegularMap& phi, const DVariety& V, const DVariety& W,
                   StepBudget* budget) {
  require_same_ring(phi.source, V.ring(), "is_d_morphism");
  require_same_ring(phi.target, W.ring(), "is_d_morphism");
  if (V.derivations().size() != W.derivations().size())
    throw ValidationError("is_d_morphism: derivation families differ in size");

  // Well-definedness into W: cleared generators of W's ideal pull back
  // into V's ideal (clearing first is the Laurent-safe route).
  for (const auto& g : W.ideal().generators()) {
    Poly cleared = clear_denominators(g).first;
    if (!ideal_member(phi.pullback(cleared), V.ideal(), budget))
      throw ValidationError("map does not send V into W");
  }

  for (std::size_t mu = 0; mu < V.derivations().size(); ++mu) {
    for (std::size_t j = 0; j < W.ring()->arity(); ++j) {
      Poly lhs = apply_derivation(V.derivations()[mu], phi.images[j]);
      const Poly& value = W.derivations()[mu].values[j];
      auto [cleared, unit] = clear_denominators(value);
      Poly diff;
      if (unit.is_constant()) {
        diff = lhs - phi.pullback(value);
      } else {
        // lhs == phi^#(value) mod I tested as phi^#(u)*lhs == phi^#(u*value),
        // valid because u is a unit on W.
        diff = phi.pullback(unit) * lhs - phi.pullback(cleared);
      }
      if (!ideal_member(diff, V.ideal(), budget)) return false;
    }
  }
  return true;
}

StabilityReport image_closure(const RegularMap& phi, const DVariety& V, const DVariety& W,
                              StepBudget* budget) {
  if (!is_d_morphism(phi, V, W, budget))
    throw ValidationError("image_closure: map is not a D-morphism");

  // Graph ideal in source (+) target coordinates.
  auto vars = phi.source->variables();
  for (const auto& [n, k] : phi.target->variables()) vars.emplace_back(n, k);
  RingPtr graph_ring = RingSpec::make(vars);

  std::vector<Poly> gens;
  for (const auto& g : V.ideal().groebner(MonomialOrder::grevlex(), budget).polys)
    gens.push_back(widen(g, graph_ring));
  const std::size_t n = phi.source->arity();
  for (std::size_t j = 0; j < phi.target->arity(); ++j)
    gens.push_back(Poly::variable(graph_ring, n + j) - widen(phi.images[j], graph_ring));

  std::vector<std::size_t> source_vars(n);
  for (std::size_t i = 0; i < n; ++i) source_vars[i] = i;
  Ideal graph(graph_ring, std::move(gens));
  Ideal eliminated = eliminate(graph, source_vars, budget);

  std::vector<Poly> target_gens;
  for (const auto& g : eliminated.generators())
    target_gens.push_back(map_by_names(g, phi.target));
  Ideal closure(phi.target, std::move(target_gens));

  StabilityReport report{closure, is_d_subvariety(W, closure, budget)};
  return report;
}

StabilityReport preimage(const RegularMap& phi, const DVariety& V, const DVariety& W,
                         const Ideal& X, StepBudget* budget) {
  require_same_ring(X.ring(), phi.target, "preimage");
  if (!is_d_subvariety(W, X, budget))
    throw ValidationError("preimage: X is not a D-subvariety ideal of the target");

  std::vector<Poly> gens = V.ideal().generators();
  for (const auto& g : X.generators())
    gens.push_back(phi.pullback(clear_denominators(g).first));
  Ideal pulled(phi.source, std::move(gens));

  StabilityReport report{pulled, validate_dvariety(pulled, V.derivations(), budget).ok};
  return report;
}

Ideal d_closure(const DVariety& V, const std::vector<Poly>& seeds, StepBudget* budget) {
  std::vector<Poly> gens = V.ideal().generators();
  for (const auto& s : seeds) {
    require_same_ring(s.ring(), V.ring(), "d_closure seed");
    gens.push_back(s);
  }
  Ideal J(V.ring(), std::move(gens));
  StepBudget local;
  StepBudget& b = budget ? *budget : local;
  while (true) {
    b.charge();
    std::vector<Poly> next = J.groebner(MonomialOrder::grevlex(), &b).polys;
    std::vector<Poly> grown = next;
    for (const auto& d : V.derivations())
      for (const auto& g : next) grown.push_back(apply_derivation(d, g));
    Ideal J2(V.ring(), std::move(grown));
    if (ideal_eq(J2, J, &b)) return groebner_basis(J, MonomialOrder::grevlex(), &b);
    J = std::move(J2);
  }
}

namespace {

// { f in J : d(f) in J }, exact via syzygies of (d(b_1)..d(b_r), b_1..b_r).
Ideal refine_once(const Ideal& J, const Derivation& d, StepBudget* budget) {
  const auto& basis = J.groebner(MonomialOrder::grevlex(), budget).polys;
  if (basis.empty()) return J; // zero ideal is stable
  const std::size_t r = basis.size();
  std::vector<Poly> row;
  row.reserve(2 * r);
  for (const auto& bpoly : basis) row.push_back(apply_derivation(d, bpoly));
  for (const auto& bpoly : basis) row.push_back(bpoly);
  SyzygyBasis syz = syzygies(row, budget);
  std::vector<Poly> gens;
  for (const auto& v : syz.generators) {
    Poly f = Poly::zero(J.ring());
    for (std::size_t i = 0; i < r; ++i)
      if (!v[i].is_zero()) f += v[i] * basis[i];
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return Ideal(J.ring(), std::move(gens));
}

} // namespace

CoreResult d_core(const DVariety& V, const Ideal& I, std::size_t cap, StepBudget* budget) {
  require_same_ring(I.ring(), V.ring(), "d_core");
  if (I.is_unit(budget)) throw ValidationError("d_core: ideal is not proper");

  CoreResult result;
  Ideal J = groebner_basis(I, MonomialOrder::grevlex(), budget);
  result.trace.push_back(basis_line(J, 0, budget));

  std::size_t descents = 0;
  while (true) {
    Ideal refined = J;
    bool first = true;
    for (const auto& d : V.derivations()) {
      Ideal r = refine_once(J, d, budget);
      refined = first ? std::move(r) : intersect(refined, r, budget);
      first = false;
    }
    if (ideal_eq(refined, J, budget)) {
      result.ideal = J;
      result.status = CoreResult::Status::Exact;
      result.iterations = descents;
      return result;
    }
    J = groebner_basis(refined, MonomialOrder::grevlex(), budget);
    ++descents;
    result.trace.push_back(basis_line(J, descents, budget));
    if (descents >= cap) {
      result.ideal = J;
      result.status = CoreResult::Status::UpperBound;
      result.iterations = descents;
      return result;
    }
  }
}

} // namespace pdme
