#include "pdme/groebner.hpp"

#include <algorithm>
#include <string>

#include "gb_kernel.hpp"

namespace pdme {

namespace {

constexpr const char* kFreshVar = "@t";

StepBudget& ensure(StepBudget*& budget, StepBudget& local) {
  if (!budget) budget = &local;
  return *budget;
}

std::pair<int, std::size_t> order_key(const MonomialOrder& ord) {
  return {static_cast<int>(ord.kind),
          ord.kind == MonomialOrder::Kind::Block ? ord.split : 0};
}

// Ring with one fresh polynomial variable appended.
RingPtr extend_ring(const RingPtr& ring, const std::string& name, VarKind kind) {
  auto vars = ring->variables();
  vars.emplace_back(name, kind);
  return RingSpec::make(std::move(vars));
}

Poly extend_poly(const Poly& f, const RingPtr& bigger) {
  Poly out = Poly::zero(bigger);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2 = m;
    m2.resize(bigger->arity(), 0);
    out += Poly::monomial(bigger, std::move(m2), c);
  }
  return out;
}

// Drops trailing variables whose exponents are all zero.
Poly restrict_poly(const Poly& f, const RingPtr& smaller) {
  Poly out = Poly::zero(smaller);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(smaller->arity()));
    out += Poly::monomial(smaller, std::move(m2), c);
  }
  return out;
}

// perm[new_index] = old_index
Poly permute_poly(const Poly& f, const RingPtr& target, const std::vector<std::size_t>& perm) {
  Poly out = Poly::zero(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial m2(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) m2[i] = m[perm[i]];
    out += Poly::monomial(target, std::move(m2), c);
  }
  return out;
}

std::vector<gbk::OrdPoly> to_ord_list(const std::vector<Poly>& polys, const MonomialOrder& ord) {
  std::vector<gbk::OrdPoly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(gbk::to_ord(p, ord));
  return out;
}

std::vector<Poly> to_poly_list(const std::vector<gbk::OrdPoly>& polys, const RingPtr& ring) {
  std::vector<Poly> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(gbk::to_poly(p, ring));
  return out;
}

std::vector<Poly> gb_raw(const RingPtr& ring, const std::vector<Poly>& gens,
                         const MonomialOrder& ord, StepBudget& budget) {
  auto basis = gbk::reduced_groebner(to_ord_list(gens, ord), ord, budget);
  return to_poly_list(basis, ring);
}

// Generators of the elimination ideal: reorder so the eliminated
// variables lead, run a block order, keep basis elements free of them.
std::vector<Poly> eliminate_raw(const RingPtr& ring, const std::vector<Poly>& gens,
                                const std::vector<std::size_t>& elim, StepBudget& budget) {
  if (elim.empty()) return gb_raw(ring, gens, MonomialOrder::grevlex(), budget);

  const std::size_t n = ring->arity();
  std::vector<bool> is_elim(n, false);
  for (auto i : elim) {
    if (i >= n) throw ValidationError("eliminate: variable index out of range");
    is_elim[i] = true;
  }
  std::vector<std::size_t> perm; // new -> old
  for (std::size_t i = 0; i < n; ++i)
    if (is_elim[i]) perm.push_back(i);
  const std::size_t split = perm.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!is_elim[i]) perm.push_back(i);

  std::vector<std::pair<std::string, VarKind>> vars;
  vars.reserve(n);
  for (auto old : perm) vars.emplace_back(ring->name(old), ring->kind(old));
  RingPtr reordered = RingSpec::make(std::move(vars));

  std::vector<Poly> moved;
  moved.reserve(gens.size());
  for (const auto& g : gens) moved.push_back(permute_poly(g, reordered, perm));

  auto basis = gb_raw(reordered, moved, MonomialOrder::block(split), budget);

  std::vector<std::size_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = i;

  std::vector<Poly> out;
  for (const auto& b : basis) {
    bool free_of_elim = true;
    for (const auto& [m, c] : b.terms())
      for (std::size_t i = 0; i < split && free_of_elim; ++i)
        if (m[i] != 0) free_of_elim = false;
    if (free_of_elim) out.push_back(permute_poly(b, ring, inv));
  }
  return out;
}

std::vector<Poly> saturate_raw(const RingPtr& ring, const std::vector<Poly>& gens,
                               const Poly& f, StepBudget& budget) {
  RingPtr ext = extend_ring(ring, kFreshVar, VarKind::Polynomial);
  std::vector<Poly> egens;
  egens.reserve(gens.size() + 1);
  for (const auto& g : gens) egens.push_back(extend_poly(g, ext));
  Poly t = Poly::variable(ext, ext->arity() - 1);
  egens.push_back(Poly::constant(ext, Scalar(1)) - t * extend_poly(f, ext));
  auto elim = eliminate_raw(ext, egens, {ext->arity() - 1}, budget);
  std::vector<Poly> out;
  out.reserve(elim.size());
  for (const auto& g : elim) out.push_back(restrict_poly(g, ring));
  return out;
}

// Cleared generators of the Laurent-normalized ideal: denominators
// removed, then saturated by the product of the invertible variables.
std::vector<Poly> normalized_gens(const RingPtr& ring, const std::vector<Poly>& gens,
                                  StepBudget& budget) {
  std::vector<Poly> cleared;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    cleared.push_back(clear_denominators(g).first);
  }
  if (cleared.empty() || !ring->has_invertible()) return cleared;
  Poly prod = Poly::constant(ring, Scalar(1));
  for (auto i : ring->invertible_indices()) prod = prod * Poly::variable(ring, i);
  return saturate_raw(ring, cleared, prod, budget);
}

} // namespace

bool ReducedBasis::is_unit() const {
  return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)) {
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    require_same_ring(g.ring(), ring_, "ideal generator");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::zero(RingPtr ring) { return Ideal(std::move(ring), {}); }

const ReducedBasis& Ideal::groebner(const MonomialOrder& order, StepBudget* budget) const {
  if (!ring_) throw ValidationError("ideal without a ring");
  auto key = order_key(order);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->entries.find(key);
    if (it != cache_->entries.end()) return it->second;
  }
  StepBudget local;
  StepBudget& b = ensure(budget, local);
  std::vector<Poly> norm = normalized_gens(ring_, gens_, b);
  std::vector<Poly> basis = gb_raw(ring_, norm, order, b);
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto [it, inserted] =
      cache_->entries.emplace(key, ReducedBasis{order, std::move(basis)});
  (void)inserted;
  return it->second;
}

bool Ideal::is_unit(StepBudget* budget) const { return groebner(MonomialOrder::grevlex(), budget).is_unit(); }
bool Ideal::is_zero_ideal(StepBudget* budget) const { return groebner(MonomialOrder::grevlex(), budget).is_zero(); }

Ideal groebner_basis(const Ideal& I, const MonomialOrder& order, StepBudget* budget) {
  const ReducedBasis& basis = I.groebner(order, budget);
  Ideal out(I.ring(), basis.polys);
  out.groebner(order, budget); // fill the copy's cache
  return out;
}

std::pair<Poly, Poly> clear_denominators(const Poly& f) {
  const RingPtr& ring = f.ring();
  Monomial shift(ring->arity(), 0);
  for (const auto& [m, c] : f.terms())
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < 0) shift[i] = std::max(shift[i], -m[i]);
  Poly unit = Poly::monomial(ring, shift, Scalar(1));
  return {unit * f, unit};
}

Poly normal_form(const Poly& f, const Ideal& I, const MonomialOrder& order,
                 StepBudget* budget) {
  require_same_ring(f.ring(), I.ring(), "normal_form");
  StepBudget local;
  StepBudget& b = ensure(budget, local);
  const ReducedBasis& basis = I.groebner(order, &b);
  auto [cleared, unit] = clear_denominators(f);
  auto rem = gbk::normal_form(gbk::to_ord(cleared, order),
                              to_ord_list(basis.polys, order), order, b);
  Poly r = gbk::to_poly(rem, f.ring());
  if (!unit.is_constant()) r = unit.unit_inverse() * r;
  return r;
}

bool ideal_member(const Poly& f, const Ideal& I, StepBudget* budget) {
  return normal_form(f, I, MonomialOrder::grevlex(), budget).is_zero();
}

bool ideal_contains(const Ideal& I, const Ideal& J, StepBudget* budget) {
  require_same_ring(I.ring(), J.ring(), "ideal_contains");
  for (const auto& g : J.generators())
    if (!ideal_member(g, I, budget)) return false;
  return true;
}

bool ideal_eq(const Ideal& I, const Ideal& J, StepBudget* budget) {
  require_same_ring(I.ring(), J.ring(), "ideal_eq");
  const ReducedBasis& a = I.groebner(MonomialOrder::grevlex(), budget);
  const ReducedBasis& b = J.groebner(MonomialOrder::grevlex(), budget);
  return a.polys == b.polys;
}

bool radical_member(const Poly& f, const Ideal& I, StepBudget* budget) {
  require_same_ring(f.ring(), I.ring(), "radical_member");
  StepBudget local;
  StepBudget& b = ensure(budget, local);
  if (f.is_zero()) return true;
  const ReducedBasis& basis = I.groebner(MonomialOrder::grevlex(), &b);
  RingPtr ext = extend_ring(I.ring(), kFreshVar, VarKind::Polynomial);
  std::vector<Poly> gens;
  gens.reserve(basis.polys.size() + 1);
  for (const auto& g : basis.polys) gens.push_back(extend_poly(g, ext));
  Poly t = Poly::variable(ext, ext->arity() - 1);
  Poly cleared = clear_denominators(f).first;
  gens.push_back(Poly::constant(ext, Scalar(1)) - t * extend_poly(cleared, ext));
  auto gb = gb_raw(ext, gens, MonomialOrder::grevlex(), b);
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& vars, StepBudget* budget) {
  StepBudget local;
  StepBudget& b = ensure(budget, local);
  if (vars.empty()) return I;
  const ReducedBasis& basis = I.groebner(MonomialOrder::grevlex(), &b);
  return Ideal(I.ring(), eliminate_raw(I.ring(), basis.polys, vars, b));
}

Ideal saturate(const Ideal& I, const Poly& f, StepBudget* budget) {
  require_same_ring(I.ring(), f.ring(), "saturate");
  StepBudget local;
  StepBudget& b = ensure(budget, local);
  const ReducedBasis& basis = I.groebner(MonomialOrder::grevlex(), &b);
  Poly cleared = clear_denominators(f).first;
  return Ideal(I.ring(), saturate_raw(I.ring(), basis.polys, cleared, b));
}

Ideal intersect(const Ideal& I, const Ideal& J, StepBudget* budget) {
  require_same_ring(I.ring(), J.ring(), "intersect");
  StepBudget local;
  StepBudget& b = ensure(budget, local);
  const ReducedBasis& bi = I.groebner(MonomialOrder::grevlex(), &b);
  const ReducedBasis& bj = J.groebner(MonomialOrder::grevlex(), &b);

  RingPtr ext = extend_ring(I.ring(), kFreshVar, VarKind::Polynomial);
  Poly t = Poly::variable(ext, ext->arity() - 1);
  Poly one_minus_t = Poly::constant(ext, Scalar(1)) - t;
  std::vector<Poly> gens;
  gens.reserve(bi.polys.size() + bj.polys.size());
  for (const auto& g : bi.polys) gens.push_back(t * extend_poly(g, ext));
  for (const auto& g : bj.polys) gens.push_back(one_minus_t * extend_poly(g, ext));
  auto elim = eliminate_raw(ext, gens, {ext->arity() - 1}, b);
  std::vector<Poly> out;
  out.reserve(elim.size());
  for (const auto& g : elim) out.push_back(restrict_poly(g, I.ring()));
  return Ideal(I.ring(), std::move(out));
}

Ideal ideal_sum(const Ideal& I, const std::vector<Poly>& more) {
  std::vector<Poly> gens = I.generators();
  for (const auto& g : more) {
    require_same_ring(g.ring(), I.ring(), "ideal_sum");
    gens.push_back(g);
  }
  return Ideal(I.ring(), std::move(gens));
}

} // namespace pdme
