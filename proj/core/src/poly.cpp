#include "pdme/poly.hpp"

#include <algorithm>
#include <sstream>

#include "pdme/errors.hpp"
#include "pdme/order.hpp"

namespace pdme {

Poly Poly::zero(RingPtr ring) {
  Poly p;
  p.ring_ = std::move(ring);
  return p;
}

Poly Poly::constant(RingPtr ring, Scalar c) {
  Poly p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->arity(), 0), std::move(c));
  return p;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->arity()) throw ValidationError("variable index out of range");
  Poly p = zero(std::move(ring));
  Monomial m(p.ring_->arity(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Scalar(1));
  return p;
}

Poly Poly::monomial(RingPtr ring, Monomial exps, Scalar c) {
  if (exps.size() != ring->arity())
    throw ValidationError("exponent vector arity mismatch");
  Poly p = zero(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
  p.check_exponents();
  return p;
}

void Poly::check_exponents() const {
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] < 0 && ring_->kind(i) != VarKind::Invertible)
        throw ValidationError("negative exponent on polynomial variable '" +
                              ring_->name(i) + "'");
}

bool Poly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && mono_is_constant(terms_.begin()->first));
}

Scalar Poly::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (!is_constant()) throw ValidationError("polynomial is not constant");
  return terms_.begin()->second;
}

bool Poly::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const Monomial& m = terms_.begin()->first;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0 && ring_->kind(i) != VarKind::Invertible) return false;
  return true;
}

Poly Poly::unit_inverse() const {
  if (!is_unit_monomial())
    throw ValidationError("inverse of a non-unit polynomial");
  const auto& [m, c] = *terms_.begin();
  Monomial inv(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
  return monomial(ring_, std::move(inv), c.inverse());
}

std::int64_t Poly::degree() const {
  std::int64_t d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_abs_degree(m));
  return d;
}

void Poly::insert_term(Monomial m, Scalar c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), std::move(c));
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = zero(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) { *this = o; return *this; }
  require_same_ring(ring_, o.ring_, "poly addition");
  for (const auto& [m, c] : o.terms_) insert_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) { *this = -o; return *this; }
  require_same_ring(ring_, o.ring_, "poly subtraction");
  for (const auto& [m, c] : o.terms_) insert_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring(), "poly multiplication");
  Poly out = Poly::zero(a.ring());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Scalar c = ca * cb;
      out.insert_term(mono_mul(ma, mb), std::move(c));
    }
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out = zero(ring_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = constant(ring_, Scalar(1));
  Poly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t index) const {
  if (index >= ring_->arity()) throw ValidationError("unknown variable index");
  Poly out = zero(ring_);
  for (const auto& [m, c] : terms_) {
    if (m[index] == 0) continue;
    Monomial d = m;
    d[index] -= 1;
    out.insert_term(std::move(d), c * Scalar(static_cast<long>(m[index])));
  }
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  const MonomialOrder ord = MonomialOrder::grevlex();
  std::sort(sorted.begin(), sorted.end(), [&](auto* x, auto* y) {
    return cmp_monomials(x->first, y->first, ord) > 0;
  });

  std::ostringstream os;
  bool first = true;
  for (auto* t : sorted) {
    const auto& [m, c] = *t;
    Scalar a = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->name(i);
      if (m[i] != 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) {
      os << a.to_string();
    } else if (a.is_one()) {
      os << mono;
    } else {
      os << a.to_string() << "*" << mono;
    }
  }
  return os.str();
}

Poly substitute(const Poly& f, const RingPtr& target, const std::vector<Poly>& images) {
  if (images.size() != f.ring()->arity())
    throw ValidationError("substitution must assign every variable");
  for (const auto& img : images)
    require_same_ring(img.ring(), target, "substitution image");

  // Per-variable power cache; negative exponents go through the unit inverse.
  std::vector<std::map<std::int64_t, Poly>> powers(images.size());
  auto power = [&](std::size_t i, std::int64_t e) -> const Poly& {
    auto& cache = powers[i];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    Poly value;
    if (e >= 0) {
      value = images[i].pow(static_cast<std::uint64_t>(e));
    } else {
      if (!images[i].is_unit_monomial())
        throw ValidationError("negative power of variable '" + f.ring()->name(i) +
                              "' requires a unit image under substitution");
      value = images[i].unit_inverse().pow(static_cast<std::uint64_t>(-e));
    }
    return cache.emplace(e, std::move(value)).first->second;
  };

  Poly out = Poly::zero(target);
  for (const auto& [m, c] : f.terms()) {
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) term = term * power(i, m[i]);
    out += term;
  }
  return out;
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  return substitute(f, f.ring(), images);
}

Derivation Derivation::make(RingPtr ring, std::vector<Poly> values) {
  if (values.size() != ring->arity())
    throw ValidationError("derivation must assign a value to every variable");
  for (const auto& v : values)
    require_same_ring(v.ring(), ring, "derivation value");
  return Derivation{std::move(ring), std::move(values)};
}

Derivation Derivation::zero(RingPtr ring) {
  std::vector<Poly> values(ring->arity(), Poly::zero(ring));
  return Derivation{std::move(ring), std::move(values)};
}

bool Derivation::is_zero() const {
  for (const auto& v : values)
    if (!v.is_zero()) return false;
  return true;
}

Poly apply_derivation(const Derivation& d, const Poly& f) {
  require_same_ring(d.ring, f.ring(), "apply_derivation");
  Poly out = Poly::zero(f.ring());
  for (std::size_t i = 0; i < d.values.size(); ++i) {
    if (d.values[i].is_zero()) continue;
    out += f.derivative(i) * d.values[i];
  }
  return out;
}

Poly coeff_derivative(const Poly& f) { return Poly::zero(f.ring()); }

} // namespace pdme
