#include "pdme/ring.hpp"

#include "pdme/errors.hpp"

namespace pdme {

RingSpec::RingSpec(std::vector<std::pair<std::string, VarKind>> vars)
    : vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].first.empty())
      throw ValidationError("ring variable with empty name");
    auto [it, fresh] = by_name_.emplace(vars_[i].first, i);
    (void)it;
    if (!fresh)
      throw ValidationError("duplicate ring variable '" + vars_[i].first + "'");
  }
}

RingPtr RingSpec::make(std::vector<std::pair<std::string, VarKind>> vars) {
  return RingPtr(new RingSpec(std::move(vars)));
}

std::optional<std::size_t> RingSpec::index(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool RingSpec::has_invertible() const {
  for (const auto& [n, k] : vars_)
    if (k == VarKind::Invertible) return true;
  return false;
}

std::vector<std::size_t> RingSpec::invertible_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].second == VarKind::Invertible) out.push_back(i);
  return out;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* context) {
  if (!same_ring(a, b))
    throw RingMismatchError(std::string("ring mismatch in ") + context);
}

} // namespace pdme
