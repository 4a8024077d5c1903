#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pdme {

/// A polynomial variable admits exponents >= 0; an invertible one is a
/// Laurent variable and admits any integer exponent.
enum class VarKind { Polynomial, Invertible };

/// Exponent vector over a ring's variable list. Entry i is the exponent
/// of variable i; negative entries are legal only on invertible variables.
using Monomial = std::vector<std::int64_t>;

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// An ordered list of named variables with kinds. The order is fixed for
/// the life of the ring; monomial orders and exponent vectors refer to it.
class RingSpec {
public:
  static RingPtr make(std::vector<std::pair<std::string, VarKind>> vars);

  std::size_t arity() const { return vars_.size(); }
  const std::string& name(std::size_t i) const { return vars_[i].first; }
  VarKind kind(std::size_t i) const { return vars_[i].second; }
  const std::vector<std::pair<std::string, VarKind>>& variables() const { return vars_; }

  std::optional<std::size_t> index(std::string_view name) const;

  bool has_invertible() const;
  std::vector<std::size_t> invertible_indices() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) { return a.vars_ == b.vars_; }
  friend bool operator!=(const RingSpec& a, const RingSpec& b) { return !(a == b); }

private:
  explicit RingSpec(std::vector<std::pair<std::string, VarKind>> vars);

  std::vector<std::pair<std::string, VarKind>> vars_;
  std::unordered_map<std::string, std::size_t> by_name_;
};

/// True when the two pointers denote structurally equal rings.
bool same_ring(const RingPtr& a, const RingPtr& b);

/// Throws RingMismatchError unless same_ring(a, b).
void require_same_ring(const RingPtr& a, const RingPtr& b, const char* context);

} // namespace pdme
