#pragma once

#include <vector>

#include "pdme/groebner.hpp"
#include "pdme/poly.hpp"

namespace pdme {

/// Generating set of the syzygy module of a row (a_1, ..., a_r): every
/// generator v satisfies sum_i v_i * a_i = 0, and the generators generate
/// the full module of such relations.
struct SyzygyBasis {
  std::vector<std::vector<Poly>> generators;
};

/// Schreyer-style syzygy computation: a cofactor-tracked Groebner basis
/// of the row, S-pair syzygies of the basis, and the change-of-basis
/// relations, combined back to relations on the original row.
SyzygyBasis syzygies(const std::vector<Poly>& row, StepBudget* budget = nullptr);

} // namespace pdme
