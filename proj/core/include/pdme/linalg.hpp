#pragma once

#include <vector>

#include "pdme/scalar.hpp"

namespace pdme {

using ScalarRow = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarRow>;

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(ScalarMatrix& m);

/// Basis of the right nullspace of m (rows of the result are the basis
/// vectors), in reduced echelon form over the free variables.
ScalarMatrix nullspace(ScalarMatrix m, std::size_t cols);

} // namespace pdme
