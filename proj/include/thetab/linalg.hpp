#pragma once

#include <vector>

#include "thetab/rational.hpp"

namespace thetab {

using RatMatrix = std::vector<std::vector<Rational>>;
using RatVector = std::vector<Rational>;

// Unique exact solution of A x = b via Bareiss fraction-free elimination
// (rows are cleared to integers first). Throws SingularMatrix when A is
// not invertible, ShapeMismatch on non-square input.
RatVector solve_linear(const RatMatrix& A, const RatVector& b);

// Exact rank via fraction-free row echelon.
int rank(const RatMatrix& A);

// Indices of a maximal linearly independent subset of the rows, chosen
// greedily in row order.
std::vector<int> independent_rows(const RatMatrix& A);

}  // namespace thetab
