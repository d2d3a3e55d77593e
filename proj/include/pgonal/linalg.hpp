#pragma once

#include <optional>
#include <vector>

#include "pgonal/rational.hpp"

namespace pgonal {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>; // row-major

/// Solve A x = b exactly (A need not be square). Returns one solution or
/// nullopt when the system is inconsistent.
std::optional<QVec> solve_linear(QMat a, QVec b);

/// First nonzero kernel vector of A (columns = unknowns), or nullopt when A
/// has full column rank. The vector is scaled to have its first nonzero
/// entry equal to 1.
std::optional<QVec> kernel_vector(QMat a);

std::optional<QMat> invert(QMat a);

Rational determinant(QMat a);

} // namespace pgonal
