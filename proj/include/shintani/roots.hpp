#pragma once

// Simultaneous complex root refinement for monic squarefree rational
// polynomials: Aberth-Ehrlich iteration in double precision for the initial
// cluster, then per-root Newton polishing at the requested GMP precision.

#include "shintani/numeric.hpp"
#include "shintani/poly.hpp"

#include <vector>

namespace shintani {

// All complex roots at the requested precision, ordered: real roots ascending
// first, then complex-conjugate pairs (positive imaginary member first)
// sorted by (real part, imaginary part). The real count is certified by a
// Sturm chain; a residual check guards the polished values.
// Throws precision_error when residuals fail to reach ~2^(-0.8 bits).
std::vector<Cx> polynomial_roots(const Polynomial& p, int bits);

// Re-polish previously computed roots at a higher precision. Root identity
// and order are preserved (Newton is a contraction near simple roots).
std::vector<Cx> refine_roots(const Polynomial& p, const std::vector<Cx>& roots, int bits);

} // namespace shintani
