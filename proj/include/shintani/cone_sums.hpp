#pragma once

// Lattice points of Q-closed cones and the specialized cone zeta sums
// S(I,Q,k) = sgn(I) sum_{x in C_I^Q cap Z^g - 0} N_w(x)^-(k+1).
//
// Truncation is by generator-coordinate depth: every lattice point of the
// closed cone decomposes uniquely as x0 + sum n_i alpha_i with x0 in the
// half-open cell R_I and n_i >= 0, and the sum runs over 0 <= n_i <= N.

#include "shintani/cones.hpp"
#include "shintani/field.hpp"

#include <optional>

namespace shintani {

struct ConeSumConfig {
    long depth = 64;          // max generator coordinate N
    bool refine = true;       // also evaluate at 2N for the error estimate
    int precision_bits = 128; // accumulator precision
    bool exact_partial = false;

    ConeSumConfig() = default;
    ConeSumConfig(long N, bool refine_, int bits) : depth(N), refine(refine_), precision_bits(bits) {}
};

struct ConeSumResult {
    Real value;           // sgn(I) * truncated sum at depth N
    Real err_estimate;    // |S_2N - S_N| when refined, else outer-shell mass
    long points_used = 0; // lattice points included at depth N
    std::optional<Rat> exact_partial;
};

// All points of C_I^Q cap Z^g - {0} within depth N, in deterministic order
// (lexicographic in (n_1, ..., n_g), then cell-point index). Degenerate
// cones yield the empty list.
std::vector<Vec> enumerate_cone_points(const Cone& cone, const Mat& Q, long depth);

// Cone zeta sum at s = k+1 for the norm form of an ideal basis. N_w is
// computed exactly per point; only the reciprocal power is floated.
// A norm-zero point inside the closure is a hard error (the cone would not
// be Q-admissible).
ConeSumResult cone_zeta_sum(const IdealBasis& a, const Cone& cone, long k,
                            const ConeSumConfig& cfg);

// Truncated psi_{d,I}^Q(y) = sgn(I) sum <x,y>^-(g+d) over the same point
// set; exposes the homogeneity psi(lambda y) = lambda^-(g+d) psi(y) for
// tests. y is a complex vector with Re<alpha_i, y> > 0 expected.
Cx psi_truncated(const Cone& cone, const Mat& Q, long d, const std::vector<Cx>& y, long depth,
                 int precision_bits);

} // namespace shintani
