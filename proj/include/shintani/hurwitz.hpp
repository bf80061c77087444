#pragma once

// Closed-form simplex integrals (the Hurwitz / Feynman parametrization
// formula), Q-admissibility of generator tuples, and the eigen-simplex
// weights that turn psi-cocycle values into norm sums.
//
// The production path never integrates: the closed forms ship, and the
// adaptive simplex quadrature here exists to check them in tests.

#include "shintani/cones.hpp"
#include "shintani/field.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace shintani {

// I is Q-admissible iff the norm form does not vanish on the closed simplex
// spanned by the generators; equivalently, for every embedding the convex
// hull of the pairings <alpha_j, w^(i)> misses 0. Real embeddings reduce to
// a uniform sign condition; complex ones to a planar hull test with margin
// and precision escalation. Indecision at the precision cap throws.
bool is_q_admissible(const IdealBasis& a, const Cone& cone);

// Eigenvectors of Q^T scaled into V_I (one per embedding, in the field's
// embedding order), their duals, and det(xi).
struct EigenSimplex {
    std::vector<std::vector<Cx>> xi;      // xi[i] = mu_i w^(i)
    std::vector<std::vector<Cx>> xi_dual; // <xi_dual[i], xi[j]> = delta_ij
    Cx det_xi;
};

// Builds the scaled eigen system; throws domain_error when I is not
// Q-admissible (no scaling can move the eigenvectors into V_I).
EigenSimplex make_eigen_simplex(const IdealBasis& a, const Cone& cone, int bits = 0);

// det(xi) / prod_i <x, xi_i>^(k_i + 1) for any complex-field-like scalar C
// (exact Gaussian rationals in tests, Cx in production). Throws on a
// vanishing pairing (pole on the simplex).
template <class C>
C hurwitz_rational_core(const std::vector<std::vector<C>>& xi, const std::vector<C>& x,
                        const std::vector<long>& kvec);

// Full weight  kvec! / (g + |kvec| - 1)! * hurwitz_rational_core.
Cx hurwitz_weight(const std::vector<Cx>& x, const EigenSimplex& simplex,
                  const std::vector<long>& kvec);

// (k!)^g / (g + kg - 1)! * detW  -- the scalar relating a cone zeta sum to
// its integrated cocycle value.
Cx intq_prefactor(const IdealBasis& a, long k, int bits = 0);

// (k!)^g / (g + kg - 1)! * detW / N_w(x)^(k+1), with N_w exact. Requires a
// Q-admissible full-dimensional cone and x in C_I^Q - {0}.
Cx intq_eigenweight(const IdealBasis& a, const Cone& cone, const Vec& x, long k);

// Adaptive quadrature of f * omega over the simplex with the given complex
// vertices: pulls back to det(Xi) * integral of f(Xi t) over the standard
// simplex. f must be homogeneous of degree -g and finite on the simplex.
// g in {2, 3}. Throws error() when refinement fails to converge.
using Integrand = std::function<std::complex<double>(const std::vector<std::complex<double>>&)>;
std::complex<double> simplex_quadrature_oracle(const Integrand& f,
                                               const std::vector<std::vector<std::complex<double>>>& vertices,
                                               double rel_tol = 1e-9);

// --- template implementation ---

template <class C>
C det_small(const std::vector<std::vector<C>>& cols) {
    size_t n = cols.size();
    if (n == 1) return cols[0][0];
    if (n == 2) return cols[0][0] * cols[1][1] - cols[1][0] * cols[0][1];
    if (n == 3)
        return cols[0][0] * (cols[1][1] * cols[2][2] - cols[2][1] * cols[1][2]) -
               cols[1][0] * (cols[0][1] * cols[2][2] - cols[2][1] * cols[0][2]) +
               cols[2][0] * (cols[0][1] * cols[1][2] - cols[1][1] * cols[0][2]);
    throw domain_error("det_small: supported sizes are 1..3");
}

template <class C>
C hurwitz_rational_core(const std::vector<std::vector<C>>& xi, const std::vector<C>& x,
                        const std::vector<long>& kvec) {
    size_t g = xi.size();
    if (x.size() != g || kvec.size() != g)
        throw domain_error("hurwitz_rational_core: size mismatch");
    C num = det_small(xi);
    C den = x[0]; // overwritten below; placeholder of the right type
    bool first = true;
    for (size_t i = 0; i < g; ++i) {
        C pairing = x[0] * xi[i][0];
        for (size_t j = 1; j < g; ++j) pairing = pairing + x[j] * xi[i][j];
        if (pairing.is_zero())
            throw domain_error("hurwitz_rational_core: <x, xi_i> vanishes (pole)");
        for (long e = 0; e < kvec[i] + 1; ++e) {
            if (first) { den = pairing; first = false; }
            else den = den * pairing;
        }
    }
    return num / den;
}

} // namespace shintani
