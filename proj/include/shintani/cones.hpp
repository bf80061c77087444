#pragma once

// Rational open cones and their exponential Q-closures.
//
// For irreducible Q, membership in C_I^Q = { x : exp(eps Q) x in C_I for all
// small eps > 0 } is decided exactly by a lexicographic sign test: for each
// dual vector v of the cone, the sign of the first nonzero entry of
// (<x, v>, <x, Q^T v>, ..., <x, (Q^T)^(g-1) v>) tells on which side of the
// perturbed hyperplane x lands. Irreducibility forces a nonzero entry within
// g steps for x != 0, so the test has fixed size and needs no delta search.

#include "shintani/exact.hpp"
#include "shintani/poly.hpp"

#include <optional>
#include <vector>

namespace shintani {

class Cone {
public:
    // Generators may be dependent; each must be nonzero, and there are at
    // most g of them in ambient dimension g.
    explicit Cone(std::vector<Vec> generators);

    int ambient_dim() const { return g_; }
    int count() const { return static_cast<int>(gens_.size()); }
    const std::vector<Vec>& generators() const { return gens_; }
    // Positive-integer rescalings of the generators (same cone).
    const std::vector<Vec>& primitive_generators() const { return prim_; }

    // sgn det(alpha_1, ..., alpha_g); requires count() == ambient_dim().
    int sign() const;
    bool full_dimensional() const; // count == g and independent

private:
    int g_;
    std::vector<Vec> gens_, prim_;
};

// Dual data of a simplicial cone: alpha*_j in span(I) with
// <alpha_i, alpha*_j> = delta_ij, and beta*_j an exact basis of the
// orthogonal complement. Errors out on dependent generators.
struct DualDecomposition {
    std::vector<Vec> alpha_star;
    std::vector<Vec> beta_star;
};
DualDecomposition dual_decomposition(const Cone& cone);

// Sign of the first nonzero of (<x, (Q^T)^j v>)_{j=0..g-1}; 0 iff x = 0.
// Throws if all g values vanish for x != 0 (impossible for irreducible Q).
int lex_sign(const Vec& x, const Vec& v, const Mat& Q);

class QClosureTester {
public:
    // certify = true checks irreducibility of char_poly(Q) (callers holding a
    // Q from an IdealBasis already have the certificate).
    QClosureTester(Cone cone, Mat Q, bool certify = true);

    const Cone& cone() const { return cone_; }
    const Mat& Q() const { return Q_; }

    // x in C_I^Q, exact. For r < g independent generators this is false
    // everywhere except that the empty cone (r = 0) contains only 0.
    bool contains(const Vec& x) const;

private:
    int lex_from_table(const Vec& x, const std::vector<Vec>& table) const;

    Cone cone_;
    Mat Q_;
    // one table per dual vector: v, Q^T v, ..., (Q^T)^(g-1) v
    std::vector<std::vector<Vec>> alpha_tables_, beta_tables_;
};

inline bool in_q_closure(const Vec& x, const QClosureTester& tester) {
    return tester.contains(x);
}

// Alternating sum  sum_i (-1)^i sgn(J^(i)) 1_{C_{J^(i)}^Q}(x)  over the g+1
// facets of J; exactly 0 whenever some y has <alpha_i, y> > 0 for all i.
long cocycle_defect(const std::vector<Vec>& J, const Mat& Q, const Vec& x);

// Exact rational feasibility for <alpha_i, y> >= 1 (Fourier-Motzkin);
// a witness certifies the cocycle relation's hypothesis.
std::optional<Vec> positivity_witness(const std::vector<Vec>& vectors);

// Test oracle implementing the definition directly: evaluate exp(eps Q) x by
// a truncated series over a decreasing eps schedule and solve the generator
// system numerically for strict membership. nullopt when the verdict does
// not stabilize. Requires a full-dimensional cone.
std::optional<bool> q_closure_numeric_oracle(const Vec& x, const Cone& cone, const Mat& Q,
                                             const std::vector<double>& eps_schedule = {
                                                 1e-2, 1e-3, 1e-4, 1e-5, 1e-6});

} // namespace shintani
