#pragma once

// Shared fixtures and generators for the test suites: the four desk fields
// and deterministic random rational/integer data.

#include "shintani/exact.hpp"
#include "shintani/field.hpp"
#include "shintani/poly.hpp"

#include <random>

namespace testsupport {

using namespace shintani;

inline Polynomial poly_i(std::initializer_list<long> coeffs) {
    return Polynomial::from_int_coeffs(std::vector<long>(coeffs));
}

// Z[phi], phi^2 = phi + 1, basis (1, phi).
inline IdealBasis golden_ideal(int bits = 128) {
    NumberField F = build_field(poly_i({-1, -1, 1}), bits);
    return IdealBasis(F, Mat::identity(2));
}

// Z[i], basis (1, i).
inline IdealBasis gauss_ideal(int bits = 128) {
    NumberField F = build_field(poly_i({1, 0, 1}), bits);
    return IdealBasis(F, Mat::identity(2));
}

// Z[sqrt2], basis (1, sqrt2).
inline IdealBasis sqrt2_ideal(int bits = 128) {
    NumberField F = build_field(poly_i({-2, 0, 1}), bits);
    return IdealBasis(F, Mat::identity(2));
}

// Z[eta], eta = 2cos(2pi/7), the ring of integers of the totally real
// cubic subfield of Q(zeta_7).
inline IdealBasis cyclo7_ideal(int bits = 128) {
    NumberField F = build_field(poly_i({-1, -2, 1, 1}), bits);
    return IdealBasis(F, Mat::identity(3));
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Rat rational(long num_bound = 10, long den_bound = 6) {
        long n = integer(-num_bound, num_bound);
        long d = integer(1, den_bound);
        Rat q(n, d);
        q.canonicalize();
        return q;
    }

    Vec int_vector(int g, long bound, bool nonzero = true) {
        while (true) {
            Vec v(static_cast<size_t>(g));
            for (auto& x : v) x = integer(-bound, bound);
            if (!nonzero || !is_zero(v)) return v;
        }
    }

    Vec rat_vector(int g, long bound = 8, bool nonzero = true) {
        while (true) {
            Vec v(static_cast<size_t>(g));
            for (auto& x : v) x = rational(bound);
            if (!nonzero || !is_zero(v)) return v;
        }
    }

    Mat random_invertible(int g, long bound = 5) {
        while (true) {
            Mat M(g);
            for (int i = 0; i < g; ++i)
                for (int j = 0; j < g; ++j) M(i, j) = rational(bound, 3);
            if (det(M) != 0) return M;
        }
    }

    // Random SL_g(Z) element as a bounded word in elementary matrices.
    Mat random_slg(int g, int word_len = 6, long entry_bound = 3) {
        Mat M = Mat::identity(g);
        for (int w = 0; w < word_len; ++w) {
            int i = static_cast<int>(integer(0, g - 1));
            int j = static_cast<int>(integer(0, g - 1));
            if (i == j) continue;
            Mat E = Mat::identity(g);
            E(i, j) = integer(-entry_bound, entry_bound);
            M = M * E;
        }
        return M;
    }

    // Random irreducible monic integer polynomial of the given degree with a
    // nonzero constant term (so the companion matrix is invertible).
    Polynomial random_irreducible(int degree, long bound = 4) {
        while (true) {
            std::vector<Rat> c(static_cast<size_t>(degree) + 1);
            for (int i = 0; i < degree; ++i) c[static_cast<size_t>(i)] = integer(-bound, bound);
            c[static_cast<size_t>(degree)] = 1;
            Polynomial p(std::move(c));
            if (p.coeff(0) == 0) continue;
            if (is_irreducible(p) == Irreducibility::Yes) return p;
        }
    }

    Mat random_irreducible_companion(int g, long bound = 4) {
        Polynomial f = random_irreducible(g, bound);
        Mat C(g);
        for (int i = 0; i + 1 < g; ++i) C(i + 1, i) = 1;
        for (int i = 0; i < g; ++i) C(i, g - 1) = -f.coeff(i);
        return C;
    }
};

} // namespace testsupport
