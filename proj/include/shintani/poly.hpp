#pragma once

// Univariate polynomials over the rationals: characteristic polynomials,
// irreducibility certification, real-root counting via Sturm chains.

#include "shintani/exact.hpp"

#include <vector>

namespace shintani {

enum class Irreducibility { Yes, No, Unknown };

class Polynomial {
public:
    Polynomial() = default;
    // Ascending coefficients c0 + c1 X + ... ; trailing zeros are trimmed.
    explicit Polynomial(std::vector<Rat> coeffs);

    static Polynomial from_int_coeffs(const std::vector<long>& coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool has_integer_coeffs() const;

    const Rat& coeff(int i) const { return c_[static_cast<size_t>(i)]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    Cx eval(const Cx& z, int bits) const;
    Polynomial derivative() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::vector<Rat> c_;
};

// Monic characteristic polynomial det(X I - M), exact (Faddeev-LeVerrier).
Polynomial char_poly(const Mat& M);

// Certify irreducibility over Q of a monic rational polynomial.
// Degrees 1-3 are decided completely by the rational root test; degree >= 4
// tries irreducibility mod small primes as a sufficient certificate and
// reports Unknown when no certificate is found within the prime budget.
Irreducibility is_irreducible(const Polynomial& p);

// Number of distinct real roots of a squarefree polynomial (Sturm chain).
int count_real_roots(const Polynomial& p);

// Power sums of the roots p_k = sum_i r_i^k for k = 0..count-1, exact via
// Newton's identities from a monic polynomial's coefficients.
std::vector<Rat> root_power_sums(const Polynomial& p, int count);

} // namespace shintani
