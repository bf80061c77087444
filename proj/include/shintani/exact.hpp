#pragma once

// Exact rational vectors and dense square matrices over GMP rationals.
// Everything here is immutable-after-construction value types; sizes are the
// ambient degree g (tiny), so plain Gaussian elimination is used throughout.

#include "shintani/errors.hpp"
#include "shintani/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace shintani {

using Vec = std::vector<Rat>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& a);
Vec operator-(const Vec& a);
bool operator==(const Vec& a, const Vec& b);

// Scalar product <x, y> = x^T y.
Rat dot(const Vec& a, const Vec& b);

// Rescale a nonzero rational vector to primitive integer form (clear
// denominators, divide by content, keep direction).
Vec primitive_integer(const Vec& v);

std::string to_string(const Vec& v);

class Mat {
public:
    Mat() = default;
    explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n) * n, Rat(0)) {}
    Mat(int n, std::initializer_list<Rat> entries);

    static Mat identity(int n);
    // Matrix whose columns are the given vectors.
    static Mat from_columns(const std::vector<Vec>& cols);

    int size() const { return n_; }
    Rat& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Rat& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Vec column(int j) const;
    Vec row(int i) const;
    Mat transpose() const;

    friend Mat operator*(const Mat& A, const Mat& B);
    friend Vec operator*(const Mat& A, const Vec& x);
    friend Mat operator+(const Mat& A, const Mat& B);
    friend Mat operator-(const Mat& A, const Mat& B);
    friend Mat operator*(const Rat& s, const Mat& A);
    friend bool operator==(const Mat& A, const Mat& B);

    Rat trace() const;

private:
    int n_ = 0;
    std::vector<Rat> a_;
};

Rat det(const Mat& M);
int det_sign(const Mat& M);

// Solve Ax = b; nullopt when A is singular.
std::optional<Vec> solve(const Mat& A, const Vec& b);
std::optional<Mat> inverse(const Mat& A);

int rank(const std::vector<Vec>& vectors, int dim);

// Basis of the kernel of x |-> Mx (right null space), exact.
std::vector<Vec> kernel(const Mat& M);

// Integer points of the half-open parallelepiped sum_i [0,1) g_i spanned by
// linearly independent integer generators: bounding-box scan filtered by
// exact barycentric coordinates. The count always equals |det G|.
std::vector<Vec> parallelepiped_lattice_points(const std::vector<Vec>& generators);

} // namespace shintani
