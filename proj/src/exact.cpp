#include "shintani/exact.hpp"

#include <sstream>

namespace shintani {

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec operator*(const Rat& s, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

Vec operator-(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

bool operator==(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec primitive_integer(const Vec& v) {
    if (is_zero(v)) throw domain_error("primitive_integer: zero vector");
    Int den(1);
    for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Int content(0);
    Vec scaled(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        scaled[i] = v[i] * Rat(den);
        scaled[i].canonicalize();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled[i].get_num_mpz_t());
    }
    Vec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        r[i] = scaled[i] / Rat(content);
        r[i].canonicalize();
    }
    return r;
}

std::string to_string(const Vec& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

Mat::Mat(int n, std::initializer_list<Rat> entries) : Mat(n) {
    if (static_cast<int>(entries.size()) != n * n)
        throw domain_error("Mat: entry count mismatch");
    int k = 0;
    for (const auto& e : entries) a_[k++] = e;
}

Mat Mat::identity(int n) {
    Mat I(n);
    for (int i = 0; i < n; ++i) I(i, i) = 1;
    return I;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
    int n = static_cast<int>(cols.size());
    Mat M(n);
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(cols[j].size()) != n)
            throw domain_error("Mat::from_columns: not square");
        for (int i = 0; i < n; ++i) M(i, j) = cols[j][i];
    }
    return M;
}

Vec Mat::column(int j) const {
    Vec v(n_);
    for (int i = 0; i < n_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(n_);
    for (int j = 0; j < n_; ++j) v[j] = (*this)(i, j);
    return v;
}

Mat Mat::transpose() const {
    Mat T(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) T(j, i) = (*this)(i, j);
    return T;
}

Mat operator*(const Mat& A, const Mat& B) {
    int n = A.size();
    Mat C(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rat& aik = A(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) C(i, j) += aik * B(k, j);
        }
    return C;
}

Vec operator*(const Mat& A, const Vec& x) {
    int n = A.size();
    Vec y(n, Rat(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) y[i] += A(i, j) * x[j];
    return y;
}

Mat operator+(const Mat& A, const Mat& B) {
    int n = A.size();
    Mat C(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C(i, j) = A(i, j) + B(i, j);
    return C;
}

Mat operator-(const Mat& A, const Mat& B) {
    int n = A.size();
    Mat C(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C(i, j) = A(i, j) - B(i, j);
    return C;
}

Mat operator*(const Rat& s, const Mat& A) {
    int n = A.size();
    Mat C(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) C(i, j) = s * A(i, j);
    return C;
}

bool operator==(const Mat& A, const Mat& B) {
    if (A.size() != B.size()) return false;
    for (int i = 0; i < A.size(); ++i)
        for (int j = 0; j < A.size(); ++j)
            if (A(i, j) != B(i, j)) return false;
    return true;
}

Rat Mat::trace() const {
    Rat t(0);
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

Rat det(const Mat& M) {
    int n = M.size();
    Mat A = M;
    Rat d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (A(r, col) != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) swap(A(piv, j), A(col, j));
            d = -d;
        }
        d *= A(col, col);
        Rat inv = 1 / A(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (A(r, col) == 0) continue;
            Rat f = A(r, col) * inv;
            for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
        }
    }
    return d;
}

int det_sign(const Mat& M) {
    Rat d = det(M);
    return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

namespace {

// Gauss-Jordan on [A | rhs...]; returns rank, leaves reduced system in place.
int reduce(std::vector<std::vector<Rat>>& rows, int ncols, std::vector<int>& pivot_cols) {
    int r = 0;
    for (int c = 0; c < ncols && r < static_cast<int>(rows.size()); ++c) {
        int piv = -1;
        for (int i = r; i < static_cast<int>(rows.size()); ++i)
            if (rows[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[r]);
        Rat inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (size_t j = 0; j < rows[i].size(); ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    return r;
}

} // namespace

std::optional<Vec> solve(const Mat& A, const Vec& b) {
    int n = A.size();
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = A(i, j);
        rows[i][n] = b[i];
    }
    std::vector<int> piv;
    if (reduce(rows, n, piv) < n) return std::nullopt;
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = rows[i][n];
    return x;
}

std::optional<Mat> inverse(const Mat& A) {
    int n = A.size();
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) rows[i][j] = A(i, j);
        rows[i][n + i] = 1;
    }
    std::vector<int> piv;
    if (reduce(rows, n, piv) < n) return std::nullopt;
    Mat Inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) Inv(i, j) = rows[i][n + j];
    return Inv;
}

int rank(const std::vector<Vec>& vectors, int dim) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& v : vectors) rows.emplace_back(v.begin(), v.end());
    std::vector<int> piv;
    return reduce(rows, dim, piv);
}

std::vector<Vec> kernel(const Mat& M) {
    int n = M.size();
    std::vector<std::vector<Rat>> rows(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = M(i, j);
    std::vector<int> piv;
    reduce(rows, n, piv);
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, Rat(0));
        v[free] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> parallelepiped_lattice_points(const std::vector<Vec>& generators) {
    int g = static_cast<int>(generators.size());
    if (g == 0) throw domain_error("parallelepiped_lattice_points: no generators");
    for (const auto& v : generators) {
        if (static_cast<int>(v.size()) != g)
            throw domain_error("parallelepiped_lattice_points: generator dimension mismatch");
        for (const auto& x : v)
            if (x.get_den() != 1)
                throw domain_error("parallelepiped_lattice_points: generators must be integral");
    }
    Mat G = Mat::from_columns(generators);
    auto Ginv = inverse(G);
    if (!Ginv) throw domain_error("parallelepiped_lattice_points: dependent generators");

    // Bounding box of { sum t_i g_i : t in [0,1]^g } per coordinate.
    std::vector<long> lo(g, 0), hi(g, 0);
    for (int c = 0; c < g; ++c) {
        Rat mn(0), mx(0);
        for (int i = 0; i < g; ++i) {
            const Rat& e = G(c, i);
            if (e < 0) mn += e;
            if (e > 0) mx += e;
        }
        // integral entries: box corners are integers
        lo[c] = mpz_get_si(mn.get_num_mpz_t());
        hi[c] = mpz_get_si(mx.get_num_mpz_t());
    }

    std::vector<Vec> pts;
    Vec z(g, Rat(0));
    std::vector<long> cur(g);
    for (int i = 0; i < g; ++i) cur[i] = lo[i];
    while (true) {
        for (int i = 0; i < g; ++i) z[i] = cur[i];
        Vec t = *Ginv * z;
        bool inside = true;
        for (const auto& ti : t)
            if (ti < 0 || ti >= 1) { inside = false; break; }
        if (inside) pts.push_back(z);
        int c = g - 1;
        while (c >= 0 && cur[c] == hi[c]) { cur[c] = lo[c]; --c; }
        if (c < 0) break;
        ++cur[c];
    }
    return pts;
}

} // namespace shintani
