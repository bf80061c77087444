#include "shintani/cones.hpp"

#include "shintani/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace shintani {

Cone::Cone(std::vector<Vec> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw domain_error("Cone: need at least one generator");
    g_ = static_cast<int>(gens_[0].size());
    for (const auto& v : gens_) {
        if (static_cast<int>(v.size()) != g_) throw domain_error("Cone: dimension mismatch");
        if (is_zero(v)) throw domain_error("Cone: zero generator");
    }
    if (count() > g_) throw domain_error("Cone: more generators than ambient dimension");
    prim_.reserve(gens_.size());
    for (const auto& v : gens_) prim_.push_back(primitive_integer(v));
}

int Cone::sign() const {
    if (count() != g_) throw domain_error("Cone::sign: needs exactly g generators");
    return det_sign(Mat::from_columns(gens_));
}

bool Cone::full_dimensional() const { return count() == g_ && sign() != 0; }

DualDecomposition dual_decomposition(const Cone& cone) {
    int g = cone.ambient_dim();
    int r = cone.count();
    const auto& gens = cone.generators();
    if (rank(gens, g) != r)
        throw domain_error("dual_decomposition: dependent generators");

    DualDecomposition d;
    if (r == g) {
        // alpha* = columns of (A^T)^{-1}
        Mat A = Mat::from_columns(gens);
        Mat At_inv = *inverse(A.transpose());
        for (int j = 0; j < g; ++j) d.alpha_star.push_back(At_inv.column(j));
        return d;
    }

    // alpha*_j = sum_i (Gram^{-1})_{ij} alpha_i lies in span(I), dual there.
    Mat gram(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            gram(i, j) = dot(gens[static_cast<size_t>(i)], gens[static_cast<size_t>(j)]);
    Mat gram_inv = *inverse(gram);
    for (int j = 0; j < r; ++j) {
        Vec v(static_cast<size_t>(g), Rat(0));
        for (int i = 0; i < r; ++i) {
            const Rat& c = gram_inv(i, j);
            if (c == 0) continue;
            for (int k = 0; k < g; ++k)
                v[static_cast<size_t>(k)] += c * gens[static_cast<size_t>(i)][static_cast<size_t>(k)];
        }
        d.alpha_star.push_back(std::move(v));
    }

    // beta*: kernel of x -> (<alpha_i, x>)_i, padded to a g x g system.
    Mat M(g);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < g; ++k) M(i, k) = gens[static_cast<size_t>(i)][static_cast<size_t>(k)];
    d.beta_star = kernel(M);
    return d;
}

namespace {

std::vector<Vec> lex_table(const Vec& v, const Mat& Qt, int g) {
    std::vector<Vec> t;
    t.reserve(static_cast<size_t>(g));
    t.push_back(v);
    for (int j = 1; j < g; ++j) t.push_back(Qt * t.back());
    return t;
}

int sign_of(const Rat& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

} // namespace

int lex_sign(const Vec& x, const Vec& v, const Mat& Q) {
    if (is_zero(v)) throw domain_error("lex_sign: zero dual vector");
    int g = Q.size();
    Mat Qt = Q.transpose();
    Vec w = v;
    for (int j = 0; j < g; ++j) {
        int s = sign_of(dot(x, w));
        if (s != 0) return s;
        if (j + 1 < g) w = Qt * w;
    }
    if (!is_zero(x))
        throw error("lex_sign: all g pairings vanish for x != 0 (Q not irreducible?)");
    return 0;
}

QClosureTester::QClosureTester(Cone cone, Mat Q, bool certify)
    : cone_(std::move(cone)), Q_(std::move(Q)) {
    if (Q_.size() != cone_.ambient_dim())
        throw domain_error("QClosureTester: dimension mismatch");
    if (certify && is_irreducible(char_poly(Q_)) != Irreducibility::Yes)
        throw domain_error("QClosureTester: Q is not certified irreducible");
    DualDecomposition d = dual_decomposition(cone_);
    Mat Qt = Q_.transpose();
    int g = cone_.ambient_dim();
    for (const auto& v : d.alpha_star) alpha_tables_.push_back(lex_table(v, Qt, g));
    for (const auto& v : d.beta_star) beta_tables_.push_back(lex_table(v, Qt, g));
}

int QClosureTester::lex_from_table(const Vec& x, const std::vector<Vec>& table) const {
    for (const auto& w : table) {
        int s = sign_of(dot(x, w));
        if (s != 0) return s;
    }
    if (!is_zero(x))
        throw error("QClosureTester: lex test exhausted for x != 0 (Q not irreducible?)");
    return 0;
}

bool QClosureTester::contains(const Vec& x) const {
    for (const auto& t : alpha_tables_)
        if (lex_from_table(x, t) != 1) return false;
    for (const auto& t : beta_tables_)
        if (lex_from_table(x, t) != 0) return false;
    return true;
}

long cocycle_defect(const std::vector<Vec>& J, const Mat& Q, const Vec& x) {
    int g = Q.size();
    if (static_cast<int>(J.size()) != g + 1)
        throw domain_error("cocycle_defect: need g+1 vectors");
    if (is_zero(x)) throw domain_error("cocycle_defect: x must be nonzero");
    long total = 0;
    for (int i = 0; i <= g; ++i) {
        std::vector<Vec> face;
        for (int j = 0; j <= g; ++j)
            if (j != i) face.push_back(J[static_cast<size_t>(j)]);
        Cone c(face);
        int sgn = c.sign();
        if (sgn == 0) continue; // dependent facet contributes nothing
        QClosureTester tester(std::move(c), Q, /*certify=*/false);
        if (tester.contains(x)) total += (i % 2 == 0 ? sgn : -sgn);
    }
    return total;
}

namespace {

struct Constraint {
    Vec a; // <a, y> >= b
    Rat b;
};

// Fourier-Motzkin elimination; returns a satisfying point if one exists.
std::optional<Vec> fm_solve(std::vector<Constraint> cons, int nvars) {
    if (nvars == 0) {
        for (const auto& c : cons)
            if (c.b > 0) return std::nullopt; // 0 >= b with b > 0
        return Vec{};
    }
    int v = nvars - 1;
    std::vector<Constraint> lower, upper, rest;
    for (auto& c : cons) {
        Rat coef = c.a[static_cast<size_t>(v)];
        if (coef == 0) rest.push_back(c);
        else if (coef > 0) lower.push_back(c); // y_v bounded below
        else upper.push_back(c);
    }
    std::vector<Constraint> next = rest;
    for (const auto& lo : lower)
        for (const auto& up : upper) {
            Rat cl = lo.a[static_cast<size_t>(v)], cu = -up.a[static_cast<size_t>(v)];
            Constraint c;
            c.a = Vec(static_cast<size_t>(nvars), Rat(0));
            for (int j = 0; j < v; ++j)
                c.a[static_cast<size_t>(j)] =
                    cu * lo.a[static_cast<size_t>(j)] + cl * up.a[static_cast<size_t>(j)];
            c.b = cu * lo.b + cl * up.b;
            next.push_back(std::move(c));
        }
    auto tail = fm_solve(std::move(next), v);
    if (!tail) return std::nullopt;
    Vec y = *tail;
    y.resize(static_cast<size_t>(nvars), Rat(0));
    bool has_lo = false, has_up = false;
    Rat best_lo(0), best_up(0);
    auto partial = [&](const Constraint& c) {
        Rat s(0);
        for (int j = 0; j < v; ++j) s += c.a[static_cast<size_t>(j)] * y[static_cast<size_t>(j)];
        return s;
    };
    for (const auto& c : lower) {
        Rat bound = (c.b - partial(c)) / c.a[static_cast<size_t>(v)];
        if (!has_lo || bound > best_lo) { best_lo = bound; has_lo = true; }
    }
    for (const auto& c : upper) {
        Rat bound = (c.b - partial(c)) / c.a[static_cast<size_t>(v)];
        if (!has_up || bound < best_up) { best_up = bound; has_up = true; }
    }
    if (has_lo && has_up && best_lo > best_up) return std::nullopt;
    if (has_lo) y[static_cast<size_t>(v)] = has_up ? (best_lo + best_up) / 2 : best_lo;
    else if (has_up) y[static_cast<size_t>(v)] = best_up;
    y[static_cast<size_t>(v)].canonicalize();
    return y;
}

} // namespace

std::optional<Vec> positivity_witness(const std::vector<Vec>& vectors) {
    if (vectors.empty()) return std::nullopt;
    int g = static_cast<int>(vectors[0].size());
    std::vector<Constraint> cons;
    for (const auto& a : vectors) cons.push_back({a, Rat(1)});
    auto y = fm_solve(std::move(cons), g);
    if (!y) return std::nullopt;
    for (const auto& a : vectors)
        if (dot(a, *y) < 1) throw error("positivity_witness: back-substitution failed");
    return y;
}

namespace {

// exp(eps Q) by scaling-and-squaring on the truncated series, in doubles.
std::array<double, 9> exp_matrix_d(const Mat& Q, double eps, int g) {
    std::array<double, 9> m{}, acc{}, term{};
    double norm = 0;
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) norm = std::max(norm, std::abs(Q(i, j).get_d()) * eps);
    int s = 0;
    while (norm > 0.25) { norm /= 2; ++s; }
    double scale = std::ldexp(eps, -s);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) m[static_cast<size_t>(i * g + j)] = Q(i, j).get_d() * scale;
    for (int i = 0; i < g; ++i)
        acc[static_cast<size_t>(i * g + i)] = term[static_cast<size_t>(i * g + i)] = 1;
    for (int k = 1; k <= 16; ++k) {
        std::array<double, 9> nt{};
        for (int i = 0; i < g; ++i)
            for (int l = 0; l < g; ++l)
                for (int j = 0; j < g; ++j)
                    nt[static_cast<size_t>(i * g + j)] +=
                        term[static_cast<size_t>(i * g + l)] * m[static_cast<size_t>(l * g + j)] / k;
        term = nt;
        for (int i = 0; i < g * g; ++i) acc[static_cast<size_t>(i)] += term[static_cast<size_t>(i)];
    }
    for (int step = 0; step < s; ++step) {
        std::array<double, 9> sq{};
        for (int i = 0; i < g; ++i)
            for (int l = 0; l < g; ++l)
                for (int j = 0; j < g; ++j)
                    sq[static_cast<size_t>(i * g + j)] +=
                        acc[static_cast<size_t>(i * g + l)] * acc[static_cast<size_t>(l * g + j)];
        acc = sq;
    }
    return acc;
}

bool solve_d(std::array<double, 9> A, std::array<double, 3>& y, int g) {
    for (int col = 0; col < g; ++col) {
        int piv = col;
        for (int r = col + 1; r < g; ++r)
            if (std::abs(A[static_cast<size_t>(r * g + col)]) >
                std::abs(A[static_cast<size_t>(piv * g + col)]))
                piv = r;
        if (std::abs(A[static_cast<size_t>(piv * g + col)]) < 1e-300) return false;
        if (piv != col) {
            for (int j = 0; j < g; ++j)
                std::swap(A[static_cast<size_t>(piv * g + j)], A[static_cast<size_t>(col * g + j)]);
            std::swap(y[static_cast<size_t>(piv)], y[static_cast<size_t>(col)]);
        }
        for (int r = col + 1; r < g; ++r) {
            double f = A[static_cast<size_t>(r * g + col)] / A[static_cast<size_t>(col * g + col)];
            for (int j = col; j < g; ++j)
                A[static_cast<size_t>(r * g + j)] -= f * A[static_cast<size_t>(col * g + j)];
            y[static_cast<size_t>(r)] -= f * y[static_cast<size_t>(col)];
        }
    }
    for (int i = g - 1; i >= 0; --i) {
        for (int j = i + 1; j < g; ++j)
            y[static_cast<size_t>(i)] -= A[static_cast<size_t>(i * g + j)] * y[static_cast<size_t>(j)];
        y[static_cast<size_t>(i)] /= A[static_cast<size_t>(i * g + i)];
    }
    return true;
}

} // namespace

std::optional<bool> q_closure_numeric_oracle(const Vec& x, const Cone& cone, const Mat& Q,
                                             const std::vector<double>& eps_schedule) {
    int g = cone.ambient_dim();
    if (g > 3) throw domain_error("q_closure_numeric_oracle: supports g <= 3");
    if (!cone.full_dimensional())
        throw domain_error("q_closure_numeric_oracle: cone must be full-dimensional");

    std::array<double, 9> A{};
    double gen_scale = 0;
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < g; ++i) {
            A[static_cast<size_t>(i * g + j)] =
                cone.generators()[static_cast<size_t>(j)][static_cast<size_t>(i)].get_d();
            gen_scale = std::max(gen_scale, std::abs(A[static_cast<size_t>(i * g + j)]));
        }

    double xs = 0;
    for (int i = 0; i < g; ++i) xs = std::max(xs, std::abs(x[static_cast<size_t>(i)].get_d()));
    if (xs == 0) return std::nullopt; // oracle targets x != 0

    int verdicts = 0;
    bool last = false;
    for (double eps : eps_schedule) {
        auto E = exp_matrix_d(Q, eps, g);
        std::array<double, 3> c{};
        for (int i = 0; i < g; ++i) {
            double s = 0;
            for (int j = 0; j < g; ++j)
                s += E[static_cast<size_t>(i * g + j)] * x[static_cast<size_t>(j)].get_d();
            c[static_cast<size_t>(i)] = s;
        }
        if (!solve_d(A, c, g)) return std::nullopt;
        double margin = 1e-9 * xs / std::max(gen_scale, 1.0);
        bool strictly_inside = true, strictly_outside = false;
        for (int i = 0; i < g; ++i) {
            if (c[static_cast<size_t>(i)] < margin) strictly_inside = false;
            if (c[static_cast<size_t>(i)] < -margin) strictly_outside = true;
        }
        bool verdict;
        if (strictly_inside) verdict = true;
        else if (strictly_outside) verdict = false;
        else continue; // too close to a wall at this eps
        if (verdicts > 0 && verdict != last) { verdicts = 1; last = verdict; continue; }
        last = verdict;
        if (++verdicts >= 3) return last;
    }
    return std::nullopt;
}

} // namespace shintani
