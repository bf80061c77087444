#include "shintani/hurwitz.hpp"

#include "shintani/errors.hpp"

#include <algorithm>
#include <cmath>

namespace shintani {

namespace {

// Hull data for one embedding: pairings <alpha_j, w^(i)> at some precision.
// Separation certificate: a direction u with Re(conj(u) z_j) > tol for all j.
// Containment certificate: a zero/segment/triangle witness with margin.
enum class HullVerdict { Separated, ContainsZero, Unclear };

Real cross(const Cx& a, const Cx& b) {
    Real r(0, std::max(a.prec(), b.prec()));
    r = a.re * b.im - a.im * b.re;
    return r;
}

Real dotc(const Cx& a, const Cx& b) {
    Real r(0, std::max(a.prec(), b.prec()));
    r = a.re * b.re + a.im * b.im;
    return r;
}

HullVerdict hull_contains_zero(const std::vector<Cx>& z, int bits) {
    size_t m = z.size();
    Real scale = make_real(0, bits);
    for (const auto& p : z) scale = std::max(scale, p.abs());
    if (scale == 0) return HullVerdict::ContainsZero;
    Real tol = scale * pow2(-(bits * 3) / 4, bits);
    Real tol2 = tol * tol;

    for (const auto& p : z)
        if (p.norm2() <= tol2) return HullVerdict::Unclear; // vertex at 0: resolve at higher bits

    // segment through the origin: antiparallel pair
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) {
            Real cr = cross(z[i], z[j]);
            Real dt = dotc(z[i], z[j]);
            if (abs(cr) <= tol * scale && dt < 0) {
                if (abs(cr) <= tol2) return HullVerdict::ContainsZero;
                return HullVerdict::Unclear;
            }
        }

    // triangle strictly containing the origin
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                Real c1 = cross(z[i], z[j]);
                Real c2 = cross(z[j], z[k]);
                Real c3 = cross(z[k], z[i]);
                Real margin = tol * scale;
                if ((c1 > margin && c2 > margin && c3 > margin) ||
                    (c1 < -margin && c2 < -margin && c3 < -margin))
                    return HullVerdict::ContainsZero;
            }

    // separation: widest angular gap > pi, then verified with margin
    std::vector<double> angles;
    angles.reserve(m);
    for (const auto& p : z) angles.push_back(std::atan2(p.im_d(), p.re_d()));
    std::sort(angles.begin(), angles.end());
    double best_gap = 0, gap_mid = 0;
    for (size_t i = 0; i < m; ++i) {
        double next = (i + 1 < m) ? angles[i + 1] : angles[0] + 2 * M_PI;
        double gap = next - angles[i];
        if (gap > best_gap) {
            best_gap = gap;
            gap_mid = angles[i] + gap / 2;
        }
    }
    if (best_gap > M_PI) {
        // u points into the gap's antipode: all z_j in the open half-plane
        double phi = gap_mid + M_PI;
        Cx u(std::cos(phi), std::sin(phi), bits);
        bool ok = true;
        for (const auto& p : z)
            if (dotc(u, p) <= tol) { ok = false; break; }
        if (ok) return HullVerdict::Separated;
    }
    return HullVerdict::Unclear;
}

} // namespace

bool is_q_admissible(const IdealBasis& a, const Cone& cone) {
    int g = a.degree();
    const auto& gens = cone.generators();
    // vertex of zero norm (impossible for nonzero rational vertices, but the
    // contract promises false rather than an indefinite hull fight)
    for (const auto& v : gens)
        if (a.norm_exact(v) == 0) return false;

    for (int bits = a.field().prec_bits;; bits *= 2) {
        bool all_clear = true;
        // pairings per generator at this precision
        std::vector<std::vector<Cx>> vals;
        vals.reserve(gens.size());
        for (const auto& v : gens) vals.push_back(a.embedding_values(v, bits));

        for (int i = 0; i < g && all_clear; ++i) {
            if (i >= a.field().r1 && (i - a.field().r1) % 2 == 1)
                continue; // conjugate embedding: same verdict as its partner
            std::vector<Cx> z;
            z.reserve(gens.size());
            for (size_t j = 0; j < gens.size(); ++j) z.push_back(vals[j][static_cast<size_t>(i)]);

            if (i < a.field().r1) {
                // real embedding: uniform strict sign
                Real scale = make_real(0, bits);
                for (const auto& p : z) scale = std::max(scale, abs(p.re));
                Real tol = scale * pow2(-(bits * 3) / 4, bits);
                int pos = 0, neg = 0, close = 0;
                for (const auto& p : z) {
                    if (p.re > tol) ++pos;
                    else if (p.re < -tol) ++neg;
                    else ++close;
                }
                if (close) { all_clear = false; continue; }
                if (pos && neg) return false;
            } else {
                switch (hull_contains_zero(z, bits)) {
                case HullVerdict::ContainsZero: return false;
                case HullVerdict::Separated: break;
                case HullVerdict::Unclear: all_clear = false; break;
                }
            }
        }
        if (all_clear) return true;
        if (bits >= kPrecisionCap)
            throw precision_error("is_q_admissible: hull test unresolved at precision cap");
    }
}

EigenSimplex make_eigen_simplex(const IdealBasis& a, const Cone& cone, int bits) {
    if (bits <= 0) bits = a.field().prec_bits;
    if (!is_q_admissible(a, cone))
        throw domain_error("make_eigen_simplex: cone is not Q-admissible");
    int g = a.degree();
    const auto& gens = cone.generators();

    std::vector<std::vector<Cx>> vals; // vals[j][i] = <alpha_j, w^(i)>
    for (const auto& v : gens) vals.push_back(a.embedding_values(v, bits));

    auto W = a.W(bits);
    // dual embeddings w*^(i)
    std::vector<std::vector<Cx>> Wd(static_cast<size_t>(g), std::vector<Cx>(static_cast<size_t>(g)));
    for (int j = 0; j < g; ++j) {
        auto dv = a.embed_power(a.dual_matrix().row(j), bits);
        for (int i = 0; i < g; ++i) Wd[static_cast<size_t>(j)][static_cast<size_t>(i)] = dv[static_cast<size_t>(i)];
    }

    EigenSimplex S;
    S.xi.assign(static_cast<size_t>(g), std::vector<Cx>(static_cast<size_t>(g)));
    S.xi_dual.assign(static_cast<size_t>(g), std::vector<Cx>(static_cast<size_t>(g)));
    Cx mu_prod(bits);
    mu_prod.re = 1;
    for (int i = 0; i < g; ++i) {
        // choose mu_i rotating all pairings into the right half-plane
        Cx mu(bits);
        if (i < a.field().r1) {
            mu.re = (vals[0][static_cast<size_t>(i)].re > 0) ? 1 : -1;
        } else {
            // direction of the angular-gap antipode, as in the hull test
            std::vector<double> angles;
            for (size_t j = 0; j < gens.size(); ++j)
                angles.push_back(std::atan2(vals[j][static_cast<size_t>(i)].im_d(),
                                            vals[j][static_cast<size_t>(i)].re_d()));
            std::sort(angles.begin(), angles.end());
            double best_gap = 0, gap_mid = 0;
            for (size_t j = 0; j < angles.size(); ++j) {
                double next = (j + 1 < angles.size()) ? angles[j + 1] : angles[0] + 2 * M_PI;
                if (next - angles[j] > best_gap) {
                    best_gap = next - angles[j];
                    gap_mid = angles[j] + (next - angles[j]) / 2;
                }
            }
            double phi = gap_mid + M_PI; // u = e^{i phi}; mu = conj(u) rotates u to 1
            mu = Cx(std::cos(phi), -std::sin(phi), bits);
        }
        // verify Re<alpha_j, mu w^(i)> > 0
        for (size_t j = 0; j < gens.size(); ++j) {
            Cx rotated = mu * vals[j][static_cast<size_t>(i)];
            if (!(rotated.re > 0))
                throw precision_error("make_eigen_simplex: scaling failed to land in V_I");
        }
        Cx mu_inv = Cx(make_real(1, bits)) / mu;
        for (int r = 0; r < g; ++r) {
            S.xi[static_cast<size_t>(i)][static_cast<size_t>(r)] = mu * W[static_cast<size_t>(r)][static_cast<size_t>(i)];
            S.xi_dual[static_cast<size_t>(i)][static_cast<size_t>(r)] = mu_inv * Wd[static_cast<size_t>(r)][static_cast<size_t>(i)];
        }
        mu_prod *= mu;
    }
    S.det_xi = mu_prod * a.det_W(bits);
    return S;
}

namespace {

Rat factorial_ratio(const std::vector<long>& kvec, int g) {
    long total = 0;
    Int num(1);
    for (long k : kvec) {
        num *= factorial(static_cast<unsigned long>(k));
        total += k;
    }
    Int den = factorial(static_cast<unsigned long>(g + total - 1));
    Rat r(num, den);
    r.canonicalize();
    return r;
}

} // namespace

Cx hurwitz_weight(const std::vector<Cx>& x, const EigenSimplex& simplex,
                  const std::vector<long>& kvec) {
    int g = static_cast<int>(simplex.xi.size());
    Cx core = hurwitz_rational_core(simplex.xi, x, kvec);
    int bits = core.prec();
    return Cx(make_real(factorial_ratio(kvec, g), bits)) * core;
}

Cx intq_prefactor(const IdealBasis& a, long k, int bits) {
    if (bits <= 0) bits = a.field().prec_bits;
    int g = a.degree();
    Int num(1);
    for (int i = 0; i < g; ++i) num *= factorial(static_cast<unsigned long>(k));
    Rat ratio(num, factorial(static_cast<unsigned long>(g + k * g - 1)));
    ratio.canonicalize();
    return Cx(make_real(ratio, bits)) * a.det_W(bits);
}

Cx intq_eigenweight(const IdealBasis& a, const Cone& cone, const Vec& x, long k) {
    if (k < 0) throw domain_error("intq_eigenweight: k must be >= 0");
    if (!is_q_admissible(a, cone))
        throw domain_error("intq_eigenweight: cone is not Q-admissible");
    if (is_zero(x)) throw domain_error("intq_eigenweight: x must be nonzero");
    QClosureTester tester(cone, a.Q(), /*certify=*/false);
    if (!tester.contains(x))
        throw domain_error("intq_eigenweight: x is not in the Q-closure of the cone");

    Rat n = a.norm_exact(x);
    if (n == 0) throw domain_error("intq_eigenweight: norm vanishes (contradicts admissibility)");
    Rat p(1);
    for (long e = 0; e < k + 1; ++e) p *= n;
    int bits = a.field().prec_bits;
    return intq_prefactor(a, k, bits) / make_real(p, bits);
}

// ---- quadrature ----

namespace {

using CD = std::complex<double>;

struct Tri {
    // vertices in the (t_2, t_3) chart
    double ax, ay, bx, by, cx, cy;
};

// degree-5 seven-point rule on a triangle (barycentric weights)
CD tri_rule(const Integrand& f, const std::vector<std::vector<CD>>& xi, const Tri& t) {
    static const double w0 = 9.0 / 40.0;
    static const double wa = (155.0 - std::sqrt(15.0)) / 1200.0;
    static const double wb = (155.0 + std::sqrt(15.0)) / 1200.0;
    static const double a1 = (6.0 - std::sqrt(15.0)) / 21.0;
    static const double a2 = (6.0 + std::sqrt(15.0)) / 21.0;
    struct Node { double l1, l2, l3, w; };
    static const Node nodes[7] = {
        {1.0 / 3, 1.0 / 3, 1.0 / 3, w0},
        {a1, a1, 1 - 2 * a1, wa}, {a1, 1 - 2 * a1, a1, wa}, {1 - 2 * a1, a1, a1, wa},
        {a2, a2, 1 - 2 * a2, wb}, {a2, 1 - 2 * a2, a2, wb}, {1 - 2 * a2, a2, a2, wb},
    };
    double area = std::abs((t.bx - t.ax) * (t.cy - t.ay) - (t.cx - t.ax) * (t.by - t.ay)) / 2;
    CD acc = 0;
    std::vector<CD> y(xi[0].size());
    for (const auto& n : nodes) {
        double t2 = n.l1 * t.ax + n.l2 * t.bx + n.l3 * t.cx;
        double t3 = n.l1 * t.ay + n.l2 * t.by + n.l3 * t.cy;
        double t1 = 1 - t2 - t3;
        for (size_t r = 0; r < y.size(); ++r)
            y[r] = t1 * xi[0][r] + t2 * xi[1][r] + t3 * xi[2][r];
        acc += n.w * f(y);
    }
    return acc * area;
}

CD tri_adaptive(const Integrand& f, const std::vector<std::vector<CD>>& xi, const Tri& t, CD whole,
                double tol, int depth) {
    double mabx = (t.ax + t.bx) / 2, maby = (t.ay + t.by) / 2;
    double mbcx = (t.bx + t.cx) / 2, mbcy = (t.by + t.cy) / 2;
    double mcax = (t.cx + t.ax) / 2, mcay = (t.cy + t.ay) / 2;
    Tri kids[4] = {
        {t.ax, t.ay, mabx, maby, mcax, mcay},
        {mabx, maby, t.bx, t.by, mbcx, mbcy},
        {mcax, mcay, mbcx, mbcy, t.cx, t.cy},
        {mabx, maby, mbcx, mbcy, mcax, mcay},
    };
    CD parts[4];
    CD sum = 0;
    for (int i = 0; i < 4; ++i) {
        parts[i] = tri_rule(f, xi, kids[i]);
        sum += parts[i];
    }
    if (std::abs(sum - whole) <= tol || depth >= 22) {
        if (depth >= 22 && std::abs(sum - whole) > 64 * tol)
            throw error("simplex_quadrature_oracle: refinement failed to converge");
        return sum;
    }
    CD acc = 0;
    for (int i = 0; i < 4; ++i) acc += tri_adaptive(f, xi, kids[i], parts[i], tol / 2, depth + 1);
    return acc;
}

CD segment_rule(const Integrand& f, const std::vector<std::vector<CD>>& xi, double lo, double hi) {
    // 15-point Gauss-Legendre
    static const double gx[8] = {0.0, 0.2011940939974345, 0.3941513470775634, 0.5709721726085388,
                                 0.7244177313601701, 0.8482065834104272, 0.9372733924007060,
                                 0.9879925180204854};
    static const double gw[8] = {0.2025782419255613, 0.1984314853271116, 0.1861610000155622,
                                 0.1662692058169939, 0.1395706779261543, 0.1071592204671719,
                                 0.0703660474881081, 0.0307532419961173};
    double mid = (lo + hi) / 2, half = (hi - lo) / 2;
    std::vector<CD> y(xi[0].size());
    auto eval = [&](double t2) {
        for (size_t r = 0; r < y.size(); ++r) y[r] = (1 - t2) * xi[0][r] + t2 * xi[1][r];
        return f(y);
    };
    CD acc = gw[0] * eval(mid);
    for (int i = 1; i < 8; ++i)
        acc += gw[i] * (eval(mid + half * gx[i]) + eval(mid - half * gx[i]));
    return acc * half;
}

CD segment_adaptive(const Integrand& f, const std::vector<std::vector<CD>>& xi, double lo,
                    double hi, CD whole, double tol, int depth) {
    double mid = (lo + hi) / 2;
    CD left = segment_rule(f, xi, lo, mid);
    CD right = segment_rule(f, xi, mid, hi);
    if (std::abs(left + right - whole) <= tol || depth >= 30) {
        if (depth >= 30 && std::abs(left + right - whole) > 64 * tol)
            throw error("simplex_quadrature_oracle: refinement failed to converge");
        return left + right;
    }
    return segment_adaptive(f, xi, lo, mid, left, tol / 2, depth + 1) +
           segment_adaptive(f, xi, mid, hi, right, tol / 2, depth + 1);
}

} // namespace

std::complex<double> simplex_quadrature_oracle(
    const Integrand& f, const std::vector<std::vector<std::complex<double>>>& vertices,
    double rel_tol) {
    size_t g = vertices.size();
    for (const auto& v : vertices)
        if (v.size() != g) throw domain_error("simplex_quadrature_oracle: vertex size mismatch");

    // det of the vertex matrix (columns xi_i)
    CD detxi;
    if (g == 2) {
        detxi = vertices[0][0] * vertices[1][1] - vertices[1][0] * vertices[0][1];
    } else if (g == 3) {
        detxi = vertices[0][0] * (vertices[1][1] * vertices[2][2] - vertices[2][1] * vertices[1][2]) -
                vertices[1][0] * (vertices[0][1] * vertices[2][2] - vertices[2][1] * vertices[0][2]) +
                vertices[2][0] * (vertices[0][1] * vertices[1][2] - vertices[1][1] * vertices[0][2]);
    } else {
        throw domain_error("simplex_quadrature_oracle: g must be 2 or 3");
    }

    if (g == 2) {
        CD whole = segment_rule(f, vertices, 0, 1);
        double tol = rel_tol * std::max(std::abs(whole), 1e-30);
        return detxi * segment_adaptive(f, vertices, 0, 1, whole, tol, 0);
    }
    Tri root{0, 0, 1, 0, 0, 1};
    CD whole = tri_rule(f, vertices, root);
    double tol = rel_tol * std::max(std::abs(whole), 1e-30);
    return detxi * tri_adaptive(f, vertices, root, whole, tol, 0);
}

} // namespace shintani
