#include "shintani/roots.hpp"

#include "shintani/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace shintani {

namespace {

using CD = std::complex<double>;

CD eval_d(const std::vector<double>& c, CD z) {
    CD r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
    return r;
}

std::vector<CD> aberth(const std::vector<double>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<double> dc(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) dc[static_cast<size_t>(i - 1)] = i * c[static_cast<size_t>(i)];

    // Cauchy-style radius for the start circle.
    double radius = 0;
    for (int i = 0; i < n; ++i)
        radius = std::max(radius, std::pow(std::abs(c[static_cast<size_t>(i)] / c.back()), 1.0 / (n - i)));
    radius = 2 * radius + 1;

    std::vector<CD> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double ang = 2 * M_PI * i / n + 0.4; // offset breaks symmetry
        z[static_cast<size_t>(i)] = radius * CD(std::cos(ang), std::sin(ang));
    }
    for (int iter = 0; iter < 300; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            CD zi = z[static_cast<size_t>(i)];
            CD f = eval_d(c, zi), df = eval_d(dc, zi);
            CD w = (df != CD(0)) ? f / df : CD(1e-3, 1e-3);
            CD s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += CD(1) / (zi - z[static_cast<size_t>(j)]);
            CD corr = w / (CD(1) - w * s);
            z[static_cast<size_t>(i)] -= corr;
            worst = std::max(worst, std::abs(corr));
        }
        if (worst < 1e-14 * radius) break;
    }
    return z;
}

// One Newton polish pass at the given precision.
Cx newton_polish(const Polynomial& p, const Polynomial& dp, Cx z, int bits, int steps) {
    for (int s = 0; s < steps; ++s) {
        Cx f = p.eval(z, bits);
        Cx df = dp.eval(z, bits);
        if (df.norm2() == 0) break;
        z = z - f / df;
    }
    return z;
}

Real real_newton_polish(const Polynomial& p, const Polynomial& dp, Real x, int bits, int steps) {
    for (int s = 0; s < steps; ++s) {
        Real f = make_real(0, bits), df = make_real(0, bits);
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
            f = f * x + make_real(*it, bits);
        for (auto it = dp.coeffs().rbegin(); it != dp.coeffs().rend(); ++it)
            df = df * x + make_real(*it, bits);
        if (df == 0) break;
        x = x - f / df;
    }
    return x;
}

Real coeff_scale(const Polynomial& p, int bits) {
    Real m = make_real(1, bits);
    for (const auto& c : p.coeffs()) {
        Real a = abs(make_real(c, bits));
        if (a > m) m = a;
    }
    return m;
}

void check_residuals(const Polynomial& p, const std::vector<Cx>& roots, int bits) {
    Real tol = coeff_scale(p, bits) * pow2(-(bits * 4) / 5, bits);
    // scale by root magnitude^deg to keep the bound meaningful for large roots
    for (const auto& r : roots) {
        Real mag = r.abs() + 1;
        Real bound = tol * pow_int(mag, p.degree());
        if (p.eval(r, bits).abs() > bound)
            throw precision_error("polynomial_roots: residual above tolerance");
    }
}

int newton_steps_for(int bits) {
    // double seed carries ~50 good bits; Newton doubles them per step
    int steps = 1, have = 40;
    while (have < bits) { have *= 2; ++steps; }
    return steps + 2;
}

} // namespace

std::vector<Cx> polynomial_roots(const Polynomial& p, int bits) {
    if (!p.is_monic()) throw domain_error("polynomial_roots: polynomial must be monic");
    int n = p.degree();
    if (n < 1) return {};

    std::vector<double> cd(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) cd[static_cast<size_t>(i)] = p.coeff(i).get_d();
    std::vector<CD> seed = aberth(cd);

    int r1 = count_real_roots(p);
    // The r1 seeds of smallest |Im| are the real roots.
    std::sort(seed.begin(), seed.end(),
              [](CD a, CD b) { return std::abs(a.imag()) < std::abs(b.imag()); });

    Polynomial dp = p.derivative();
    int steps = newton_steps_for(bits);

    std::vector<Cx> reals, complexes;
    for (int i = 0; i < n; ++i) {
        CD s = seed[static_cast<size_t>(i)];
        if (i < r1) {
            Real x = real_newton_polish(p, dp, make_real(s.real(), bits), bits, steps);
            reals.emplace_back(x, make_real(0, bits));
        } else if (s.imag() > 0) {
            Cx z(s.real(), s.imag(), bits);
            complexes.push_back(newton_polish(p, dp, z, bits, steps));
        }
    }
    if (static_cast<int>(reals.size() + 2 * complexes.size()) != n)
        throw precision_error("polynomial_roots: real/complex classification mismatch");

    std::sort(reals.begin(), reals.end(), [](const Cx& a, const Cx& b) { return a.re < b.re; });
    std::sort(complexes.begin(), complexes.end(), [](const Cx& a, const Cx& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
    });

    std::vector<Cx> out = reals;
    for (const auto& z : complexes) {
        out.push_back(z);
        out.push_back(z.conj());
    }
    check_residuals(p, out, bits);
    return out;
}

std::vector<Cx> refine_roots(const Polynomial& p, const std::vector<Cx>& roots, int bits) {
    Polynomial dp = p.derivative();
    int steps = newton_steps_for(bits);
    std::vector<Cx> out;
    out.reserve(roots.size());
    for (const auto& r : roots) {
        if (r.im == 0) {
            Real x = real_newton_polish(p, dp, make_real(0, bits) + r.re, bits, steps);
            out.emplace_back(x, make_real(0, bits));
        } else {
            Cx z(make_real(0, bits) + r.re, make_real(0, bits) + r.im);
            out.push_back(newton_polish(p, dp, z, bits, steps));
        }
    }
    check_residuals(p, out, bits);
    return out;
}

} // namespace shintani
