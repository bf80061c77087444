#include "shintani/cone_sums.hpp"

#include "shintani/errors.hpp"

namespace shintani {

std::vector<Vec> enumerate_cone_points(const Cone& cone, const Mat& Q, long depth) {
    int g = cone.ambient_dim();
    if (cone.count() != g || cone.sign() == 0) return {}; // degenerate: C^Q - 0 is empty
    if (depth < 0) throw domain_error("enumerate_cone_points: negative depth");

    const auto& gens = cone.primitive_generators();
    std::vector<Vec> cell = parallelepiped_lattice_points(gens);
    QClosureTester tester(cone, Q, /*certify=*/false);

    std::vector<Vec> out;
    std::vector<long> n(static_cast<size_t>(g), 0);
    while (true) {
        Vec base(static_cast<size_t>(g), Rat(0));
        for (int i = 0; i < g; ++i)
            if (n[static_cast<size_t>(i)] != 0)
                base = base + Rat(n[static_cast<size_t>(i)]) * gens[static_cast<size_t>(i)];
        for (const auto& x0 : cell) {
            Vec x = base + x0;
            if (is_zero(x)) continue;
            if (tester.contains(x)) out.push_back(std::move(x));
        }
        int c = g - 1;
        while (c >= 0 && n[static_cast<size_t>(c)] == depth) { n[static_cast<size_t>(c)] = 0; --c; }
        if (c < 0) break;
        ++n[static_cast<size_t>(c)];
    }
    return out;
}

namespace {

struct Accum {
    Real sum;
    Real shell; // |terms| whose max generator coordinate equals the depth
    long points = 0;
    std::optional<Rat> exact;
};

Accum accumulate(const IdealBasis& a, const Cone& cone, const Mat& Q, long k, long depth,
                 int bits, bool want_exact) {
    Accum acc{make_real(0, bits), make_real(0, bits), 0, std::nullopt};
    if (want_exact) acc.exact = Rat(0);

    int g = cone.ambient_dim();
    const auto& gens = cone.primitive_generators();
    std::vector<Vec> cell = parallelepiped_lattice_points(gens);
    QClosureTester tester(cone, Q, /*certify=*/false);

    std::vector<long> n(static_cast<size_t>(g), 0);
    while (true) {
        long maxn = 0;
        Vec base(static_cast<size_t>(g), Rat(0));
        for (int i = 0; i < g; ++i) {
            maxn = std::max(maxn, n[static_cast<size_t>(i)]);
            if (n[static_cast<size_t>(i)] != 0)
                base = base + Rat(n[static_cast<size_t>(i)]) * gens[static_cast<size_t>(i)];
        }
        for (const auto& x0 : cell) {
            Vec x = base + x0;
            if (is_zero(x)) continue;
            if (!tester.contains(x)) continue;
            Rat norm = a.norm_exact(x);
            if (norm == 0)
                throw domain_error("cone_zeta_sum: norm vanishes at " + to_string(x) +
                                   " (cone is not Q-admissible)");
            Rat p(1);
            for (long e = 0; e < k + 1; ++e) p *= norm;
            Real term = make_real(1, bits) / make_real(p, bits);
            acc.sum += term;
            if (maxn == depth) acc.shell += abs(term);
            if (acc.exact) *acc.exact += 1 / p;
            ++acc.points;
        }
        int c = g - 1;
        while (c >= 0 && n[static_cast<size_t>(c)] == depth) { n[static_cast<size_t>(c)] = 0; --c; }
        if (c < 0) break;
        ++n[static_cast<size_t>(c)];
    }
    return acc;
}

} // namespace

ConeSumResult cone_zeta_sum(const IdealBasis& a, const Cone& cone, long k,
                            const ConeSumConfig& cfg) {
    if (k < 1) throw domain_error("cone_zeta_sum: k must be >= 1 (series diverges)");
    if (cfg.depth < 1) throw domain_error("cone_zeta_sum: depth must be >= 1");
    int bits = cfg.precision_bits;

    ConeSumResult res{make_real(0, bits), make_real(0, bits), 0, std::nullopt};
    int sgn = (cone.count() == cone.ambient_dim()) ? cone.sign() : 0;
    if (sgn == 0) {
        if (cfg.exact_partial) res.exact_partial = Rat(0);
        return res; // empty sum, exactly zero
    }

    Accum at_n = accumulate(a, cone, a.Q(), k, cfg.depth, bits, cfg.exact_partial);
    res.points_used = at_n.points;
    res.value = at_n.sum;
    if (sgn < 0) res.value = -res.value;
    if (at_n.exact) res.exact_partial = sgn > 0 ? *at_n.exact : Rat(-*at_n.exact);

    if (cfg.refine) {
        Accum at_2n = accumulate(a, cone, a.Q(), k, 2 * cfg.depth, bits, false);
        res.err_estimate = abs(at_2n.sum - at_n.sum);
    } else {
        res.err_estimate = at_n.shell;
    }
    return res;
}

Cx psi_truncated(const Cone& cone, const Mat& Q, long d, const std::vector<Cx>& y, long depth,
                 int precision_bits) {
    if (d < 1) throw domain_error("psi_truncated: d must be >= 1");
    int g = cone.ambient_dim();
    int sgn = (cone.count() == g) ? cone.sign() : 0;
    Cx acc(precision_bits);
    if (sgn == 0) return acc;

    for (const auto& x : enumerate_cone_points(cone, Q, depth)) {
        Cx pairing(precision_bits);
        for (int i = 0; i < g; ++i)
            pairing +=
                Cx(make_real(x[static_cast<size_t>(i)], precision_bits)) * y[static_cast<size_t>(i)];
        Cx one(precision_bits);
        one.re = 1;
        acc += one / pow_int(pairing, g + d);
    }
    if (sgn < 0) acc = -acc;
    return acc;
}

} // namespace shintani
