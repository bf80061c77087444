#include "shintani/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace shintani {

Polynomial::Polynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::from_int_coeffs(const std::vector<long>& coeffs) {
    std::vector<Rat> c(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i];
    return Polynomial(std::move(c));
}

bool Polynomial::has_integer_coeffs() const {
    for (const auto& x : c_)
        if (x.get_den() != 1) return false;
    return true;
}

Rat Polynomial::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

Cx Polynomial::eval(const Cx& z, int bits) const {
    Cx r(bits);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        r = r * z;
        r.re += make_real(*it, bits);
    }
    return r;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rat> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(d));
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        if (os.tellp() > 0) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Rat mag = abs(a);
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "X";
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

Polynomial char_poly(const Mat& M) {
    int n = M.size();
    // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M_k)/k, M_{k+1} = M (M_k + c_k I).
    std::vector<Rat> coeffs(static_cast<size_t>(n) + 1);
    coeffs[static_cast<size_t>(n)] = 1;
    Mat Mk = M;
    for (int k = 1; k <= n; ++k) {
        Rat ck = -Mk.trace() / k;
        coeffs[static_cast<size_t>(n - k)] = ck;
        if (k < n) Mk = M * (Mk + ck * Mat::identity(n));
    }
    return Polynomial(std::move(coeffs));
}

namespace {

// Primitive integer form: clear denominators, divide by content, keep the
// sign of the leading coefficient positive.
std::vector<Int> primitive_int_coeffs(const Polynomial& p) {
    Int den(1);
    for (const auto& c : p.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> out;
    Int content(0);
    for (const auto& c : p.coeffs()) {
        Rat s = c * Rat(den);
        s.canonicalize();
        out.push_back(Int(s.get_num()));
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    for (auto& x : out) x /= content;
    if (out.back() < 0)
        for (auto& x : out) x = -x;
    return out;
}

bool has_rational_root(const std::vector<Int>& c) {
    // candidates p/q with p | c0, q | c_deg
    Int a0 = c.front(), ag = c.back();
    if (a0 == 0) return true; // root 0
    std::vector<Int> ps, qs;
    auto divisors = [](const Int& n) {
        std::vector<Int> ds;
        Int m = abs(n);
        for (Int d(1); d * d <= m; ++d)
            if (m % d == 0) { ds.push_back(d); ds.push_back(m / d); }
        return ds;
    };
    auto eval_at = [&c](const Rat& x) {
        Rat r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Rat(*it);
        return r;
    };
    for (const auto& p : divisors(a0))
        for (const auto& q : divisors(ag)) {
            Rat cand(p, q);
            cand.canonicalize();
            if (eval_at(cand) == 0 || eval_at(-cand) == 0) return true;
        }
    return false;
}

// ---- arithmetic in F_p[X] mod f, p a word-sized prime ----

using ModPoly = std::vector<uint64_t>;

ModPoly mod_trim(ModPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ModPoly mod_rem(ModPoly a, const ModPoly& f, uint64_t p) {
    // f monic
    while (a.size() >= f.size() && !a.empty()) {
        uint64_t lead = a.back();
        size_t shift = a.size() - f.size();
        if (lead) {
            for (size_t i = 0; i < f.size(); ++i) {
                __uint128_t t = static_cast<__uint128_t>(lead) * f[i];
                uint64_t sub = static_cast<uint64_t>(t % p);
                uint64_t& dst = a[shift + i];
                dst = (dst + p - sub) % p;
            }
        }
        a.pop_back();
        a = mod_trim(std::move(a));
        if (a.size() < f.size()) break;
    }
    return mod_trim(std::move(a));
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            __uint128_t t = static_cast<__uint128_t>(a[i]) * b[j] + c[i + j];
            c[i + j] = static_cast<uint64_t>(t % p);
        }
    }
    return mod_rem(std::move(c), f, p);
}

// X^(p^e) mod f via repeated frobenius-by-squaring.
ModPoly mod_xpow_pe(const ModPoly& f, uint64_t p, int e) {
    ModPoly x = mod_rem({0, 1}, f, p);
    ModPoly acc = x;
    for (int step = 0; step < e; ++step) {
        // acc <- acc^p mod f by square-and-multiply on the exponent p
        ModPoly r = {1};
        ModPoly base = acc;
        uint64_t n = p;
        while (n) {
            if (n & 1) r = mod_mul(r, base, f, p);
            base = mod_mul(base, base, f, p);
            n >>= 1;
        }
        acc = r;
    }
    return acc;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, uint64_t p) {
    auto inv_mod = [p](uint64_t x) {
        // Fermat
        uint64_t r = 1, base = x % p, n = p - 2;
        while (n) {
            if (n & 1) r = static_cast<uint64_t>((static_cast<__uint128_t>(r) * base) % p);
            base = static_cast<uint64_t>((static_cast<__uint128_t>(base) * base) % p);
            n >>= 1;
        }
        return r;
    };
    a = mod_trim(std::move(a));
    b = mod_trim(std::move(b));
    while (!b.empty()) {
        // make b monic, then a mod b
        uint64_t inv = inv_mod(b.back());
        ModPoly bm = b;
        for (auto& x : bm) x = static_cast<uint64_t>((static_cast<__uint128_t>(x) * inv) % p);
        ModPoly r = mod_rem(a, bm, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool irreducible_mod_p(const std::vector<Int>& coeffs, uint64_t p) {
    int n = static_cast<int>(coeffs.size()) - 1;
    ModPoly f(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        Int r = coeffs[i] % Int(static_cast<unsigned long>(p));
        if (r < 0) r += Int(static_cast<unsigned long>(p));
        f[i] = mpz_get_ui(r.get_mpz_t());
    }
    if (f.back() == 0) return false; // degree dropped mod p
    // normalize monic
    {
        uint64_t lead = f.back(), inv = 1;
        uint64_t base = lead % p, n2 = p - 2;
        while (n2) {
            if (n2 & 1) inv = static_cast<uint64_t>((static_cast<__uint128_t>(inv) * base) % p);
            base = static_cast<uint64_t>((static_cast<__uint128_t>(base) * base) % p);
            n2 >>= 1;
        }
        for (auto& x : f) x = static_cast<uint64_t>((static_cast<__uint128_t>(x) * inv) % p);
    }
    // f irreducible over F_p iff X^(p^n) = X mod f and gcd(X^(p^(n/l)) - X, f) = 1
    // for every prime l | n.
    ModPoly xq = mod_xpow_pe(f, p, n);
    ModPoly x = mod_rem({0, 1}, f, p);
    ModPoly diff = xq;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (size_t i = 0; i < x.size(); ++i) diff[i] = (diff[i] + p - x[i]) % p;
    if (!mod_trim(diff).empty()) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) { lprime = false; break; }
        if (!lprime) continue;
        ModPoly xe = mod_xpow_pe(f, p, n / l);
        ModPoly d2 = xe;
        d2.resize(std::max(d2.size(), x.size()), 0);
        for (size_t i = 0; i < x.size(); ++i) d2[i] = (d2[i] + p - x[i]) % p;
        ModPoly gg = mod_gcd(f, mod_trim(std::move(d2)), p);
        if (gg.size() != 1) return false;
    }
    return true;
}

} // namespace

Irreducibility is_irreducible(const Polynomial& p) {
    if (p.degree() < 1) return Irreducibility::No;
    if (!p.is_monic()) throw domain_error("is_irreducible: polynomial must be monic");
    if (p.degree() == 1) return Irreducibility::Yes;
    auto c = primitive_int_coeffs(p);
    if (c.front() == 0) return Irreducibility::No;
    if (has_rational_root(c)) return Irreducibility::No;
    if (p.degree() <= 3) return Irreducibility::Yes;
    static const uint64_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                      43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (uint64_t q : primes) {
        if (c.back() % Int(static_cast<unsigned long>(q)) == 0) continue;
        if (irreducible_mod_p(c, q)) return Irreducibility::Yes;
    }
    return Irreducibility::Unknown;
}

namespace {

int sign_changes(const std::vector<Polynomial>& chain, bool at_plus_infinity) {
    int changes = 0, prev = 0;
    for (const auto& f : chain) {
        if (f.is_zero()) continue;
        Rat lead = f.coeff(f.degree());
        int s = lead > 0 ? 1 : -1;
        if (!at_plus_infinity && f.degree() % 2 == 1) s = -s;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

Polynomial poly_rem(const Polynomial& a, const Polynomial& b) {
    std::vector<Rat> r(a.coeffs());
    int db = b.degree();
    while (static_cast<int>(r.size()) - 1 >= db) {
        int dr = static_cast<int>(r.size()) - 1;
        Rat f = r.back() / b.coeff(db);
        for (int i = 0; i <= db; ++i) r[static_cast<size_t>(dr - db + i)] -= f * b.coeff(i);
        while (!r.empty() && r.back() == 0) r.pop_back();
        if (r.empty()) break;
    }
    return Polynomial(std::move(r));
}

} // namespace

int count_real_roots(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() >= 1) {
        Polynomial r = poly_rem(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        std::vector<Rat> neg(r.coeffs());
        for (auto& x : neg) x = -x;
        chain.emplace_back(std::move(neg));
    }
    return sign_changes(chain, false) - sign_changes(chain, true);
}

std::vector<Rat> root_power_sums(const Polynomial& p, int count) {
    if (!p.is_monic()) throw domain_error("root_power_sums: polynomial must be monic");
    int g = p.degree();
    auto a = [&](int i) { return p.coeff(i); }; // X^g + a_{g-1} X^{g-1} + ...
    std::vector<Rat> ps(static_cast<size_t>(count));
    if (count > 0) ps[0] = g;
    for (int k = 1; k < count; ++k) {
        if (k <= g) {
            Rat s(0);
            for (int j = 1; j < k; ++j) s += a(g - j) * ps[static_cast<size_t>(k - j)];
            ps[static_cast<size_t>(k)] = -s - Rat(k) * a(g - k);
        } else {
            Rat t(0);
            for (int j = 1; j <= g; ++j) t += a(g - j) * ps[static_cast<size_t>(k - j)];
            ps[static_cast<size_t>(k)] = -t;
        }
    }
    return ps;
}

} // namespace shintani
