#pragma once

// High-precision real and complex scalars on top of GMP floats.
// Precision is explicit everywhere: values are created through make_real()
// or Cx at a given bit count, and GMP propagates the larger operand
// precision through arithmetic.

#include <gmpxx.h>

#include <cmath>
#include <ostream>
#include <string>

namespace shintani {

using Real = mpf_class;
using Rat = mpq_class;
using Int = mpz_class;

inline Real make_real(int bits) { return Real(0, bits); }

inline Real make_real(const Rat& q, int bits) { return Real(q, bits); }

inline Real make_real(double d, int bits) { return Real(d, bits); }

// 2^-e as an mpf, used for tolerance thresholds.
inline Real pow2(long e, int bits) {
    Real r(1, bits);
    if (e >= 0)
        mpf_mul_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<unsigned long>(e));
    else
        mpf_div_2exp(r.get_mpf_t(), r.get_mpf_t(), static_cast<unsigned long>(-e));
    return r;
}

inline Real pow_int(Real base, long e) {
    Real acc(1, base.get_prec());
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    if (inv) acc = Real(1, acc.get_prec()) / acc;
    return acc;
}

// Complex number over Real. Only field arithmetic and abs are needed;
// transcendental functions stay in double where they appear.
//
// gmpxx constructs new mpf values from compound expressions at the *default*
// precision, so every operator here assigns into explicitly sized results.
struct Cx {
    Real re, im;

    Cx() : re(0, 64), im(0, 64) {}
    explicit Cx(int bits) : re(0, bits), im(0, bits) {}
    Cx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cx(const Real& r) : re(r), im(0, r.get_prec()) {}
    Cx(double r, double i, int bits) : re(r, bits), im(i, bits) {}

    Cx(const Cx&) = default;
    Cx(Cx&&) = default;
    // mpf assignment rounds to the target's old precision; adopt the source
    // precision instead so Cx behaves as a plain value type.
    Cx& operator=(const Cx& o) {
        re = Real(o.re);
        im = Real(o.im);
        return *this;
    }
    Cx& operator=(Cx&& o) noexcept {
        re = std::move(o.re);
        im = std::move(o.im);
        return *this;
    }

    int prec() const { return static_cast<int>(std::max(re.get_prec(), im.get_prec())); }

    static int join_prec(const Cx& a, const Cx& b) { return std::max(a.prec(), b.prec()); }

    Cx operator-() const {
        Cx r(prec());
        r.re = -re;
        r.im = -im;
        return r;
    }
    Cx conj() const {
        Cx r(prec());
        r.re = re;
        r.im = -im;
        return r;
    }

    Real norm2() const {
        Real r(0, prec());
        r = re * re + im * im;
        return r;
    }
    Real abs() const { return sqrt(norm2()); }
    bool is_zero() const { return re == 0 && im == 0; }

    double re_d() const { return re.get_d(); }
    double im_d() const { return im.get_d(); }

    friend Cx operator+(const Cx& a, const Cx& b) {
        Cx r(join_prec(a, b));
        r.re = a.re + b.re;
        r.im = a.im + b.im;
        return r;
    }
    friend Cx operator-(const Cx& a, const Cx& b) {
        Cx r(join_prec(a, b));
        r.re = a.re - b.re;
        r.im = a.im - b.im;
        return r;
    }
    friend Cx operator*(const Cx& a, const Cx& b) {
        Cx r(join_prec(a, b));
        r.re = a.re * b.re - a.im * b.im;
        r.im = a.re * b.im + a.im * b.re;
        return r;
    }
    friend Cx operator*(const Cx& a, const Real& s) {
        Cx r(std::max(a.prec(), static_cast<int>(s.get_prec())));
        r.re = a.re * s;
        r.im = a.im * s;
        return r;
    }
    friend Cx operator*(const Real& s, const Cx& a) { return a * s; }
    friend Cx operator/(const Cx& a, const Real& s) {
        Cx r(std::max(a.prec(), static_cast<int>(s.get_prec())));
        r.re = a.re / s;
        r.im = a.im / s;
        return r;
    }
    friend Cx operator/(const Cx& a, const Cx& b) {
        int p = join_prec(a, b);
        Real d = b.norm2();
        Cx r(p);
        r.re = (a.re * b.re + a.im * b.im) / d;
        r.im = (a.im * b.re - a.re * b.im) / d;
        return r;
    }
    Cx& operator+=(const Cx& b) { re += b.re; im += b.im; return *this; }
    Cx& operator-=(const Cx& b) { re -= b.re; im -= b.im; return *this; }
    Cx& operator*=(const Cx& b) { *this = *this * b; return *this; }

    friend std::ostream& operator<<(std::ostream& os, const Cx& z) {
        return os << "(" << z.re << (z.im >= 0 ? "+" : "") << z.im << "i)";
    }
};

inline Cx pow_int(const Cx& base, long e) {
    Cx acc(base.prec());
    acc.re = 1;
    Cx b = base;
    bool inv = e < 0;
    unsigned long n = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    if (inv) {
        Cx one(acc.prec());
        one.re = 1;
        acc = one / acc;
    }
    return acc;
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// Hard cap for precision-escalation ladders (bits double per step).
inline constexpr int kPrecisionCap = 4096;

} // namespace shintani
