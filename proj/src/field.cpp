#include "shintani/field.hpp"

#include "shintani/errors.hpp"
#include "shintani/roots.hpp"

#include <algorithm>

namespace shintani {

NumberField build_field(const Polynomial& min_poly, int precision_bits,
                        bool assert_irreducible) {
    if (min_poly.degree() < 1 || !min_poly.is_monic())
        throw domain_error("build_field: need a monic polynomial of degree >= 1");
    if (!min_poly.has_integer_coeffs())
        throw domain_error("build_field: minimal polynomial must have integer coefficients");
    switch (is_irreducible(min_poly)) {
    case Irreducibility::No:
        throw domain_error("build_field: polynomial is reducible over Q");
    case Irreducibility::Unknown:
        if (!assert_irreducible)
            throw domain_error(
                "build_field: irreducibility not certified (pass assert_irreducible to accept)");
        break;
    case Irreducibility::Yes:
        break;
    }

    NumberField F;
    F.min_poly = min_poly;
    F.g = min_poly.degree();
    F.prec_bits = precision_bits;
    F.roots = polynomial_roots(min_poly, precision_bits);
    F.r1 = 0;
    for (const auto& r : F.roots)
        if (r.im == 0) ++F.r1;
    F.r2 = (F.g - F.r1) / 2;
    return F;
}

Character Character::zero(int r1) {
    Character c;
    c.r1 = r1;
    c.values.assign(static_cast<size_t>(1) << r1, 0);
    return c;
}

Character Character::indicator(int r1, int mask, long v) {
    Character c = zero(r1);
    c.values[static_cast<size_t>(mask)] = v;
    return c;
}

int Character::mask_of_key(const std::string& key) {
    int mask = 0;
    for (size_t i = 0; i < key.size(); ++i) {
        if (key[i] == '-') mask |= 1 << i;
        else if (key[i] != '+') throw parse_error("character key must be over {+,-}: " + key);
    }
    return mask;
}

std::string Character::key_of_mask(int mask, int r1) {
    std::string s(static_cast<size_t>(r1), '+');
    for (int i = 0; i < r1; ++i)
        if (mask & (1 << i)) s[static_cast<size_t>(i)] = '-';
    return s;
}

Character Character::from_keys(int r1, const std::vector<std::pair<std::string, long>>& kv) {
    Character c = zero(r1);
    for (const auto& [key, v] : kv) {
        if (static_cast<int>(key.size()) != r1)
            throw parse_error("character key length must equal r1: \"" + key + "\"");
        c.values[static_cast<size_t>(mask_of_key(key))] = v;
    }
    return c;
}

bool Character::is_zero() const {
    for (long v : values)
        if (v) return false;
    return true;
}

namespace {

Mat companion_matrix(const Polynomial& f) {
    int g = f.degree();
    Mat C(g);
    for (int i = 0; i + 1 < g; ++i) C(i + 1, i) = 1;
    for (int i = 0; i < g; ++i) C(i, g - 1) = -f.coeff(i);
    return C;
}

} // namespace

IdealBasis::IdealBasis(NumberField field, Mat basis_matrix, std::optional<Vec> theta_coords)
    : field_(std::move(field)), B_(std::move(basis_matrix)) {
    int g = field_.g;
    if (B_.size() != g) throw domain_error("IdealBasis: basis matrix size mismatch");
    Bt_ = B_.transpose();
    auto inv = inverse(Bt_);
    if (!inv) throw domain_error("IdealBasis: basis matrix is singular");
    Bt_inv_ = *inv;
    companion_ = companion_matrix(field_.min_poly);

    if (theta_coords) {
        theta_coords_ = *theta_coords;
        if (static_cast<int>(theta_coords_.size()) != g)
            throw domain_error("IdealBasis: theta coordinate size mismatch");
    } else {
        theta_coords_ = Vec(static_cast<size_t>(g), Rat(0));
        if (g == 1) theta_coords_[0] = 1;
        else theta_coords_[1] = 1;
    }

    rho_basis_.reserve(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) rho_basis_.push_back(rho_power(B_.row(j)));
    Q_ = rho_power(theta_coords_);

    Polynomial cq = char_poly(Q_);
    bool default_theta = !theta_coords.has_value();
    if (default_theta) {
        if (!(cq == field_.min_poly))
            throw domain_error("IdealBasis: char poly of rho_w(theta) != minimal polynomial");
    } else if (is_irreducible(cq) != Irreducibility::Yes) {
        throw domain_error("IdealBasis: theta does not generate the field (char poly reducible)");
    }

    // multiplicativity spot-check on the basis generators:
    // rho_w(w_i) rho_w(w_j) = rho_w(w_i w_j)
    for (int i = 0; i < g; ++i)
        for (int j = 0; j <= i; ++j) {
            Vec prod_coords = mult_power_matrix(B_.row(i)) * B_.row(j);
            if (!(rho_basis_[static_cast<size_t>(i)] * rho_basis_[static_cast<size_t>(j)] ==
                  rho_power(prod_coords)))
                throw domain_error("IdealBasis: regular representation is not multiplicative");
        }

    // trace form T_{ij} = Tr(theta^(i+j)) from Newton power sums
    std::vector<Rat> ps = root_power_sums(field_.min_poly, 2 * g - 1);
    trace_form_ = Mat(g);
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j) trace_form_(i, j) = ps[static_cast<size_t>(i + j)];

    Mat gram = B_ * trace_form_ * B_.transpose(); // Tr(w_i w_j)
    trace_form_det_ = det(gram);
    if (trace_form_det_ == 0)
        throw domain_error("IdealBasis: degenerate trace form (basis not a Q-basis)");

    auto gram_inv = inverse(B_ * trace_form_);
    dual_ = gram_inv->transpose(); // rows are w*_i, B T dual^T = 1
}

Mat IdealBasis::mult_power_matrix(const Vec& power_coords) const {
    int g = field_.g;
    // multiplication-by-alpha in power coordinates: sum_m a_m C^m
    Mat M(g);
    Mat Ck = Mat::identity(g);
    for (int m = 0; m < g; ++m) {
        if (power_coords[static_cast<size_t>(m)] != 0)
            M = M + power_coords[static_cast<size_t>(m)] * Ck;
        if (m + 1 < g) Ck = companion_ * Ck;
    }
    return M;
}

Mat IdealBasis::rho_power(const Vec& power_coords) const {
    return Bt_inv_ * mult_power_matrix(power_coords) * Bt_;
}

Mat IdealBasis::rho_wcoords(const Vec& x) const { return rho_power(Bt_ * x); }

Rat IdealBasis::norm_exact(const Vec& x) const { return det(rho_wcoords(x)); }

std::vector<Cx> IdealBasis::roots_at(int bits) const {
    if (bits <= 0 || bits == field_.prec_bits) return field_.roots;
    return refine_roots(field_.min_poly, field_.roots, bits);
}

std::vector<Cx> IdealBasis::embed_power(const Vec& power_coords, int bits) const {
    if (bits <= 0) bits = field_.prec_bits;
    auto roots = roots_at(bits);
    std::vector<Cx> out;
    out.reserve(roots.size());
    for (const auto& th : roots) {
        Cx acc(bits);
        for (auto it = power_coords.rbegin(); it != power_coords.rend(); ++it) {
            acc = acc * th;
            acc.re += make_real(*it, bits);
        }
        out.push_back(acc);
    }
    return out;
}

std::vector<Cx> IdealBasis::embedding_values(const Vec& x, int bits) const {
    return embed_power(Bt_ * x, bits);
}

std::optional<int> IdealBasis::component_of(const Vec& x) const {
    if (is_zero(x)) return std::nullopt;
    if (norm_exact(x) == 0) return std::nullopt; // unreachable for rational x != 0

    Real scale(1, 64);
    for (const auto& xi : x) scale += abs(make_real(xi, 64));

    for (int bits = field_.prec_bits;; bits *= 2) {
        auto vals = embedding_values(x, bits);
        Real tol = scale * pow2(-(bits * 3) / 4, bits);
        int mask = 0;
        bool ok = true;
        for (int i = 0; i < field_.r1; ++i) {
            const Real& v = vals[static_cast<size_t>(i)].re;
            if (abs(v) <= tol) { ok = false; break; }
            if (v < 0) mask |= 1 << i;
        }
        if (ok) return mask;
        if (bits >= kPrecisionCap)
            throw precision_error("component_of: sign unresolved at precision cap");
    }
}

int IdealBasis::sign_character(const Vec& x, long power) const {
    Rat n = norm_exact(x);
    if (n == 0) throw domain_error("sign_character: zero norm");
    int s = n > 0 ? 1 : -1;
    return (power % 2 == 0) ? 1 : s;
}

std::vector<std::vector<Cx>> IdealBasis::W(int bits) const {
    if (bits <= 0) bits = field_.prec_bits;
    int g = field_.g;
    std::vector<std::vector<Cx>> W(static_cast<size_t>(g), std::vector<Cx>(static_cast<size_t>(g)));
    for (int j = 0; j < g; ++j) {
        auto vals = embed_power(B_.row(j), bits); // tau_i(w_j)
        for (int i = 0; i < g; ++i) W[static_cast<size_t>(j)][static_cast<size_t>(i)] = vals[static_cast<size_t>(i)];
    }
    return W;
}

Cx IdealBasis::det_W(int bits) const { return det_complex(W(bits)); }

Cx det_complex(std::vector<std::vector<Cx>> M) {
    size_t n = M.size();
    int prec = n ? M[0][0].prec() : 64;
    Cx d(prec);
    d.re = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        Real best = M[col][col].norm2();
        for (size_t r = col + 1; r < n; ++r)
            if (M[r][col].norm2() > best) { best = M[r][col].norm2(); piv = r; }
        if (best == 0) return Cx(prec);
        if (piv != col) { std::swap(M[piv], M[col]); d = -d; }
        d = d * M[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            Cx f = M[r][col] / M[col][col];
            for (size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
        }
    }
    return d;
}

} // namespace shintani
