#pragma once

// Concrete number-field data: embeddings of a monic irreducible polynomial's
// root field, an ideal given by an explicit Z-basis w, the regular
// representation rho_w, the trace-dual basis, and the exact norm form
// N_w(x) = det rho_w(<x,w>).

#include "shintani/exact.hpp"
#include "shintani/numeric.hpp"
#include "shintani/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace shintani {

struct NumberField {
    Polynomial min_poly; // monic, integer coefficients, certified irreducible
    int g = 0;
    int r1 = 0;          // real embeddings
    int r2 = 0;          // conjugate pairs
    int prec_bits = 0;
    // tau_i(theta): real roots ascending, then conjugate pairs
    // (positive-imaginary member first) by (Re, Im).
    std::vector<Cx> roots;
};

// Root refinement via Aberth-Ehrlich seeding plus Newton polish; the real
// count is certified by a Sturm chain. Irreducibility must certify unless
// assert_irreducible overrides an Unknown verdict.
NumberField build_field(const Polynomial& min_poly, int precision_bits,
                        bool assert_irreducible = false);

// Locally constant character {+-1}^r1 -> Z, stored over component bitmasks
// (bit i set <=> sign of the i-th real embedding is negative).
struct Character {
    int r1 = 0;
    std::vector<long> values; // size 2^r1

    static Character zero(int r1);
    static Character indicator(int r1, int mask, long v = 1);
    // keys like "++-" (length r1); r1 = 0 uses the empty key
    static Character from_keys(int r1, const std::vector<std::pair<std::string, long>>& kv);

    long at(int mask) const { return values[static_cast<size_t>(mask)]; }
    bool is_zero() const;
    static int mask_of_key(const std::string& key);
    static std::string key_of_mask(int mask, int r1);
};

class IdealBasis {
public:
    // basis_matrix rows give w_i in power-basis coordinates 1, theta, ...,
    // theta^(g-1); theta_coords (power basis) defaults to the generator.
    IdealBasis(NumberField field, Mat basis_matrix,
               std::optional<Vec> theta_coords = std::nullopt);

    const NumberField& field() const { return field_; }
    int degree() const { return field_.g; }
    const Mat& basis_matrix() const { return B_; }
    const Mat& Q() const { return Q_; }
    const Mat& dual_matrix() const { return dual_; }
    const Mat& trace_form() const { return trace_form_; }
    const Rat& trace_form_det() const { return trace_form_det_; }
    const std::vector<Mat>& rho_basis() const { return rho_basis_; }

    // rho_w of the element with the given power-basis coordinates.
    Mat rho_power(const Vec& power_coords) const;
    // rho_w of <x, w> for x in w-coordinates.
    Mat rho_wcoords(const Vec& x) const;

    // N_w(x) = det rho_w(<x,w>) = N_{F/Q}(<x,w>), exact.
    Rat norm_exact(const Vec& x) const;

    // Embedding values <x, w^(i)> for i = 1..g at the requested precision
    // (field precision when bits = 0).
    std::vector<Cx> embedding_values(const Vec& x, int bits = 0) const;
    // tau_i of the element with given power-basis coordinates.
    std::vector<Cx> embed_power(const Vec& power_coords, int bits = 0) const;

    // Sign vector (as component bitmask) of the r1 real embeddings of <x,w>;
    // nullopt when N_w(x) = 0 (only at x = 0 for rational x). Escalates
    // precision internally until every sign is resolved.
    std::optional<int> component_of(const Vec& x) const;

    // (sign N_w(x))^power; zero norm is an error.
    int sign_character(const Vec& x, long power) const;

    // Embedding matrix W = (w^(1), ..., w^(g)) and its determinant at the
    // requested precision; (det W)^2 equals trace_form_det().
    std::vector<std::vector<Cx>> W(int bits = 0) const;
    Cx det_W(int bits = 0) const;

private:
    std::vector<Cx> roots_at(int bits) const;
    Mat mult_power_matrix(const Vec& power_coords) const;

    NumberField field_;
    Mat B_, Bt_, Bt_inv_;
    Vec theta_coords_;
    Mat companion_;
    std::vector<Mat> rho_basis_;
    Mat Q_;
    Mat trace_form_;
    Rat trace_form_det_;
    Mat dual_;
};

// Complex determinant by Gaussian elimination.
Cx det_complex(std::vector<std::vector<Cx>> M);

} // namespace shintani
