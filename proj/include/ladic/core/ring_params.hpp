#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ladic/core/integer.hpp"

namespace ladic {

enum class ExtensionKind { trivial, unramified, eisenstein };

std::string to_string(ExtensionKind kind);

// A finite extension E/Q_l given by one monic defining polynomial, either
// unramified (irreducible mod l) or Eisenstein at l, together with the
// number N of lambda-adic digits every scalar carries.
//
// Elements of O_E are stored as polynomials in the generator theta of
// degree < deg(poly) with coefficients modulo l^k, k = ceil(N/e) + 1.
// For the Eisenstein kind theta is the uniformizer itself.
class RingParams {
public:
    static std::shared_ptr<const RingParams> trivial(i64 prime, int precision);
    static std::shared_ptr<const RingParams> unramified(i64 prime, std::vector<i64> poly, int precision);
    static std::shared_ptr<const RingParams> eisenstein(i64 prime, std::vector<i64> poly, int precision);
    // Q_l(zeta_{l^n}) generated by t = zeta - 1, t a root of Phi_{l^n}(1 + t).
    static std::shared_ptr<const RingParams> cyclotomic(i64 prime, int level, int precision);
    static std::shared_ptr<const RingParams> make(i64 prime, ExtensionKind kind, std::vector<i64> poly, int precision);

    // Parse/emit `prime=<l>; kind=<k>; poly=<coeffs>; precision=<N>`.
    static std::shared_ptr<const RingParams> parse_header(const std::string& text);
    std::string header() const;

    i64 prime() const { return prime_; }
    ExtensionKind kind() const { return kind_; }
    // Defining polynomial, coefficients reduced modulo l^k.
    const std::vector<i64>& poly() const { return poly_; }
    // Defining polynomial as given.
    const std::vector<i64>& integer_poly() const { return input_poly_; }
    int degree() const { return static_cast<int>(poly_.size()) - 1; }
    int ramification() const { return e_; }
    int residue_degree() const { return f_; }
    int precision() const { return precision_; }
    int coeff_digits() const { return k_; }
    i64 coeff_modulus() const { return modulus_; }
    // Level n when this is Q_l(zeta_{l^n}) built by cyclotomic(); 0 otherwise.
    int cyclotomic_level() const { return cyclo_level_; }
    // Theta-coefficients of l / lambda modulo l^k (Eisenstein kind), computed
    // from the integer defining polynomial so no digit is lost.
    const std::vector<i64>& ell_over_lambda() const { return ell_over_lambda_; }
    // Number of elements of the residue field.
    i64 residue_cardinality() const { return ipow(prime_, f_); }

    bool same_field(const RingParams& other) const;
    bool operator==(const RingParams& other) const;

private:
    RingParams() = default;
    void validate();

    i64 prime_ = 2;
    ExtensionKind kind_ = ExtensionKind::trivial;
    std::vector<i64> poly_;
    int e_ = 1;
    int f_ = 1;
    int precision_ = 1;
    int k_ = 1;
    i64 modulus_ = 2;
    int cyclo_level_ = 0;
    std::vector<i64> ell_over_lambda_;
    std::vector<i64> input_poly_;
};

using RingPtr = std::shared_ptr<const RingParams>;

// Same field with a different digit count.
RingPtr with_precision(const RingPtr& ring, int precision);

} // namespace ladic
