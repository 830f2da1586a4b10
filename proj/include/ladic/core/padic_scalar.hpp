#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "ladic/core/integer.hpp"
#include "ladic/core/ring_params.hpp"

namespace ladic {

// Element of E = Frac(O_E) known modulo lambda^abs.
//
// Nonzero elements are lambda^v * u with u a unit known modulo lambda^rel,
// 1 <= rel <= N. An element whose known digits all vanish carries the
// zero-flag together with its absolute precision; the exact zero has
// infinite absolute precision. Elements built from rational integers keep
// the integer as an exact shadow, so cancellations among them are
// certified rather than merely "zero at precision N".
class PadicScalar {
public:
    static constexpr int kInfinite = INT_MAX / 4;

    PadicScalar() = default; // no ring; only for containers
    explicit PadicScalar(RingPtr ring); // exact zero

    static PadicScalar zero(RingPtr ring) { return PadicScalar(std::move(ring)); }
    // Zero known only modulo lambda^abs.
    static PadicScalar zero_to(RingPtr ring, int abs);
    static PadicScalar from_int(RingPtr ring, i64 n);
    static PadicScalar from_i128(RingPtr ring, i128 n);
    // sum_j c_j theta^j with integer c_j; theta = generator of the defining polynomial.
    static PadicScalar from_poly(RingPtr ring, const std::vector<i64>& coeffs);
    // Uniformizer lambda (l itself when unramified).
    static PadicScalar uniformizer(RingPtr ring);
    // Class of `rep` (theta-coefficients mod l^k) modulo lambda^abs.
    static PadicScalar from_rep(RingPtr ring, std::vector<i64> rep, int abs);

    const RingPtr& ring() const { return ring_; }
    bool is_zero() const { return zero_; }
    bool is_exact_zero() const { return zero_ && abs_ >= kInfinite; }
    // Valuation in lambda-units; for zero-flagged elements the absolute precision.
    int val_units() const { return zero_ ? abs_ : val_; }
    int rel_precision() const { return zero_ ? 0 : rel_; }
    int abs_precision() const { return zero_ ? abs_ : val_ + rel_; }
    // v with |x| = l^{-v}; nullopt is +infinity (zero-flagged).
    std::optional<Rational> valuation() const;
    const std::vector<i64>& unit() const { return unit_; }
    const std::optional<i128>& exact_integer() const { return exact_; }
    bool is_exact() const { return exact_.has_value(); }

    // Representative of the full value as theta-coefficients modulo l^k;
    // only meaningful for integral elements.
    std::vector<i64> rep() const;
    // Residue class in k (coefficients mod l of degree < f); requires v >= 0.
    std::vector<i64> residue() const;
    // True when v >= 0 (or zero-flagged).
    bool is_integral() const { return zero_ || val_ >= 0; }
    bool is_unit() const { return !zero_ && val_ == 0; }

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& y) const;
    PadicScalar operator-(const PadicScalar& y) const;
    PadicScalar operator*(const PadicScalar& y) const;
    PadicScalar operator/(const PadicScalar& y) const;
    PadicScalar& operator+=(const PadicScalar& y) { return *this = *this + y; }
    PadicScalar& operator-=(const PadicScalar& y) { return *this = *this - y; }
    PadicScalar& operator*=(const PadicScalar& y) { return *this = *this * y; }
    PadicScalar inverse() const;
    PadicScalar pow(i64 n) const;
    // Drops digits beyond lambda^abs.
    PadicScalar truncate_abs(int abs) const;

    // Structural equality (value, precision and flags; the exact shadow is provenance only).
    bool operator==(const PadicScalar& y) const;
    bool operator!=(const PadicScalar& y) const { return !(*this == y); }
    // x - y is zero-flagged.
    bool equals_at_precision(const PadicScalar& y) const;

    // `(v; d|d|...)`: v in lambda-units, then each theta-coefficient of the
    // unit as base-l digits, least significant first. Zero-flagged elements
    // print as `(zero; <abs>)`, the exact zero as `(zero; inf)`.
    std::string serialize() const;
    static PadicScalar parse(RingPtr ring, const std::string& text);
    // Accepts an integer literal or the serialized form.
    static PadicScalar parse_value(RingPtr ring, const std::string& text);

private:
    void check_same_ring(const PadicScalar& y) const;
    static PadicScalar make_nonzero(RingPtr ring, int val, int rel, std::vector<i64> unit);

    RingPtr ring_;
    bool zero_ = true;
    int abs_ = kInfinite; // zero-flagged only
    int val_ = 0;
    int rel_ = 0;
    std::vector<i64> unit_;
    std::optional<i128> exact_;
};

std::ostream& operator<<(std::ostream& os, const PadicScalar& x);

// Residue-field helpers used by Teichmueller lifts.
i64 residue_cardinality(const RingParams& ring);

// Teichmueller representative of a nonzero residue class a (coefficients
// mod l in the basis of the residue field). Unramified or trivial rings only.
PadicScalar teichmuller(const RingPtr& ring, const std::vector<i64>& residue);

// ord_l binom(l^n, r), computed with Legendre's formula.
int binom_valuation(i64 prime, int n, i64 r);

namespace detail {
// theta-coefficient arithmetic modulo l^k (exposed for tests and kernels)
std::vector<i64> o_mul(const RingParams& R, const std::vector<i64>& a, const std::vector<i64>& b);
std::vector<i64> o_add(const RingParams& R, const std::vector<i64>& a, const std::vector<i64>& b);
int o_valuation(const RingParams& R, const std::vector<i64>& a); // capped at e*k
std::vector<i64> o_reduce(const RingParams& R, std::vector<i64> a, int rel);
} // namespace detail

} // namespace ladic
