#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ladic/core/padic_scalar.hpp"

namespace ladic {

using Exponent = std::vector<int>;

int total_degree(const Exponent& n);

// Lower total degree first; inside one degree the lexicographically larger
// exponent first, so T1 precedes T2.
struct MonomialLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

// All exponents in b variables with total degree in [lo, hi], in monomial order.
std::vector<Exponent> monomials(int vars, int lo, int hi);

std::string format_exponent(const Exponent& n);
Exponent parse_exponent(const std::string& text, int vars);

// Element of E<T_1..T_b> modulo monomials of total degree > D.
// Exact zero coefficients are never stored; zero-flagged ones are kept
// because their absolute precision matters.
class TruncatedSeries {
public:
    using Terms = std::map<Exponent, PadicScalar, MonomialLess>;

    TruncatedSeries() = default;
    TruncatedSeries(RingPtr ring, int vars, int degree_cap);

    static TruncatedSeries constant(RingPtr ring, int vars, int degree_cap, const PadicScalar& c);
    static TruncatedSeries one(RingPtr ring, int vars, int degree_cap);
    static TruncatedSeries variable(RingPtr ring, int vars, int degree_cap, int index);
    static TruncatedSeries monomial(RingPtr ring, int degree_cap, const Exponent& n, const PadicScalar& c);

    const RingPtr& ring() const { return ring_; }
    int vars() const { return vars_; }
    int degree_cap() const { return cap_; }
    const Terms& terms() const { return terms_; }

    PadicScalar coeff(const Exponent& n) const;
    PadicScalar constant_term() const { return coeff(Exponent(vars_, 0)); }
    void set(const Exponent& n, const PadicScalar& c);
    void add_to(const Exponent& n, const PadicScalar& c);

    // Every coefficient is zero-flagged.
    bool is_zero() const;
    bool is_exact_zero() const { return terms_.empty(); }
    // Largest degree carrying a coefficient that is not zero-flagged; -1 if none.
    int degree() const;
    bool equals_at_precision(const TruncatedSeries& y) const;
    bool operator==(const TruncatedSeries& y) const { return vars_ == y.vars_ && cap_ == y.cap_ && terms_ == y.terms_; }
    bool operator!=(const TruncatedSeries& y) const { return !(*this == y); }

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& y) const;
    TruncatedSeries operator-(const TruncatedSeries& y) const;
    TruncatedSeries operator*(const TruncatedSeries& y) const;
    TruncatedSeries scaled(const PadicScalar& c) const;
    TruncatedSeries pow(int n) const;

    TruncatedSeries homogeneous_part(int d) const;
    TruncatedSeries with_cap(int degree_cap) const;

    // Replace T_i by images[i]; all images share the target ring, variable
    // count and degree cap.
    TruncatedSeries substitute(const std::vector<TruncatedSeries>& images) const;

    // One `<exponent> : <scalar>` line per stored coefficient, in monomial order.
    std::string serialize() const;
    static TruncatedSeries parse(RingPtr ring, int vars, int degree_cap, const std::vector<std::string>& lines);
    // Readable form such as `1 + 3*T1 - T1*T2^2`; inexact coefficients are
    // printed in serialized form.
    std::string pretty() const;

private:
    void check_compatible(const TruncatedSeries& y) const;

    RingPtr ring_;
    int vars_ = 0;
    int cap_ = 0;
    Terms terms_;
};

// Exponent q with |g| = l^{-q}: min over coefficients of v(g^(n)) + r |n|
// where the weight is rho = l^{-r}. nullopt when g is indistinguishable from 0.
std::optional<Rational> gauss_norm(const TruncatedSeries& g, std::optional<Rational> rho_exponent = std::nullopt);

} // namespace ladic
