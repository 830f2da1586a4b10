#include "ladic/formal/charts.hpp"

#include <algorithm>

#include "ladic/core/error.hpp"

namespace ladic {

namespace {

Rational threshold(i64 p) { return Rational(1, p - 1); }

// Lower bound for the valuation of a coordinate; radius when it is zero-flagged.
Rational coordinate_valuation(const PadicScalar& x, const Rational& radius, const std::string& what)
{
    const auto v = x.valuation();
    if (!v) {
        if (x.is_exact_zero()) return radius;
        return std::max(radius, Rational(x.abs_precision(), x.ring()->ramification()));
    }
    require(*v >= radius, ErrorKind::RadiusViolation, what + " coordinate lies outside the polydisc");
    return *v;
}

Rational target_of(const RingPtr& ring) { return Rational(ring->precision(), ring->ramification()); }

} // namespace

int exp_terms_needed(i64 prime, const Rational& v, const Rational& target)
{
    require(v > threshold(prime), ErrorKind::RadiusViolation, "exp needs v > 1/(l-1)");
    // n v - (n-1)/(l-1) increases with n
    int n = 1;
    while (Rational(n) * v - Rational(n - 1, prime - 1) < target) ++n;
    return n - 1;
}

namespace {

// Last n with n v - floor(log_l n) < target.
int log_terms_needed(i64 prime, const Rational& v, const Rational& target)
{
    auto bound = [&](i64 n) {
        int k = 0;
        for (i64 q = prime; q <= n; q *= prime) ++k;
        return Rational(n) * v - Rational(k);
    };
    int last = 0;
    for (i64 n = 1;; ++n) {
        if (bound(n) < target) {
            last = static_cast<int>(n);
            continue;
        }
        // minima of the bound sit at powers of l and grow from there on
        i64 q = 1;
        while (q <= n) q *= prime;
        if (bound(q) >= target) break;
    }
    return last;
}

} // namespace

std::vector<PadicScalar> exp_chart(const PolydiscPoint& p)
{
    require(!p.coords.empty(), ErrorKind::DimensionMismatch, "empty point");
    const RingPtr& ring = p.coords.front().ring();
    const i64 l = ring->prime();
    require(p.radius > threshold(l), ErrorKind::RadiusViolation, "exp chart needs radius exponent > 1/(l-1)");
    std::vector<PadicScalar> out;
    for (const auto& t : p.coords) {
        const Rational v = coordinate_valuation(t, p.radius, "exp");
        const int terms = exp_terms_needed(l, v, target_of(ring));
        PadicScalar term = PadicScalar::from_int(ring, 1), sum(ring);
        for (int n = 1; n <= terms; ++n) {
            term = (term * t) / PadicScalar::from_int(ring, n);
            sum = sum + term;
        }
        out.push_back(sum + PadicScalar::zero_to(ring, ring->precision()));
    }
    return out;
}

std::vector<PadicScalar> log_chart(const std::vector<PadicScalar>& x, const Rational& radius)
{
    require(!x.empty(), ErrorKind::DimensionMismatch, "empty point");
    const RingPtr& ring = x.front().ring();
    const i64 l = ring->prime();
    require(radius > threshold(l), ErrorKind::RadiusViolation, "log chart needs radius exponent > 1/(l-1)");
    std::vector<PadicScalar> out;
    for (const auto& xi : x) {
        const Rational v = coordinate_valuation(xi, radius, "log");
        const int terms = log_terms_needed(l, v, target_of(ring));
        PadicScalar power = PadicScalar::from_int(ring, 1), sum(ring);
        for (int n = 1; n <= terms; ++n) {
            power = power * xi;
            const PadicScalar term = power / PadicScalar::from_int(ring, n);
            sum = n % 2 ? sum + term : sum - term;
        }
        out.push_back(sum + PadicScalar::zero_to(ring, ring->precision()));
    }
    return out;
}

} // namespace ladic
