#pragma once

#include <vector>

#include "ladic/core/padic_scalar.hpp"

namespace ladic {

// Point of the polydisc |T_i| <= rho = l^{-radius}.
struct PolydiscPoint {
    std::vector<PadicScalar> coords;
    Rational radius;
};

// X_i = exp(T_i) - 1; needs radius > 1/(l-1).
std::vector<PadicScalar> exp_chart(const PolydiscPoint& p);
// T_i = log(1 + X_i); needs every v(X_i) >= radius > 1/(l-1).
std::vector<PadicScalar> log_chart(const std::vector<PadicScalar>& x, const Rational& radius);

// Number of exp terms summed so that v(T^n / n!) >= n v - (n-1)/(l-1) certifies
// the tail beyond `target` (l-adic units).
int exp_terms_needed(i64 prime, const Rational& v, const Rational& target);

} // namespace ladic
