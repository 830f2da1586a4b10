#pragma once

#include <string>
#include <vector>

#include "ladic/tate/sigma.hpp"

namespace ladic {

// Phi^m(g) = (sigma(g) - alpha^m g) / (1 - alpha^m) for diagonal sigma,
// evaluated coefficientwise as ((alpha^n - alpha^m) / (1 - alpha^m)) g^(n).
// The constant term is carried over unchanged and the m-th coefficient is
// zero-flagged.
TruncatedSeries phi_operator(const TruncatedSeries& g, const Exponent& m, const SigmaAction& sigma);

struct CertificateStep {
    Exponent m;
    int loss = 0; // v(1 - alpha^m) in lambda-digits
};

struct UnitCertificate {
    std::vector<CertificateStep> steps;
    TruncatedSeries final_element;
    int precision = 0; // N
    int total_loss = 0;
    int residual = 0; // N - total_loss: 1 lies in the ideal modulo (deg > D, lambda^residual)
    // eigen-coordinates used when sigma had to be diagonalized first
    bool diagonalized = false;

    // `step <j>: m=<vector> loss=<digits>` lines
    std::string serialize() const;
};

// Kill every non-constant coefficient of g0 by successive Phi-applications,
// stratum by stratum (increasing v(1 - alpha^n)) and in monomial order inside
// a stratum.
UnitCertificate certify_unit_ideal(const TruncatedSeries& g0, const SigmaAction& sigma, int max_steps);

// Re-apply the listed steps to g0 (in the coordinates the certificate used).
TruncatedSeries replay_certificate(const TruncatedSeries& g0, const SigmaAction& sigma, const UnitCertificate& cert);

} // namespace ladic
