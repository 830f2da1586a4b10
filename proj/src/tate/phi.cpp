#include "ladic/tate/phi.hpp"

#include <algorithm>

#include "ladic/core/error.hpp"
#include "ladic/core/faults.hpp"

namespace ladic {

TruncatedSeries phi_operator(const TruncatedSeries& g, const Exponent& m, const SigmaAction& sigma)
{
    require(sigma.diagonal, ErrorKind::NotDiagonal, "Phi is defined for diagonal sigma only");
    require(sigma.dim() == g.vars() && static_cast<int>(m.size()) == g.vars(), ErrorKind::DimensionMismatch, "Phi: size mismatch");
    const RingPtr& ring = g.ring();
    const PadicScalar am = alpha_power(sigma, m);
    const PadicScalar denom = PadicScalar::from_int(ring, 1) - am;
    require(!denom.is_zero() && denom.val_units() < ring->precision(), ErrorKind::DenominatorIndistinguishableFromZero,
            "1 - alpha^" + format_exponent(m) + " is not certified nonzero at precision " + std::to_string(ring->precision()));
    const PadicScalar inv = denom.inverse();
    const bool flipped = fault_active(Fault::phi_sign);
    TruncatedSeries r(ring, g.vars(), g.degree_cap());
    for (const auto& [n, c] : g.terms()) {
        if (total_degree(n) == 0) {
            r.set(n, c);
            continue;
        }
        const PadicScalar an = alpha_power(sigma, n);
        const PadicScalar num = flipped ? an + am : an - am;
        r.set(n, (num * inv) * c);
    }
    return r;
}

std::string UnitCertificate::serialize() const
{
    std::string out;
    for (size_t j = 0; j < steps.size(); ++j)
        out += "step " + std::to_string(j + 1) + ": m=" + format_exponent(steps[j].m) + " loss=" + std::to_string(steps[j].loss) + "\n";
    return out;
}

namespace {

// v(1 - alpha^n) in lambda-digits, with the hypothesis alpha^n != 1 enforced.
int stratum_of(const SigmaAction& sigma, const Exponent& n)
{
    const RingPtr& ring = sigma.ring;
    const PadicScalar d = PadicScalar::from_int(ring, 1) - alpha_power(sigma, n);
    require(!d.is_exact_zero(), ErrorKind::HypothesisViolated, "alpha^" + format_exponent(n) + " = 1");
    require(!d.is_zero() && d.val_units() < ring->precision(), ErrorKind::DenominatorIndistinguishableFromZero,
            "1 - alpha^" + format_exponent(n) + " is not certified nonzero at precision " + std::to_string(ring->precision()));
    return d.val_units();
}

int recorded_loss(int v)
{
    if (fault_active(Fault::ledger_off_by_one) && v > 0) return v - 1;
    return v;
}

} // namespace

UnitCertificate certify_unit_ideal(const TruncatedSeries& g0, const SigmaAction& sigma, int max_steps)
{
    require(sigma.dim() == g0.vars(), ErrorKind::DimensionMismatch, "sigma size differs from variable count");
    const RingPtr& ring = g0.ring();
    const PadicScalar one = PadicScalar::from_int(ring, 1);
    require(g0.constant_term().equals_at_precision(one), ErrorKind::HypothesisViolated, "g0(0) must be 1");

    UnitCertificate cert;
    cert.precision = ring->precision();
    SigmaAction diag = sigma;
    TruncatedSeries g = g0;
    if (!sigma.diagonal) {
        const Diagonalization d = diagonalize(sigma);
        diag = d.diagonal;
        g = to_eigen_coordinates(g0, d);
        cert.diagonalized = true;
    }

    // alpha^n != 1 on every monomial of the truncation
    for (const auto& n : monomials(g.vars(), 1, g.degree_cap())) stratum_of(diag, n);

    std::vector<std::pair<int, Exponent>> order;
    for (const auto& [n, c] : g.terms()) {
        if (total_degree(n) == 0 || c.is_zero()) continue;
        order.emplace_back(stratum_of(diag, n), n);
    }
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return MonomialLess()(a.second, b.second);
    });
    int budget = 0;
    for (const auto& [w, n] : order) budget += recorded_loss(w);
    cert.residual = cert.precision - budget;
    require(cert.residual >= 1, ErrorKind::PrecisionBudgetExceeded,
            "division losses " + std::to_string(budget) + " leave no certified digit at precision " + std::to_string(cert.precision));

    for (const auto& [w, n] : order) {
        const PadicScalar c = g.coeff(n);
        if (c.is_exact_zero()) continue;
        if (c.is_zero()) {
            require(c.abs_precision() >= cert.residual, ErrorKind::PrecisionBudgetExceeded,
                    "coefficient " + format_exponent(n) + " is zero only to " + std::to_string(c.abs_precision()) + " digits");
            continue;
        }
        require(static_cast<int>(cert.steps.size()) < max_steps, ErrorKind::BudgetExceeded, "step budget exhausted");
        g = phi_operator(g, n, diag);
        cert.steps.push_back({n, recorded_loss(w)});
        cert.total_loss += recorded_loss(w);
    }
    for (const auto& [n, c] : g.terms()) {
        if (total_degree(n) == 0) continue;
        require(c.is_zero() && (c.is_exact_zero() || c.abs_precision() >= cert.residual), ErrorKind::PrecisionBudgetExceeded,
                "coefficient " + format_exponent(n) + " survived at the declared residual precision");
    }
    cert.final_element = g;
    return cert;
}

TruncatedSeries replay_certificate(const TruncatedSeries& g0, const SigmaAction& sigma, const UnitCertificate& cert)
{
    SigmaAction diag = sigma;
    TruncatedSeries g = g0;
    if (cert.diagonalized) {
        const Diagonalization d = diagonalize(sigma);
        diag = d.diagonal;
        g = to_eigen_coordinates(g0, d);
    }
    for (const auto& step : cert.steps) g = phi_operator(g, step.m, diag);
    return g;
}

} // namespace ladic
