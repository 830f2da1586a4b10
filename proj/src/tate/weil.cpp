#include "ladic/tate/weil.hpp"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_complex.hpp>
#include <gmpxx.h>

#include "ladic/core/error.hpp"

namespace ladic {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

namespace {

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly poly_rem(QPoly a, const QPoly& b)
{
    trim(a);
    while (a.size() >= b.size()) {
        const mpq_class f = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        trim(a);
    }
    return a;
}

QPoly poly_div(QPoly a, const QPoly& b)
{
    trim(a);
    if (a.size() < b.size()) return {};
    QPoly q(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size()) {
        const mpq_class f = a.back() / b.back();
        const size_t shift = a.size() - b.size();
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
        trim(a);
    }
    return q;
}

QPoly poly_gcd(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        QPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

// Does the polynomial commute with z -> c^2 / z, c^{2d} = a0^2 ?
bool inversion_symmetric(const std::vector<i64>& s)
{
    const int d = static_cast<int>(s.size()) - 1;
    const mpz_class a0 = static_cast<long>(s[0]);
    const mpz_class abs0 = abs(a0);
    for (int k = 0; k <= d; ++k) {
        const mpz_class ak = static_cast<long>(s[k]), adk = static_cast<long>(s[d - k]);
        if (ak == 0) {
            if (adk != 0) return false;
            continue;
        }
        mpq_class t(a0 * adk);
        t /= ak;
        if (sgn(t) <= 0) return false;
        mpq_class lhs = 1;
        for (int i = 0; i < d; ++i) lhs *= t;
        mpz_class rhs = 1;
        for (int i = 0; i < 2 * k; ++i) rhs *= abs0;
        if (lhs != mpq_class(rhs)) return false;
    }
    return true;
}

enum class Isolation { on_circle, off_circle, undecided };

template <class C>
Isolation isolate(const std::vector<i64>& s, int digits)
{
    using R = typename C::value_type;
    const int d = static_cast<int>(s.size()) - 1;
    const R abs0 = R(std::llabs(s[0]));
    const R c = pow(abs0, R(1) / R(d));
    const R c2 = c * c;
    auto eval = [&](const C& z) {
        C v(R(s[d]));
        for (int i = d - 1; i >= 0; --i) v = v * z + C(R(s[i]));
        return v;
    };
    auto deval = [&](const C& z) {
        C v(R(s[d]) * R(d));
        for (int i = d - 1; i >= 1; --i) v = v * z + C(R(s[i]) * R(i));
        return v;
    };
    std::vector<C> z(d);
    const R two_pi = 2 * boost::math::constants::pi<R>();
    for (int i = 0; i < d; ++i) {
        const R ang = two_pi * (R(i) + R(0.4)) / R(d);
        z[i] = C(c * R(1.1) * cos(ang), c * R(1.1) * sin(ang));
    }
    const R tol = pow(R(10), -R(digits - 8));
    for (int it = 0; it < 2000; ++it) {
        R biggest = 0;
        for (int i = 0; i < d; ++i) {
            const C ratio = eval(z[i]) / deval(z[i]);
            C sum(0);
            for (int j = 0; j < d; ++j)
                if (j != i) sum += C(1) / (z[i] - z[j]);
            const C step = ratio / (C(1) - ratio * sum);
            z[i] -= step;
            biggest = std::max(biggest, R(abs(step) / (R(1) + abs(z[i]))));
        }
        if (biggest < tol) break;
    }
    // inclusion disks |w - z_i| <= d |p(z_i)| / prod |z_i - z_j|, inflated for rounding
    const R slack = pow(R(10), -R(digits - 12));
    std::vector<R> r(d);
    for (int i = 0; i < d; ++i) {
        R prod = 1;
        for (int j = 0; j < d; ++j)
            if (j != i) prod *= abs(z[i] - z[j]);
        if (prod == 0) return Isolation::undecided;
        r[i] = 2 * R(d) * abs(eval(z[i])) / prod + slack * (R(1) + abs(z[i]));
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (abs(z[i] - z[j]) <= r[i] + r[j]) return Isolation::undecided;
    bool all_on = true;
    for (int i = 0; i < d; ++i) {
        const R m2 = norm(z[i]);
        if (m2 <= r[i] * r[i]) return Isolation::undecided;
        const R den = m2 - r[i] * r[i];
        const C center = z[i] * (c2 / den);
        const R radius = c2 * r[i] / den + slack * (R(1) + abs(z[i]));
        if (abs(center - z[i]) > radius + r[i]) return Isolation::off_circle;
        for (int j = 0; j < d; ++j)
            if (j != i && abs(center - z[j]) <= radius + r[j]) all_on = false;
    }
    return all_on ? Isolation::on_circle : Isolation::undecided;
}

std::string modulus_text(i64 a0, int d)
{
    const i64 a = std::llabs(a0);
    if (d == 1) return std::to_string(a);
    const double guess = std::round(std::pow(static_cast<double>(a), 1.0 / d));
    const i64 g = static_cast<i64>(guess);
    if (g >= 1) {
        auto p = checked_pow(g, d);
        if (p && *p == a) return std::to_string(g);
    }
    return std::to_string(a) + "^(1/" + std::to_string(d) + ")";
}

} // namespace

WeilReport weil_condition_check(const std::vector<i64>& charpoly)
{
    require(charpoly.size() >= 2 && charpoly.back() == 1, ErrorKind::MalformedInput, "characteristic polynomial must be monic of degree >= 1");
    require(charpoly.front() != 0, ErrorKind::MalformedInput, "characteristic polynomial needs a nonzero constant term");
    QPoly p, dp;
    for (i64 c : charpoly) p.emplace_back(static_cast<long>(c));
    for (size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<long>(i));
    const QPoly g = poly_gcd(p, dp);
    const QPoly sq = poly_div(p, g);
    std::vector<i64> s;
    for (const auto& c : sq) {
        require(c.get_den() == 1 && c.get_num().fits_slong_p(), ErrorKind::OutOfRange, "squarefree part is not a small integer polynomial");
        s.push_back(c.get_num().get_si());
    }

    WeilReport rep;
    rep.degree = static_cast<int>(s.size()) - 1;
    rep.constant = s[0];
    rep.modulus = modulus_text(s[0], rep.degree);
    rep.modulus_approx = std::pow(static_cast<double>(std::llabs(s[0])), 1.0 / rep.degree);
    rep.modulus_is_one = std::llabs(s[0]) == 1;
    if (rep.modulus_is_one) {
        rep.verdict = Verdict::fail;
        rep.reason = "the product of the root moduli is 1";
        return rep;
    }
    if (!inversion_symmetric(s)) {
        rep.verdict = Verdict::fail;
        rep.reason = "roots are not stable under z -> c^2/z, so their moduli differ";
        return rep;
    }
    if (rep.degree == 1) {
        rep.verdict = Verdict::pass;
        rep.same_modulus = true;
        rep.reason = "single root";
        return rep;
    }
    using boost::multiprecision::cpp_complex_50;
    using boost::multiprecision::cpp_complex_100;
    Isolation res = isolate<cpp_complex_50>(s, 50);
    rep.digits_used = 50;
    if (res == Isolation::undecided) {
        res = isolate<cpp_complex_100>(s, 100);
        rep.digits_used = 100;
    }
    switch (res) {
    case Isolation::on_circle:
        rep.verdict = Verdict::pass;
        rep.same_modulus = true;
        rep.reason = "every isolating disk is mapped to itself by the inversion in |z| = c";
        break;
    case Isolation::off_circle:
        rep.verdict = Verdict::fail;
        rep.reason = "an isolated root is moved off its disk by the inversion in |z| = c";
        break;
    case Isolation::undecided:
        rep.verdict = Verdict::inconclusive;
        rep.reason = "root isolation did not separate the roots at " + std::to_string(rep.digits_used) + " digits";
        break;
    }
    return rep;
}

} // namespace ladic
