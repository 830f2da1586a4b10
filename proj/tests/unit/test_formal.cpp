#include "doctest.h"

#include <numeric>
#include <random>

#include <gmpxx.h>

#include "ladic/core/error.hpp"
#include "ladic/core/faults.hpp"
#include "ladic/formal/charts.hpp"
#include "ladic/formal/divisibility.hpp"
#include "ladic/formal/quasilinear.hpp"

using namespace ladic;

namespace {

TruncatedSeries series(const RingPtr& R, int b, int D, const std::vector<std::pair<Exponent, i64>>& terms)
{
    TruncatedSeries g(R, b, D);
    for (const auto& [n, c] : terms) g.set(n, PadicScalar::from_int(R, c));
    return g;
}

// support in degree <= top (default: the whole cap)
TruncatedSeries random_series(const RingPtr& R, int b, int D, std::mt19937_64& rng, int top = -1)
{
    std::uniform_int_distribution<int> coin(0, 2), coeff(-9, 9);
    TruncatedSeries g(R, b, D);
    for (const auto& n : monomials(b, 0, top < 0 ? D : top))
        if (coin(rng) == 0) g.set(n, PadicScalar::from_int(R, coeff(rng)));
    return g;
}

// chi * psi on labels at a common level
Character product(const RingPtr& F, const TorsionLabel& a, const TorsionLabel& b)
{
    const int L = std::max(a.level, b.level);
    TorsionLabel c = a.at_level(F->prime(), L);
    const TorsionLabel d = b.at_level(F->prime(), L);
    for (size_t i = 0; i < c.exponents.size(); ++i) c.exponents[i] += d.exponents[i];
    return torsion_character(F, c);
}

Character concat(const Character& a, const Character& b)
{
    Character c = a;
    c.images.insert(c.images.end(), b.images.begin(), b.images.end());
    c.label.reset();
    return c;
}

bool is_zero_value(const PadicScalar& x) { return x.is_zero(); }

// exp(t) modulo l^N from exact rational partial sums
i64 exp_oracle(i64 l, i64 t, int N)
{
    mpq_class sum = 0, term = 1;
    for (int n = 0; n <= 80; ++n) {
        if (n) term = term * t / n;
        sum += term;
    }
    sum.canonicalize();
    const mpz_class m = static_cast<long>(ipow(l, N));
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), sum.get_den().get_mpz_t(), m.get_mpz_t());
    mpz_class r = (sum.get_num() * inv) % m;
    if (r < 0) r += m;
    return r.get_si();
}

} // namespace

TEST_CASE("evaluation at characters")
{
    auto F = RingParams::cyclotomic(5, 1, 6);
    auto Q = RingParams::trivial(5, 6);
    CHECK(evaluate_at_character(series(Q, 1, 4, {{{1}, 1}}), trivial_character(F, 1)).is_zero());
    const auto z5 = torsion_character(F, {1, {1}});
    const auto v = evaluate_at_character(series(Q, 1, 4, {{{0}, 1}, {{1}, 1}}), z5);
    CHECK(v.equals_at_precision(root_of_unity(F, 1)));
    CHECK(v.equals_at_precision(PadicScalar::from_int(F, 1) + PadicScalar::uniformizer(F)));
    // (1 + X)^5 - 1 kills every 5-torsion point
    const auto f = series(Q, 1, 5, {{{1}, 5}, {{2}, 10}, {{3}, 10}, {{4}, 5}, {{5}, 1}});
    for (const auto& chi : torsion_points(F, 1, 1)) CHECK(evaluate_at_character(f, chi).is_zero());
    auto U = RingParams::unramified(5, {2, 0, 1}, 4);
    CHECK_THROWS_AS(evaluate_at_character(series(U, 1, 2, {{{1}, 1}}), z5), Error);
    try {
        evaluate_at_character(series(U, 1, 2, {{{1}, 1}}), z5);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
}

TEST_CASE("character serialization and labels")
{
    auto F = RingParams::cyclotomic(3, 2, 6);
    const auto chi = torsion_character(F, {2, {3, 0}});
    REQUIRE(chi.label.has_value());
    CHECK(chi.label->level == 1);
    CHECK(chi.label->exponents == std::vector<i64>{1, 0});
    CHECK(chi.order == 3);
    CHECK(chi.serialize().rfind("chi: [", 0) == 0);
    CHECK(chi.serialize().find("order=3 field=[prime=3;") != std::string::npos);
    CHECK(chi.images[0].pow(3).equals_at_precision(PadicScalar::from_int(F, 1)));
    CHECK(!chi.images[0].equals_at_precision(PadicScalar::from_int(F, 1)));
}

TEST_CASE("torsion point enumeration")
{
    auto F3 = RingParams::cyclotomic(3, 1, 4);
    CHECK(torsion_points(F3, 0, 2).size() == 1);
    const auto p = torsion_points(F3, 1, 1);
    REQUIRE(p.size() == 3);
    CHECK(p[0].label->exponents == std::vector<i64>{0});
    CHECK(p[2].label->exponents == std::vector<i64>{2});
    auto F2 = RingParams::cyclotomic(2, 2, 6);
    const auto q = torsion_points(F2, 2, 2);
    REQUIRE(q.size() == 16);
    CHECK(q[1].label->exponents == std::vector<i64>{0, 1});
    CHECK(q[4].label->exponents == std::vector<i64>{1, 0});
    try {
        torsion_points(F3, 2, 1);
        FAIL("expected FieldTooSmall");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldTooSmall);
    }
    CHECK_THROWS_AS(torsion_points(RingParams::trivial(3, 4), 1, 1), Error);
}

TEST_CASE("comultiplication is the group law on characters")
{
    std::mt19937_64 rng(11);
    for (i64 l : {2, 3}) {
        auto F = RingParams::cyclotomic(l, l == 2 ? 2 : 1, 10);
        auto Q = RingParams::trivial(l, 10);
        const int n = l == 2 ? 2 : 1;
        for (int b = 1; b <= 2; ++b) {
            const auto pts = torsion_points(F, n, b);
            for (int it = 0; it < 4; ++it) {
                const auto g = random_series(Q, b, 8, rng, 4);
                const auto dg = comultiply(g);
                CHECK(dg.vars() == 2 * b);
                for (size_t i = 0; i < pts.size(); i += 3)
                    for (size_t j = 0; j < pts.size(); j += 2) {
                        const auto lhs = evaluate_at_character(dg, concat(pts[i], pts[j]));
                        const auto rhs = evaluate_at_character(g, product(F, *pts[i].label, *pts[j].label));
                        CHECK(lhs.equals_at_precision(rhs));
                    }
            }
        }
    }
}

TEST_CASE("counit and coassociativity")
{
    std::mt19937_64 rng(5);
    auto Q = RingParams::trivial(3, 8);
    for (int b = 1; b <= 2; ++b)
        for (int it = 0; it < 10; ++it) {
            const int D = 4;
            const auto g = random_series(Q, b, D, rng);
            const auto dg = comultiply(g);
            // Y' -> 0 recovers g
            std::vector<TruncatedSeries> counit;
            for (int i = 0; i < b; ++i) counit.push_back(TruncatedSeries::variable(Q, b, D, i));
            for (int i = 0; i < b; ++i) counit.push_back(TruncatedSeries(Q, b, D));
            CHECK(dg.substitute(counit) == g);
            auto law = [&](int x, int y) {
                const auto a = TruncatedSeries::variable(Q, 3 * b, D, x), c = TruncatedSeries::variable(Q, 3 * b, D, y);
                return a + c + a * c;
            };
            std::vector<TruncatedSeries> left, right;
            for (int i = 0; i < b; ++i) {
                left.push_back(law(i, b + i));
                right.push_back(TruncatedSeries::variable(Q, 3 * b, D, i));
            }
            for (int i = 0; i < b; ++i) {
                left.push_back(TruncatedSeries::variable(Q, 3 * b, D, 2 * b + i));
                right.push_back(law(b + i, 2 * b + i));
            }
            CHECK(dg.substitute(left) == dg.substitute(right));
        }
}

TEST_CASE("l-power isogeny")
{
    auto Q2 = RingParams::trivial(2, 8);
    const auto x = series(Q2, 1, 4, {{{1}, 1}});
    CHECK(ell_power_isogeny(x, 1) == series(Q2, 1, 4, {{{1}, 2}, {{2}, 1}}));
    CHECK(ell_power_isogeny(x, 0) == x);
    std::mt19937_64 rng(3);
    for (i64 l : {2, 3, 5}) {
        auto Q = RingParams::trivial(l, 6);
        for (int it = 0; it < 6; ++it) {
            const auto g = random_series(Q, 2, 5, rng);
            for (int a = 0; a <= 2; ++a)
                for (int c = 0; c <= 2; ++c) CHECK(ell_power_isogeny(ell_power_isogeny(g, c), a) == ell_power_isogeny(g, a + c));
        }
    }
    // [l] g at chi equals g at chi^l
    auto F = RingParams::cyclotomic(2, 2, 8);
    auto Q = RingParams::trivial(2, 8);
    for (int it = 0; it < 5; ++it) {
        const auto g = random_series(Q, 1, 8, rng, 4);
        for (const auto& chi : torsion_points(F, 2, 1)) {
            TorsionLabel sq = *chi.label;
            sq.exponents[0] *= 2;
            CHECK(evaluate_at_character(ell_power_isogeny(g, 1), chi).equals_at_precision(evaluate_at_character(g, torsion_character(F, sq))));
        }
    }
}

TEST_CASE("inversion twist")
{
    auto Q = RingParams::trivial(3, 8);
    const auto x = series(Q, 1, 4, {{{1}, 1}});
    CHECK(inversion_twist(x) == series(Q, 1, 4, {{{1}, -1}, {{2}, 1}, {{3}, -1}, {{4}, 1}}));
    std::mt19937_64 rng(9);
    auto F = RingParams::cyclotomic(3, 1, 8);
    for (int it = 0; it < 10; ++it) {
        // the twist is a power series; cap 12 leaves a tail of valuation >= 13 lambda-digits
        const auto g = random_series(Q, 2, 12, rng, 4);
        const auto t = inversion_twist(g);
        CHECK(inversion_twist(t) == g);
        CHECK(t.constant_term() == g.constant_term());
        for (const auto& chi : torsion_points(F, 1, 2)) {
            TorsionLabel inv = *chi.label;
            for (auto& a : inv.exponents) a = -a;
            CHECK(evaluate_at_character(t, chi).equals_at_precision(evaluate_at_character(g, torsion_character(F, inv))));
        }
    }
}

TEST_CASE("torsion ideal membership examples")
{
    auto Q = RingParams::trivial(2, 8);
    CHECK(torsion_ideal_membership(series(Q, 1, 4, {{{1}, 2}, {{2}, 1}}), 1));
    CHECK(!torsion_ideal_membership(series(Q, 1, 4, {{{1}, 1}}), 1));
    CHECK(torsion_ideal_membership(TruncatedSeries(Q, 1, 4), 1));
    TruncatedSeries fuzzy(Q, 1, 4);
    fuzzy.set({1}, PadicScalar::zero_to(Q, 3));
    try {
        torsion_ideal_membership(fuzzy, 1);
        FAIL("expected PrecisionUncertain");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecisionUncertain);
    }
}

TEST_CASE("torsion density: membership iff vanishing at all torsion points")
{
    std::mt19937_64 rng(21);
    int members = 0, others = 0;
    for (i64 l : {2, 3})
        for (int b = 1; b <= 2; ++b)
            for (int n = 1; n <= 2; ++n) {
                const int e = static_cast<int>((l - 1) * ipow(l, n - 1));
                auto F = RingParams::cyclotomic(l, n, 10 * e);
                auto Q = RingParams::trivial(l, 10);
                const auto pts = torsion_points(F, n, b);
                const auto f = torsion_generator(Q, n);
                for (int it = 0; it < 8; ++it) {
                    TruncatedSeries g = random_series(Q, b, 4, rng);
                    if (it % 2 == 0) {
                        // g = sum_i h_i f(x_i) within degree 4
                        g = TruncatedSeries(Q, b, 4);
                        for (int i = 0; i < b; ++i) {
                            TruncatedSeries fi(Q, b, 4);
                            for (size_t r = 1; r < f.size() && static_cast<int>(r) <= 4; ++r) {
                                Exponent ex(b, 0);
                                ex[i] = static_cast<int>(r);
                                fi.set(ex, f[r]);
                            }
                            if (static_cast<int>(f.size()) - 1 > 4) continue;
                            g = g + fi * random_series(Q, b, 4 - static_cast<int>(f.size() - 1), rng).with_cap(4);
                        }
                    }
                    bool vanish = true;
                    for (const auto& chi : pts) vanish = vanish && is_zero_value(evaluate_at_character(g, chi));
                    const bool member = torsion_ideal_membership(g, n);
                    CHECK(member == vanish);
                    (member ? members : others)++;
                }
            }
    CHECK(members > 0);
    CHECK(others > 0);
}

TEST_CASE("exp and log charts")
{
    auto R = RingParams::trivial(5, 3);
    const auto X = exp_chart({{PadicScalar::from_int(R, 5)}, Rational(1)});
    CHECK(X[0].equals_at_precision(PadicScalar::from_int(R, 80)));
    CHECK(exp_oracle(5, 5, 3) == 81);
    try {
        exp_chart({{PadicScalar::from_int(RingParams::trivial(2, 6), 2)}, Rational(1)});
        FAIL("expected RadiusViolation");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::RadiusViolation);
    }
    CHECK_THROWS_AS(exp_chart({{PadicScalar::from_int(R, 1)}, Rational(1)}), Error);

    std::mt19937_64 rng(4);
    for (i64 l : {2, 3, 5}) {
        const int N = 8;
        auto Q = RingParams::trivial(l, N);
        const i64 step = l == 2 ? 4 : l;
        const Rational rho(l == 2 ? 2 : 1);
        std::uniform_int_distribution<i64> k(-40, 40);
        for (int it = 0; it < 25; ++it) {
            const i64 t1 = step * k(rng), t2 = step * k(rng);
            const auto x = exp_chart({{PadicScalar::from_int(Q, t1), PadicScalar::from_int(Q, t2)}, rho});
            CHECK(x[0].abs_precision() >= N);
            CHECK((x[0] + PadicScalar::from_int(Q, 1)).equals_at_precision(PadicScalar::from_int(Q, exp_oracle(l, t1, N))));
            const auto back = log_chart(x, rho);
            CHECK(back[0].equals_at_precision(PadicScalar::from_int(Q, t1)));
            CHECK(back[1].equals_at_precision(PadicScalar::from_int(Q, t2)));
            // exp(T1 + T2) = (1 + X1)(1 + X2)
            const auto s = exp_chart({{PadicScalar::from_int(Q, t1 + t2)}, rho});
            const auto one = PadicScalar::from_int(Q, 1);
            CHECK((s[0] + one).equals_at_precision((x[0] + one) * (x[1] + one)));
        }
    }
    // ramified chart: v(lambda^2) = 1 > 1/2 at l = 3
    auto F = RingParams::cyclotomic(3, 1, 10);
    const auto lam = PadicScalar::uniformizer(F);
    const auto t = lam * lam * PadicScalar::from_int(F, 7);
    const auto x = exp_chart({{t}, Rational(1)});
    CHECK(log_chart(x, Rational(1))[0].equals_at_precision(t));
    CHECK_THROWS_AS(exp_chart({{lam}, Rational(1, 2)}), Error);
}

TEST_CASE("exp term count follows the factorial bound")
{
    CHECK(exp_terms_needed(5, Rational(1), Rational(3)) == 3);
    for (i64 l : {2, 3, 5, 7})
        for (int v = 1; v <= 3; ++v) {
            const Rational val = Rational(v) + (l == 2 ? Rational(1) : Rational(0));
            const int M = exp_terms_needed(l, val, Rational(6));
            // every skipped term is small enough by the exact factorial valuation
            for (int n = M + 1; n < M + 40; ++n) CHECK(Rational(n) * val - Rational(factorial_ord(l, n)) >= Rational(6));
        }
}

TEST_CASE("pro-system divisibility")
{
    CHECK(prosystem_divisibility_check(2, 1, 1).holds);
    CHECK(prosystem_divisibility_check(5, 2, 2).holds);
    for (i64 l : {2, 3, 5, 7})
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= n; ++m) {
                const auto rep = prosystem_divisibility_check(l, m, n);
                CHECK(rep.holds);
                // lowest surviving degree from Legendre valuations
                i64 low = 0;
                for (i64 r = 1; r <= ipow(l, n) && !low; ++r)
                    if (binom_valuation(l, n, r) < m) low = r;
                CHECK(rep.lowest_surviving == low);
                CHECK(rep.threshold == ipow(l, n - m + 1));
            }
}

TEST_CASE("smith invariants and saturation")
{
    const auto inv = smith_invariants({{2, 4}, {6, 8}});
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 4);
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<i64> d(-9, 9);
    for (int it = 0; it < 100; ++it) {
        IntMatrix m(3, std::vector<i64>(3));
        for (auto& row : m)
            for (auto& x : row) x = d(rng);
        const i64 det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        i64 g = 0;
        for (auto& row : m)
            for (auto x : row) g = std::gcd(g, x);
        const auto s = smith_invariants(m);
        if (det == 0) {
            CHECK(s.size() < 3);
            continue;
        }
        REQUIRE(s.size() == 3);
        CHECK(s[0] == mpz_class(static_cast<long>(g)));
        CHECK(mpz_class(s[0] * s[1] * s[2]) == mpz_class(static_cast<long>(std::llabs(det))));
        CHECK(s[1] % s[0] == 0);
        CHECK(s[2] % s[1] == 0);
    }
    CHECK(is_saturated({{1}, {0}}, 3));
    CHECK(!is_saturated({{3}, {0}}, 3));
    CHECK(is_saturated({{2}, {0}}, 3));
    CHECK(!is_saturated({{1, 2}, {2, 4}}, 3));
    CHECK(lattice_equal({{1}, {1}}, {{2}, {2}}, 3, 2));
    CHECK(!lattice_equal({{1}, {1}}, {{3}, {3}}, 3, 2));
    const auto inv5 = inverse_mod({{2, 1}, {1, 1}}, 25);
    auto prod = multiply({{2, 1}, {1, 1}}, inv5);
    for (auto& row : prod)
        for (auto& x : row) x = mod(x, 25);
    CHECK(prod == IntMatrix{{1, 0}, {0, 1}});
    CHECK_THROWS_AS(inverse_mod({{5, 0}, {0, 1}}, 25), Error);
}

TEST_CASE("quasi-linear membership examples")
{
    auto F = RingParams::cyclotomic(3, 1, 4);
    QuasiLinearSet full(3, 2);
    full.add({{0, {0, 0}}, {}});
    CHECK(quasilinear_contains(full, trivial_character(F, 2)));
    QuasiLinearSet h(3, 2);
    h.add({{0, {0, 0}}, {{1}, {0}}});
    CHECK(!quasilinear_contains(h, torsion_character(F, {1, {1, 0}})));
    CHECK(quasilinear_contains(h, torsion_character(F, {1, {0, 2}})));
    QuasiLinearSet s(3, 2);
    s.add({{1, {1, 2}}, {{1}, {1}}});
    CHECK(quasilinear_contains(s, torsion_character(F, {1, {1, 2}})));
    CHECK(quasilinear_contains(s, torsion_character(F, {1, {2, 1}})));
    CHECK(!quasilinear_contains(s, torsion_character(F, {1, {1, 0}})));
    Character free = trivial_character(F, 2);
    free.label.reset();
    try {
        quasilinear_contains(s, free);
        FAIL("expected NonTorsionInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonTorsionInput);
    }
    CHECK(s.serialize() == "component 1: s=(1,2)@1 lattice=[(1,1)]\n");
    QuasiLinearSet bad(3, 2);
    CHECK_THROWS_AS(bad.add({{0, {0, 0}}, {{3}, {0}}}), Error);
}

TEST_CASE("quasi-linear sigma images")
{
    QuasiLinearSet triv(3, 2);
    triv.add({{0, {0, 0}}, {{1, 0}, {0, 1}}});
    CHECK(quasilinear_sigma_image(triv, {{2, 0}, {0, 5}}).stable);
    QuasiLinearSet h(3, 2);
    h.add({{0, {0, 0}}, {{1}, {0}}});
    CHECK(quasilinear_sigma_image(h, {{2, 0}, {0, 4}}).stable);
    CHECK(!quasilinear_sigma_image(h, {{0, 1}, {1, 0}}).stable);
    CHECK_THROWS_AS(quasilinear_sigma_image(h, {{3, 0}, {0, 1}}), Error);

    // image torsion points are exactly {psi : sigma^T psi in S}
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<i64> d(-4, 4);
    for (i64 l : {2, 3}) {
        const int n = 2;
        const i64 m = ipow(l, n);
        for (int it = 0; it < 20; ++it) {
            IntMatrix sigma;
            do {
                sigma = {{d(rng), d(rng)}, {d(rng), d(rng)}};
            } while (mod(sigma[0][0] * sigma[1][1] - sigma[0][1] * sigma[1][0], l) == 0);
            QuasiLinearSet s(l, 2);
            s.add({{n, {mod(d(rng), m), mod(d(rng), m)}}, {{1}, {mod(d(rng), m)}}});
            s.add({{1, {mod(d(rng), l), 0}}, {}});
            const auto rep = quasilinear_sigma_image(s, sigma);
            CHECK(rep.saturated);
            std::vector<TorsionLabel> expect;
            for (i64 a = 0; a < m; ++a)
                for (i64 c = 0; c < m; ++c) {
                    TorsionLabel pulled{n, {mod(sigma[0][0] * a + sigma[1][0] * c, m), mod(sigma[0][1] * a + sigma[1][1] * c, m)}};
                    if (s.contains(pulled)) expect.push_back({n, {a, c}});
                }
            CHECK(torsion_points_of(rep.image, n) == expect);
            CHECK(rep.stable == same_torsion_points(s, rep.image, 3));
        }
    }
}

TEST_CASE("l-image and de Jong check")
{
    QuasiLinearSet s(3, 1);
    s.add({{1, {1}}, {{1}}});
    const auto dj = de_jong_check(s, 2);
    CHECK(!dj.holds);
    QuasiLinearSet t(3, 2);
    t.add({{0, {0, 0}}, {{1}, {0}}});
    CHECK(de_jong_check(t, 2).holds);
    CHECK(same_torsion_points(ell_image(t), t, 2));
}

TEST_CASE("unsaturated-lattice fault accepts non-saturated lattices")
{
    set_fault(Fault::unsaturated_lattice);
    const bool accepted = is_saturated({{3}, {0}}, 3);
    set_fault(Fault::none);
    CHECK(accepted);
    CHECK(!is_saturated({{3}, {0}}, 3));
}
