#include "doctest.h"

#include <random>

#include "ladic/core/error.hpp"
#include "ladic/tate/closure.hpp"
#include "ladic/tate/phi.hpp"
#include "ladic/tate/weil.hpp"

using namespace ladic;

namespace {

TruncatedSeries series(const RingPtr& R, int b, int D, const std::vector<std::pair<Exponent, i64>>& terms)
{
    TruncatedSeries g(R, b, D);
    for (const auto& [n, c] : terms) g.set(n, PadicScalar::from_int(R, c));
    return g;
}

// Phi via the defining quotient (sigma g - alpha^m g) / (1 - alpha^m)
TruncatedSeries phi_oracle(const TruncatedSeries& g, const Exponent& m, const SigmaAction& s)
{
    const auto am = alpha_power(s, m);
    const auto inv = (PadicScalar::from_int(g.ring(), 1) - am).inverse();
    return (sigma_apply(g, s) - g.scaled(am)).scaled(inv);
}

TruncatedSeries random_series(const RingPtr& R, int b, int D, std::mt19937_64& rng, bool unit_constant)
{
    std::uniform_int_distribution<int> coin(0, 2), coeff(-30, 30);
    TruncatedSeries g(R, b, D);
    for (const auto& n : monomials(b, 1, D))
        if (coin(rng) == 0) g.set(n, PadicScalar::from_int(R, coeff(rng)));
    g.set(Exponent(b, 0), PadicScalar::from_int(R, unit_constant ? 1 : coeff(rng)));
    return g;
}

} // namespace

TEST_CASE("monomial order is graded with T1 first")
{
    auto m = monomials(2, 0, 2);
    REQUIRE(m.size() == 6);
    CHECK(m[0] == Exponent{0, 0});
    CHECK(m[1] == Exponent{1, 0});
    CHECK(m[2] == Exponent{0, 1});
    CHECK(m[3] == Exponent{2, 0});
    CHECK(m[5] == Exponent{0, 2});
}

TEST_CASE("gauss norm examples")
{
    auto R = RingParams::trivial(3, 5);
    CHECK(!gauss_norm(TruncatedSeries(R, 1, 3)).has_value());
    auto g = series(R, 1, 3, {{{0}, 3}, {{1}, 1}});
    CHECK(*gauss_norm(g) == Rational(0));
    auto t = series(R, 1, 3, {{{1}, 1}});
    CHECK(*gauss_norm(t, Rational(1)) == Rational(1));
    auto h = series(R, 2, 3, {{{0, 0}, 9}, {{1, 1}, 3}});
    CHECK(*gauss_norm(h) == Rational(1));
    CHECK(*gauss_norm(h, Rational(1, 2)) == Rational(2));
}

TEST_CASE("series serialization round trip")
{
    auto R = RingParams::eisenstein(5, {5, 0, 1}, 6);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        auto g = random_series(R, 2, 4, rng, false);
        g.set({1, 1}, PadicScalar::from_int(R, 7) / PadicScalar::from_int(R, 5));
        std::vector<std::string> lines;
        std::string text = g.serialize(), line;
        for (char ch : text) {
            if (ch == '\n') {
                lines.push_back(line);
                line.clear();
            } else line += ch;
        }
        auto h = TruncatedSeries::parse(R, 2, 4, lines);
        CHECK(h == g);
    }
}

TEST_CASE("sigma_apply examples and homomorphism property")
{
    auto R = RingParams::trivial(5, 6);
    auto g = series(R, 2, 3, {{{1, 1}, 1}});
    auto s = SigmaAction::diag_integers(R, {2, 3});
    CHECK(sigma_apply(g, s) == series(R, 2, 3, {{{1, 1}, 6}}));
    auto swap = SigmaAction::from_integers(R, {{0, 1}, {1, 0}});
    CHECK(!swap.diagonal);
    CHECK(sigma_apply(series(R, 2, 3, {{{1, 0}, 1}}), swap) == series(R, 2, 3, {{{0, 1}, 1}}));
    auto id = SigmaAction::from_integers(R, {{1, 0}, {0, 1}});
    std::mt19937_64 rng(5);
    auto m = SigmaAction::from_integers(R, {{1, 2}, {3, -1}});
    for (int i = 0; i < 20; ++i) {
        auto a = random_series(R, 2, 4, rng, false), b = random_series(R, 2, 4, rng, false);
        CHECK(sigma_apply(a, id) == a);
        CHECK(sigma_apply(a * b, m).equals_at_precision(sigma_apply(a, m) * sigma_apply(b, m)));
        CHECK(sigma_apply(a, m).degree() <= a.degree());
    }
    CHECK_THROWS_AS(sigma_apply(series(R, 3, 2, {}), s), Error);
}

TEST_CASE("phi operator examples")
{
    auto R = RingParams::trivial(5, 6);
    auto s = SigmaAction::diag_integers(R, {6});
    auto one = TruncatedSeries::one(R, 1, 4);
    CHECK(phi_operator(one, {1}, s) == one);
    auto g = series(R, 1, 4, {{{0}, 1}, {{1}, 1}});
    CHECK(phi_operator(g, {1}, s).equals_at_precision(one));
    auto h = series(R, 1, 4, {{{0}, 1}, {{2}, 1}, {{3}, 1}});
    auto r = phi_operator(h, {2}, s);
    TruncatedSeries expect = one;
    expect.set({3}, PadicScalar::from_int(R, -36) / PadicScalar::from_int(R, 7));
    CHECK(r.equals_at_precision(expect));
    CHECK(r.coeff({2}).is_zero());
    CHECK(r.equals_at_precision(phi_oracle(h, {2}, s)));
    for (const auto& [n, c] : r.terms())
        if (!c.is_zero()) CHECK(*c.valuation() >= *h.coeff(n).valuation());
    auto ns = SigmaAction::from_integers(R, {{0, 1}, {1, 0}});
    CHECK_THROWS_AS(phi_operator(series(R, 2, 2, {}), {1, 0}, ns), Error);
    auto bad = SigmaAction::diag_integers(R, {1});
    try {
        (void)phi_operator(g, {1}, bad);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DenominatorIndistinguishableFromZero);
    }
}

TEST_CASE("phi laws on random instances")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        const i64 p = std::vector<i64>{2, 3, 5}[trial % 3];
        auto R = RingParams::trivial(p, 12);
        std::uniform_int_distribution<int> bd(1, 3), dd(1, 5), ad(2, 12);
        const int b = bd(rng), D = dd(rng);
        std::vector<i64> alphas;
        for (int i = 0; i < b; ++i) alphas.push_back(ad(rng));
        auto s = SigmaAction::diag_integers(R, alphas);
        auto g = random_series(R, b, D, rng, true);
        auto mons = monomials(b, 1, D);
        const auto m = mons[std::uniform_int_distribution<size_t>(0, mons.size() - 1)(rng)];
        auto dm = PadicScalar::from_int(R, 1) - alpha_power(s, m);
        if (dm.val_units() >= R->precision()) continue;
        auto r = phi_operator(g, m, s);
        CHECK(r.constant_term() == g.constant_term());
        CHECK(r.coeff(m).is_zero());
        CHECK(r.equals_at_precision(phi_oracle(g, m, s)));
        for (const auto& [n, c] : g.terms()) {
            if (c.is_zero() || total_degree(n) == 0) continue;
            auto dn = PadicScalar::from_int(R, 1) - alpha_power(s, n);
            if (!dn.is_zero() && dn.val_units() < dm.val_units()) continue;
            auto rc = r.coeff(n);
            if (!rc.is_zero()) CHECK(*rc.valuation() >= *c.valuation());
        }
    }
}

TEST_CASE("unit certificates")
{
    auto R = RingParams::trivial(5, 6);
    auto s = SigmaAction::diag_integers(R, {6});
    auto one = TruncatedSeries::one(R, 1, 4);
    CHECK(certify_unit_ideal(one, s, 10).steps.empty());
    auto g = series(R, 1, 4, {{{0}, 1}, {{1}, 1}});
    auto cert = certify_unit_ideal(g, s, 10);
    REQUIRE(cert.steps.size() == 1);
    CHECK(cert.steps[0].m == Exponent{1});
    CHECK(cert.steps[0].loss == 1);
    CHECK(cert.residual == 5);
    CHECK(cert.serialize() == "step 1: m=(1) loss=1\n");
    CHECK(replay_certificate(g, s, cert).equals_at_precision(one));

    auto s2 = SigmaAction::diag_integers(R, {5, 5});
    auto g2 = series(R, 2, 3, {{{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}});
    auto c2 = certify_unit_ideal(g2, s2, 10);
    REQUIRE(c2.steps.size() == 1);
    CHECK(c2.steps[0].m == Exponent{1, 0});
    CHECK(c2.final_element.equals_at_precision(TruncatedSeries::one(R, 2, 3)));

    // every degree-1..4 coefficient of 1 + T + ... + T^4 costs one digit: 4 > 3 - 1
    auto small = RingParams::trivial(5, 4);
    auto s3 = SigmaAction::diag_integers(small, {6});
    auto g3 = series(small, 1, 4, {{{0}, 1}, {{1}, 1}, {{2}, 1}, {{3}, 1}, {{4}, 1}});
    try {
        (void)certify_unit_ideal(g3, s3, 10);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PrecisionBudgetExceeded);
    }
    auto bad = SigmaAction::diag_integers(R, {1});
    try {
        (void)certify_unit_ideal(g, bad, 10);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HypothesisViolated);
    }
    CHECK_THROWS_AS(certify_unit_ideal(series(R, 1, 4, {{{0}, 1}, {{1}, 1}, {{2}, 1}}), s, 1), Error);
}

TEST_CASE("unit certificate after diagonalization")
{
    auto R = RingParams::trivial(5, 8);
    auto s = SigmaAction::from_integers(R, {{2, 1}, {0, 3}});
    REQUIRE(!s.diagonal);
    auto g = series(R, 2, 3, {{{0, 0}, 1}, {{1, 0}, 2}, {{0, 1}, 1}, {{1, 1}, 3}});
    auto cert = certify_unit_ideal(g, s, 20);
    CHECK(cert.diagonalized);
    CHECK(replay_certificate(g, s, cert).equals_at_precision(TruncatedSeries::one(R, 2, 3)));
    auto d = diagonalize(s);
    // sigma(S_k) = alpha_k S_k for the new coordinates
    for (int k = 0; k < 2; ++k) {
        TruncatedSeries sk(R, 2, 3);
        sk.set({1, 0}, d.basis[k][0]);
        sk.set({0, 1}, d.basis[k][1]);
        CHECK(sigma_apply(sk, s).equals_at_precision(sk.scaled(d.diagonal.eigenvalues[k])));
    }
    auto same = SigmaAction::from_integers(R, {{2, 1}, {0, 7}});
    CHECK_THROWS_AS(certify_unit_ideal(g, same, 20), Error);
}

TEST_CASE("graded closure examples")
{
    auto R = RingParams::trivial(3, 8);
    auto s = SigmaAction::diag_integers(R, {3, 3});
    auto r1 = graded_closure_check({series(R, 2, 4, {{{1, 0}, 1}, {{0, 1}, 1}})}, s, 3);
    CHECK(r1.exact);
    CHECK(r1.input_stable);
    CHECK(r1.graded);
    auto r2 = graded_closure_check({series(R, 2, 4, {{{1, 0}, 1}, {{0, 2}, 1}})}, s, 3);
    CHECK(!r2.input_stable);
    CHECK(r2.closure_stable);
    CHECK(r2.graded);
    CHECK(r2.dimension == 2);
    CHECK(r2.basis == std::vector<std::string>{"T1", "T2^2"});
    // sigma mixing degrees through a non-diagonal linear action keeps closures graded
    auto m = SigmaAction::from_integers(R, {{1, 1}, {0, 1}});
    auto r3 = graded_closure_check({series(R, 2, 4, {{{1, 0}, 1}, {{0, 2}, 1}})}, m, 3);
    CHECK(r3.closure_stable);
    // identity sigma: closure is the span itself, not graded
    auto id = SigmaAction::diag_integers(R, {1, 1});
    auto r4 = graded_closure_check({series(R, 2, 4, {{{1, 0}, 1}, {{0, 2}, 1}})}, id, 3);
    CHECK(r4.input_stable);
    CHECK(!r4.graded);
}

TEST_CASE("padic rank refuses undecided remainders")
{
    auto R = RingParams::trivial(3, 4);
    auto third = PadicScalar::from_int(R, 1) / PadicScalar::from_int(R, 3);
    auto x = third * PadicScalar::from_int(R, 3);
    std::vector<std::vector<PadicScalar>> rows = {{x, PadicScalar::from_int(R, 2)}, {PadicScalar::from_int(R, 1), PadicScalar::from_int(R, 2)}};
    CHECK_THROWS_AS(padic_rank(rows), Error);
    std::vector<std::vector<PadicScalar>> ok = {{PadicScalar::from_int(R, 1), PadicScalar::from_int(R, 2)},
                                                {PadicScalar::from_int(R, 3), PadicScalar::from_int(R, 5)}};
    CHECK(padic_rank(ok) == 2);
}

TEST_CASE("weil condition examples")
{
    auto a = weil_condition_check({-5, 1});
    CHECK(a.verdict == Verdict::pass);
    CHECK(a.modulus == "5");
    auto b = weil_condition_check({5, -1, 1});
    CHECK(b.verdict == Verdict::pass);
    CHECK(b.modulus == "5^(1/2)");
    CHECK(weil_condition_check({-1, 1}).verdict == Verdict::fail);
    // (x-2)(x-3): distinct moduli
    CHECK(weil_condition_check({6, -5, 1}).verdict == Verdict::fail);
    // (x-2)(x+2)(x-2): squarefree part x^2 - 4
    CHECK(weil_condition_check({8, -4, -2, 1}).verdict == Verdict::pass);
    // x^4 + 4 : roots 1 +- i, -1 +- i, modulus sqrt 2
    CHECK(weil_condition_check({4, 0, 0, 0, 1}).verdict == Verdict::pass);
    // symmetric but not on the circle: (x-1)(x-4) has c = 2, roots 1 and 4
    CHECK(weil_condition_check({4, -5, 1}).verdict == Verdict::fail);
    // x^2 + 3x + 4 has complex roots of modulus 2
    CHECK(weil_condition_check({4, 3, 1}).verdict == Verdict::pass);
    CHECK_THROWS_AS(weil_condition_check({0, 1}), Error);
}
