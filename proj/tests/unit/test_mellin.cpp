#include "doctest.h"

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "ladic/core/error.hpp"
#include "ladic/core/faults.hpp"
#include "ladic/mellin/limit.hpp"
#include "ladic/mellin/locus.hpp"

using namespace ladic;

namespace {

using cd = std::complex<double>;
using CMat = Eigen::Matrix<cd, Eigen::Dynamic, Eigen::Dynamic>;

cd root(i64 order, i64 e)
{
    const double ang = 2.0 * M_PI * static_cast<double>(e) / static_cast<double>(order);
    return {std::cos(ang), std::sin(ang)};
}

// complex image under z -> exp(2 pi i / l^L)
cd embed(const Cyc& x)
{
    cd s = 0;
    for (size_t j = 0; j < x.coeffs().size(); ++j) s += x.coeffs()[j].get_d() * root(x.field()->order, static_cast<i64>(j));
    return s;
}

int numeric_rank(const CMat& m)
{
    if (m.size() == 0) return 0;
    Eigen::JacobiSVD<CMat> svd(m);
    int r = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-8) ++r;
    return r;
}

// Koszul cohomology of two (or one) commuting complex operators, written out from the definition
std::vector<int> oracle_dims(const std::vector<CMat>& D)
{
    const int r = static_cast<int>(D[0].rows());
    if (D.size() == 1) {
        const int rk = numeric_rank(D[0]);
        return {r - rk, r - rk};
    }
    CMat d0(2 * r, r), d1(r, 2 * r);
    d0 << D[0], D[1];
    d1 << -D[1], D[0];
    const int r0 = numeric_rank(d0), r1 = numeric_rank(d1);
    return {r - r0, 2 * r - r0 - r1, r - r1};
}

std::vector<int> oracle_fiber(const MonodromyData& m, const TorsionLabel& chi)
{
    const i64 ord = ipow(m.prime, chi.level);
    std::vector<CMat> D;
    for (int k = 0; k < m.directions(); ++k) {
        const auto q = m.direction(k);
        i64 e = 0;
        for (size_t i = 0; i < q.size(); ++i) e += chi.exponents[i] * q[i];
        const cd u = root(ord, mod(e, ord));
        CMat d(m.rank, m.rank);
        for (int a = 0; a < m.rank; ++a)
            for (int b = 0; b < m.rank; ++b) d(a, b) = embed(m.M[k][a][b]) * u - (a == b ? 1.0 : 0.0);
        D.push_back(d);
    }
    return oracle_dims(D);
}

TorsionLabel label(int level, std::vector<i64> a) { return TorsionLabel{level, std::move(a)}; }

std::vector<std::string> ids(const std::vector<TorsionLabel>& v)
{
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(x.id());
    return out;
}

int ord_l(const mpz_class& x, i64 l, int cap)
{
    if (x == 0) return cap;
    mpz_class y = abs(x);
    int v = 0;
    while (v < cap && y % static_cast<long>(l) == 0) {
        y /= static_cast<long>(l);
        ++v;
    }
    return v;
}

} // namespace

TEST_CASE("cyclotomic arithmetic matches complex embedding")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> c(-4, 4);
    for (auto [l, L] : std::vector<std::pair<i64, int>>{{2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
        const auto F = CycloField::make(l, L);
        CHECK(F->degree == (l - 1) * ipow(l, L - 1));
        for (int t = 0; t < 20; ++t) {
            Cyc x(F, 0), y(F, 0);
            for (int j = 0; j < F->degree; ++j) {
                x = x + Cyc(F, c(rng)) * Cyc::zeta_power(F, j);
                y = y + Cyc(F, c(rng)) * Cyc::zeta_power(F, j);
            }
            CHECK(std::abs(embed(x * y) - embed(x) * embed(y)) < 1e-9);
            CHECK(std::abs(embed(x + y) - embed(x) - embed(y)) < 1e-9);
            if (!y.is_zero()) {
                CHECK(x / y * y == x);
                // norm = product over the Galois conjugates z -> z^s, s prime to l
                cd prod = 1;
                for (i64 s = 1; s < F->order; ++s) {
                    if (s % l == 0) continue;
                    cd v = 0;
                    for (size_t j = 0; j < y.coeffs().size(); ++j) v += y.coeffs()[j].get_d() * root(F->order, static_cast<i64>(j) * s);
                    prod *= v;
                }
                CHECK(std::abs(prod.real() - y.norm().get_d()) < 1e-6 * (1 + std::abs(prod.real())));
            }
        }
        CHECK(Cyc::zeta_power(F, F->order) == Cyc(F, 1));
        CHECK(Cyc::parse(F, Cyc::zeta_power(F, 3).to_string()) == Cyc::zeta_power(F, 3));
    }
    const auto F = CycloField::make(2, 2);
    CHECK(Cyc::parse(F, "1 - z^-1") == Cyc(F, 1) + Cyc::zeta_power(F, 1));
    CHECK(Cyc::parse(F, "1/2*z + 3") == Cyc(F, mpq_class(1, 2)) * Cyc::zeta_power(F, 1) + Cyc(F, 3));
    CHECK(Cyc::zeta_power(F, 1).embed(CycloField::make(2, 3)) == Cyc::zeta_power(CycloField::make(2, 3), 2));
    CHECK_THROWS(Cyc::parse(F, "2 z"));
}

TEST_CASE("fiber dimensions: worked examples")
{
    const auto triv1 = build_mellin_complex(MonodromyData::scalar(2, 0, {0}));
    CHECK(fiber_dims(triv1, label(0, {0})) == std::vector<int>{1, 1});
    CHECK(fiber_dims(triv1, label(2, {0})) == std::vector<int>{1, 1});
    const auto triv3 = build_mellin_complex(MonodromyData::scalar(3, 0, {0}));
    CHECK(fiber_dims(triv3, label(1, {1})) == std::vector<int>{0, 0});
    const auto triv2 = build_mellin_complex(MonodromyData::scalar(2, 0, {0, 0}));
    CHECK(fiber_dims(triv2, label(0, {0, 0})) == std::vector<int>{1, 2, 1});
    CHECK(fiber_dims(triv2, label(1, {1, 0})) == std::vector<int>{0, 0, 0});
    CHECK(triv1.square_zero());
    CHECK(triv2.square_zero());
}

TEST_CASE("generic dimensions and Euler characteristic")
{
    CHECK(generic_dims(build_mellin_complex(MonodromyData::scalar(2, 0, {0}))) == std::vector<int>{0, 0});
    CHECK(generic_dims(build_mellin_complex(MonodromyData::scalar(3, 0, {0, 0}))) == std::vector<int>{0, 0, 0});
    auto infl = MonodromyData::parse(2, "rank=1; M1=[[1]]; quotient=[[1,0]]");
    const auto K = build_mellin_complex(infl);
    CHECK(K.group_rank() == 2);
    CHECK(generic_dims(K) == std::vector<int>{0, 0});
    CHECK(euler_characteristic({1, 2, 1}) == 0);
    CHECK(euler_characteristic({0, 1, 1}) == 0);
}

TEST_CASE("fiber dimensions agree with a numeric Koszul oracle")
{
    std::vector<MonodromyData> family;
    family.push_back(MonodromyData::parse(2, "rank=2; M1=[[1,1],[0,1]]; M2=[[1,2],[0,1]]"));
    family.push_back(MonodromyData::parse(3, "rank=2; zeta=1; M1=[[z,1],[0,z]]; M2=[[1,2],[0,1]]"));
    family.push_back(MonodromyData::parse(2, "rank=2; zeta=2; M1=[[z,0],[0,-1]]; M2=[[1,0],[0,z]]"));
    family.push_back(MonodromyData::parse(3, "rank=2; M1=[[2,0],[0,1]]"));
    family.push_back(MonodromyData::parse(2, "rank=1; zeta=1; M1=[[-1]]; quotient=[[1,1]]"));
    family.push_back(MonodromyData::scalar(2, 2, {1, 3}));
    for (const auto& m : family) {
        const auto K = build_mellin_complex(m);
        CHECK(K.square_zero());
        for (int n = 0; n <= 2; ++n)
            for (const auto& chi : torsion_labels(m.prime, K.group_rank(), n)) {
                const auto dims = fiber_dims(K, chi);
                CAPTURE(m.serialize());
                CAPTURE(chi.id());
                CHECK(dims == oracle_fiber(m, chi));
                CHECK(fiber_dims_group_ring(K, chi) == dims);
                CHECK(euler_characteristic(dims) == 0);
            }
    }
}

TEST_CASE("monodromy validation")
{
    
    try {
        MonodromyData::parse(2, "rank=2; M1=[[1,1],[0,1]]; M2=[[1,0],[1,1]]");
        FAIL("expected NonCommuting");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonCommuting);
    }
    try {
        MonodromyData::parse(2, "rank=1; M1=[[2]]");
        FAIL("expected NonInvertible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonInvertible);
    }
    // 1 - zeta_2 ... zeta_4 has norm 2
    try {
        MonodromyData::parse(2, "rank=1; zeta=2; M1=[[1 - z]]");
        FAIL("expected NonInvertible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonInvertible);
    }
    CHECK_NOTHROW(MonodromyData::parse(3, "rank=1; M1=[[2]]"));
    try {
        MonodromyData::parse(2, "rank=1; M1=[[1]]; colour=red");
        FAIL("expected MalformedInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedInput);
    }
    try {
        MonodromyData::parse(2, "rank=1; M1=[[1]]; quotient=[[2,0]]");
        FAIL("expected MalformedInput");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedInput);
    }
    const auto m = MonodromyData::parse(3, "rank=2; zeta=1; M1=[[z,1],[0,z]]; quotient=[[1,2]]");
    CHECK(MonodromyData::parse(3, m.serialize()).serialize() == m.serialize());
}

TEST_CASE("jumping loci: trivial, twisted and inflated")
{
    const auto triv = build_mellin_complex(MonodromyData::scalar(2, 0, {0}));
    const auto r0 = jumping_locus(triv, 0, 0, 2);
    CHECK(ids(r0.points) == std::vector<std::string>{"(0)@2"});
    CHECK(r0.characters == 4);
    CHECK(r0.generic == std::vector<int>{0, 0});
    CHECK(r0.euler == 0);
    CHECK(r0.euler_consistent);
    CHECK(r0.block() == "sigma i=0 j=0 level=2: [(0)@2]; generic=[0,0]; euler=0");

    // M = zeta_4: H^1 jumps where chi(e) = zeta_4^{-1}
    const auto tw = build_mellin_complex(MonodromyData::scalar(2, 2, {1}));
    const auto r1 = jumping_locus(tw, 1, 0, 2);
    CHECK(ids(r1.points) == std::vector<std::string>{"(3)@2"});
    CHECK(ids(jumping_locus(tw, 0, 0, 2).points) == std::vector<std::string>{"(3)@2"});
    CHECK(jumping_locus(tw, 1, 1, 2).points.empty());
    CHECK(jumping_locus(tw, 1, 0, 1).points.empty());

    // inflated along e1: the locus is chi(e1) = 1
    const auto infl = build_mellin_complex(MonodromyData::parse(3, "rank=1; M1=[[1]]; quotient=[[1,0]]"));
    const auto r2 = jumping_locus(infl, 0, 0, 1);
    CHECK(ids(r2.points) == std::vector<std::string>{"(0,0)@1", "(0,1)@1", "(0,2)@1"});
    QuasiLinearSet S(3, 2);
    S.add({label(0, {0, 0}), {{1}, {0}}});
    CHECK(verify_quasilinear(r2, S).holds);

    // rank 0 has no cohomology at all
    MonodromyData zero;
    zero.prime = 2;
    zero.rank = 0;
    zero.entries = CycloField::make(2, 0);
    zero.group_rank_hint = 1;
    const auto Z = build_mellin_complex(zero);
    CHECK(jumping_locus(Z, 0, 0, 2).points.empty());
    for (int d : generic_dims(Z)) CHECK(d == 0);
}

TEST_CASE("quasi-linear verification")
{
    const auto triv = build_mellin_complex(MonodromyData::scalar(2, 0, {0}));
    QuasiLinearSet point(2, 1);
    point.add({label(0, {0}), {{1}}});
    CHECK(verify_quasilinear(jumping_locus(triv, 0, 0, 2), point).holds);

    const auto infl = build_mellin_complex(MonodromyData::parse(2, "rank=1; M1=[[1]]; quotient=[[1,0]]"));
    const auto r = jumping_locus(infl, 0, 0, 2);
    QuasiLinearSet wrong(2, 2);
    wrong.add({label(0, {0, 0}), {{0}, {1}}});
    const auto v = verify_quasilinear(r, wrong);
    CHECK_FALSE(v.holds);
    CHECK_FALSE(v.missing.empty());
    CHECK_FALSE(v.extra.empty());

    const auto tw = build_mellin_complex(MonodromyData::scalar(2, 2, {1}));
    QuasiLinearSet shifted(2, 1);
    shifted.add({label(2, {3}), {{1}}});
    CHECK(verify_quasilinear(jumping_locus(tw, 1, 0, 2), shifted).holds);
    QuasiLinearSet unshifted(2, 1);
    unshifted.add({label(0, {0}), {{1}}});
    CHECK_FALSE(verify_quasilinear(jumping_locus(tw, 1, 0, 2), unshifted).holds);
}

TEST_CASE("image order modulo l^m agrees with Smith invariants")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> c(-6, 6), sz(1, 6);
    for (i64 l : {2, 3, 5})
        for (int t = 0; t < 60; ++t) {
            const int rows = sz(rng), cols = sz(rng), m = 1 + t % 3;
            IntMatrix a(rows, std::vector<i64>(cols));
            for (auto& row : a)
                for (auto& x : row) x = c(rng) * (t % 4 == 0 ? l : 1);
            int expect = 0;
            for (const auto& d : smith_invariants(a)) expect += m - ord_l(d, l, m);
            CHECK(image_log_order(a, l, m) == expect);
        }
}

TEST_CASE("finite-level limit check")
{
    // b = 1 trivial: invariants and coinvariants of (Z/l^m)[Z/l^n] are both Z/l^m
    const auto rep = finite_level_limit_check(MonodromyData::scalar(2, 0, {0}), 2, 3);
    CHECK(rep.holds);
    CHECK(rep.transitions_chain_maps);
    CHECK(rep.levels.size() == 6);
    for (const auto& L : rep.levels) {
        CHECK(L.routes_agree);
        CHECK(L.group_route == std::vector<int>{L.m, L.m});
        // f_n dies modulo (2^m, deg > 2) exactly when 2^{n-m+1} > 2
        CHECK(L.stabilized == (L.n - L.m + 1 >= 2));
        if (L.truncated) {
            CHECK(L.projection_chain_map);
            CHECK(*L.truncated == std::vector<int>{L.m, L.m});
        }
    }
    // rank 2, two directions, twisted by zeta_3
    const auto tw = finite_level_limit_check(MonodromyData::parse(3, "rank=1; zeta=1; M1=[[z]]; M2=[[1]]"), 1, 2);
    CHECK(tw.holds);
    for (const auto& L : tw.levels) CHECK(L.routes_agree);
    const auto uni = finite_level_limit_check(MonodromyData::parse(2, "rank=2; M1=[[1,1],[0,1]]; M2=[[1,0],[0,1]]"), 3, 2);
    CHECK(uni.holds);
    MonodromyData zero;
    zero.prime = 3;
    zero.rank = 0;
    zero.entries = CycloField::make(3, 0);
    zero.group_rank_hint = 1;
    for (const auto& L : finite_level_limit_check(zero, 1, 2).levels)
        for (int h : L.group_route) CHECK(h == 0);
    try {
        finite_level_limit_check(MonodromyData::parse(3, "rank=2; M1=[[1,0],[0,1]]; M2=[[1,0],[0,1]]"), 2, 3, 1500);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
}
