#include "ladic/mellin/limit.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ladic/core/error.hpp"
#include "ladic/core/op_counter.hpp"
#include "ladic/formal/divisibility.hpp"
#include "ladic/mellin/koszul.hpp"
#include "ladic/mellin/locus.hpp"

namespace ladic {

using IMat = std::vector<std::vector<i64>>;

int image_log_order(IMat a, i64 prime, int m)
{
    const i64 M = ipow(prime, m);
    const size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    auto val = [&](i64 x) {
        int v = 0;
        while (v < m && x % prime == 0) {
            x /= prime;
            ++v;
        }
        return v;
    };
    for (auto& row : a)
        for (auto& x : row) x = mod(x, M);
    std::vector<bool> row_used(rows, false), col_used(cols, false);
    int total = 0;
    for (;;) {
        int best = m;
        size_t pr = 0, pc = 0;
        for (size_t i = 0; i < rows && best > 0; ++i) {
            if (row_used[i]) continue;
            for (size_t j = 0; j < cols; ++j) {
                if (col_used[j] || a[i][j] == 0) continue;
                const int v = val(a[i][j]);
                if (v < best) {
                    best = v;
                    pr = i;
                    pc = j;
                    if (v == 0) break;
                }
            }
        }
        if (best >= m) break;
        row_used[pr] = col_used[pc] = true;
        total += m - best;
        const i64 scale = ipow(prime, best);
        const i64 uinv = invmod(a[pr][pc] / scale, M);
        for (size_t i = 0; i < rows; ++i) {
            if (row_used[i] || a[i][pc] == 0) continue;
            const i64 f = mulmod(a[i][pc] / scale, uinv, M);
            for (size_t j = 0; j < cols; ++j)
                if (!col_used[j] || j == pc)
                    if (a[pr][j]) a[i][j] = mod(a[i][j] - mulmod(f, a[pr][j], M), M);
            count_op(cols);
        }
    }
    return total;
}

namespace {

struct Ctx {
    const MellinComplex* K;
    i64 l;
    int b, r, bp, phi;
    std::vector<IMat> Mint; // (r phi) x (r phi) over Z, reduced later
};

// multiplication by a cyclotomic entry on coefficient vectors, as an integer matrix mod M
IMat entry_block(const Cyc& x, i64 M)
{
    const auto q = x.mult_matrix();
    IMat out(q.size(), std::vector<i64>(q.size()));
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < q.size(); ++j) {
            mpz_class num = q[i][j].get_num() % mpz_class(static_cast<long>(M));
            mpz_class den = q[i][j].get_den() % mpz_class(static_cast<long>(M));
            out[i][j] = mulmod(mod(num.get_si(), M), invmod(den.get_si(), M), M);
        }
    return out;
}

// M_k on O^r (x) coefficient vectors, index a * phi + alpha
IMat monodromy_block(const Ctx& c, int k, i64 M)
{
    const int w = c.r * c.phi;
    IMat out(w, std::vector<i64>(w, 0));
    for (int a = 0; a < c.r; ++a)
        for (int cc = 0; cc < c.r; ++cc) {
            const IMat e = entry_block(c.K->data().M[k][a][cc], M);
            for (int al = 0; al < c.phi; ++al)
                for (int be = 0; be < c.phi; ++be) out[a * c.phi + al][cc * c.phi + be] = e[al][be];
        }
    return out;
}

// d^p over a ring with basis of size nbasis on which [q_k] acts by ops[k] (column j = image of basis j)
IMat koszul_matrix(const Ctx& c, int p, const std::vector<IMat>& ops, size_t nbasis, i64 M)
{
    const size_t w = static_cast<size_t>(c.r) * c.phi;
    const size_t rows = c.K->subsets(p + 1).size() * nbasis * w, cols = c.K->subsets(p).size() * nbasis * w;
    IMat d(rows, std::vector<i64>(cols, 0));
    for (const auto& bl : c.K->blocks(p)) {
        const IMat mk = monodromy_block(c, bl.direction, M);
        for (size_t x = 0; x < nbasis; ++x)
            for (size_t y = 0; y < nbasis; ++y) {
                const i64 u = ops[bl.direction][y][x];
                if (u == 0) continue;
                for (size_t s = 0; s < w; ++s)
                    for (size_t t = 0; t < w; ++t) {
                        if (mk[s][t] == 0) continue;
                        i64& e = d[(bl.row * nbasis + y) * w + s][(bl.col * nbasis + x) * w + t];
                        e = mod(e + bl.sign * mulmod(u, mk[s][t], M), M);
                    }
            }
        for (size_t x = 0; x < nbasis; ++x)
            for (size_t s = 0; s < w; ++s) {
                i64& e = d[(bl.row * nbasis + x) * w + s][(bl.col * nbasis + x) * w + s];
                e = mod(e - bl.sign, M);
            }
    }
    return d;
}

std::vector<int> cohomology(const Ctx& c, const std::vector<IMat>& ops, size_t nbasis, int m)
{
    const i64 M = ipow(c.l, m);
    const size_t w = static_cast<size_t>(c.r) * c.phi;
    std::vector<int> img(c.bp, 0);
    for (int p = 0; p < c.bp && w > 0; ++p) img[p] = image_log_order(koszul_matrix(c, p, ops, nbasis, M), c.l, m);
    std::vector<int> h(c.bp + 1);
    for (int p = 0; p <= c.bp; ++p)
        h[p] = m * static_cast<int>(c.K->subsets(p).size() * nbasis * w) - (p < c.bp ? img[p] : 0) - (p > 0 ? img[p - 1] : 0);
    return h;
}

std::vector<i64> group_coords(i64 g, i64 ord, int b)
{
    std::vector<i64> a(b);
    for (int i = b - 1; i >= 0; --i) {
        a[i] = g % ord;
        g /= ord;
    }
    return a;
}

i64 group_index(const std::vector<i64>& a, i64 ord)
{
    i64 g = 0;
    for (i64 x : a) g = g * ord + mod(x, ord);
    return g;
}

// [q] as permutation matrices on the group basis of (Z/l^n)^b
std::vector<IMat> group_ops(const Ctx& c, int n)
{
    const i64 ord = ipow(c.l, n), G = ipow(ord, c.b);
    std::vector<IMat> ops;
    for (int k = 0; k < c.bp; ++k) {
        const auto q = c.K->data().direction(k);
        IMat op(G, std::vector<i64>(G, 0));
        for (i64 g = 0; g < G; ++g) {
            auto a = group_coords(g, ord, c.b);
            for (int i = 0; i < c.b; ++i) a[i] += q[i];
            op[group_index(a, ord)][g] = 1;
        }
        ops.push_back(op);
    }
    return ops;
}

// [q] = prod (1 + X_i)^{q_i mod l^n} on monomials X^a, a_i < l^n, reduced by (1 + X_i)^{l^n} - 1
std::vector<IMat> poly_ops(const Ctx& c, int m, int n)
{
    const i64 M = ipow(c.l, m), ord = ipow(c.l, n), N = ipow(ord, c.b);
    // X^{l^n} = -sum_{0 < j < l^n} binom(l^n, j) X^j  (mod l^m), via Pascal mod M
    std::vector<i64> row{1};
    for (i64 k = 1; k <= ord; ++k) {
        std::vector<i64> next(k + 1, 1);
        for (i64 j = 1; j < k; ++j) next[j] = (row[j - 1] + row[j]) % M;
        row = std::move(next);
    }
    auto times_one_plus_x = [&](const std::vector<i64>& v, int i) {
        std::vector<i64> out = v;
        for (i64 idx = 0; idx < N; ++idx) {
            if (v[idx] == 0) continue;
            auto a = group_coords(idx, ord, c.b);
            if (a[i] + 1 < ord) {
                a[i] += 1;
                const i64 t = group_index(a, ord);
                out[t] = mod(out[t] + v[idx], M);
            } else {
                for (i64 j = 1; j < ord; ++j) {
                    if (row[j] == 0) continue;
                    a[i] = j;
                    const i64 t = group_index(a, ord);
                    out[t] = mod(out[t] - mulmod(row[j], v[idx], M), M);
                }
            }
        }
        return out;
    };
    std::vector<IMat> ops;
    for (int k = 0; k < c.bp; ++k) {
        const auto q = c.K->data().direction(k);
        IMat op(N, std::vector<i64>(N, 0));
        for (i64 x = 0; x < N; ++x) {
            std::vector<i64> v(N, 0);
            v[x] = 1;
            for (int i = 0; i < c.b; ++i)
                for (i64 t = 0; t < mod(q[i], ord); ++t) v = times_one_plus_x(v, i);
            for (i64 y = 0; y < N; ++y) op[y][x] = v[y];
        }
        ops.push_back(op);
    }
    return ops;
}

// monomials of total degree <= D in b variables, in the order used by R_{D,m}
std::vector<std::vector<i64>> truncated_basis(int b, int D)
{
    std::vector<std::vector<i64>> out;
    std::vector<i64> a(b, 0);
    std::function<void(int, int)> rec = [&](int i, int left) {
        if (i == b) {
            out.push_back(a);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            a[i] = e;
            rec(i + 1, left - e);
        }
        a[i] = 0;
    };
    rec(0, D);
    return out;
}

// generalized binomial coefficient binom(q, j) mod M (q may be negative)
i64 gen_binom(i64 q, int j, i64 M)
{
    mpz_class num = 1, den = 1;
    for (int t = 0; t < j; ++t) {
        num *= static_cast<long>(q - t);
        den *= t + 1;
    }
    mpz_class v = num / den;
    v %= static_cast<long>(M);
    if (v < 0) v += static_cast<long>(M);
    return v.get_si();
}

std::vector<IMat> truncated_ops(const Ctx& c, int m, int D, const std::vector<std::vector<i64>>& basis)
{
    const i64 M = ipow(c.l, m);
    std::map<std::vector<i64>, size_t> where;
    for (size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
    std::vector<IMat> ops;
    for (int k = 0; k < c.bp; ++k) {
        const auto q = c.K->data().direction(k);
        IMat op(basis.size(), std::vector<i64>(basis.size(), 0));
        for (size_t x = 0; x < basis.size(); ++x) {
            // X^a * prod_i sum_j binom(q_i, j) X_i^j, truncated
            std::map<std::vector<i64>, i64> cur{{basis[x], 1}};
            for (int i = 0; i < c.b; ++i) {
                std::map<std::vector<i64>, i64> next;
                for (const auto& [a, v] : cur)
                    for (int j = 0; j <= D; ++j) {
                        auto e = a;
                        e[i] += j;
                        i64 deg = 0;
                        for (i64 t : e) deg += t;
                        if (deg > D) break;
                        const i64 bc = gen_binom(q[i], j, M);
                        if (bc) next[e] = mod(next[e] + mulmod(bc, v, M), M);
                    }
                cur = std::move(next);
            }
            for (const auto& [a, v] : cur)
                if (v) op[where.at(a)][x] = v;
        }
        ops.push_back(op);
    }
    return ops;
}

// rho d_src == d_tgt rho, with rho given on basis indices (or -1 for zero) and coefficients reduced mod M
bool chain_map(const IMat& d_src, const IMat& d_tgt, const std::vector<long>& rho_in, const std::vector<long>& rho_out, i64 M)
{
    const size_t cols = d_src.empty() ? 0 : d_src[0].size();
    for (size_t j = 0; j < cols; ++j) {
        std::vector<i64> lhs(d_tgt.size(), 0), rhs(d_tgt.size(), 0);
        for (size_t i = 0; i < d_src.size(); ++i)
            if (d_src[i][j] && rho_out[i] >= 0) lhs[rho_out[i]] = mod(lhs[rho_out[i]] + d_src[i][j], M);
        if (rho_in[j] >= 0)
            for (size_t i = 0; i < d_tgt.size(); ++i) rhs[i] = mod(d_tgt[i][rho_in[j]], M);
        if (lhs != rhs) return false;
    }
    return true;
}

} // namespace

LimitReport finite_level_limit_check(const MonodromyData& data, int degree_cap, int levels, int cap)
{
    require(levels >= 1 && degree_cap >= 1, ErrorKind::OutOfRange, "need levels >= 1 and D >= 1");
    const MellinComplex K = build_mellin_complex(data);
    Ctx c{&K, data.prime, K.group_rank(), K.rank(), K.directions(), data.entries->degree, {}};
    const size_t w = static_cast<size_t>(c.r) * c.phi;
    size_t widest = 0;
    for (int p = 0; p <= c.bp; ++p) widest = std::max(widest, K.subsets(p).size());
    const auto top_ord = checked_pow(data.prime, levels);
    const auto top_group = top_ord ? checked_pow(*top_ord, c.b) : std::nullopt;
    require(top_group && static_cast<i64>(widest * w) * *top_group <= cap, ErrorKind::BudgetExceeded,
            "finite-level complexes exceed " + std::to_string(cap) + " generators");

    LimitReport rep;
    rep.degree_cap = degree_cap;
    rep.holds = true;
    const auto tbasis = truncated_basis(c.b, degree_cap);
    for (int n = 1; n <= levels; ++n)
        for (int m = 1; m <= n; ++m) {
            LimitLevel L;
            L.m = m;
            L.n = n;
            const i64 G = ipow(ipow(c.l, n), c.b);
            const auto gops = group_ops(c, n);
            const auto pops = poly_ops(c, m, n);
            L.group_route = cohomology(c, gops, G, m);
            L.poly_route = cohomology(c, pops, G, m);
            L.routes_agree = L.group_route == L.poly_route;
            const auto div = prosystem_divisibility_check(c.l, m, n);
            L.stabilized = ipow(c.l, n) > degree_cap && div.lowest_surviving > degree_cap;
            if (L.stabilized) {
                const auto tops = truncated_ops(c, m, degree_cap, tbasis);
                L.truncated = cohomology(c, tops, tbasis.size(), m);
                // projection X^a -> X^a (deg <= D) or 0
                std::map<std::vector<i64>, long> where;
                for (size_t i = 0; i < tbasis.size(); ++i) where[tbasis[i]] = static_cast<long>(i);
                const i64 M = ipow(c.l, m);
                for (int p = 0; p < c.bp && w > 0; ++p) {
                    auto proj = [&](int deg) {
                        std::vector<long> rho;
                        const size_t ns = K.subsets(deg).size();
                        for (size_t s = 0; s < ns; ++s)
                            for (i64 x = 0; x < G; ++x) {
                                const auto a = group_coords(x, ipow(c.l, n), c.b);
                                auto it = where.find(a);
                                for (size_t t = 0; t < w; ++t)
                                    rho.push_back(it == where.end() ? -1 : static_cast<long>((s * tbasis.size() + it->second) * w + t));
                            }
                        return rho;
                    };
                    const IMat dA = koszul_matrix(c, p, pops, G, M), dR = koszul_matrix(c, p, tops, tbasis.size(), M);
                    L.projection_chain_map = L.projection_chain_map && chain_map(dA, dR, proj(p), proj(p + 1), M);
                }
            }
            rep.holds = rep.holds && L.routes_agree && L.projection_chain_map;
            rep.levels.push_back(L);
        }
    // transitions between group rings, checked on the group route
    for (int n = 1; n < levels; ++n)
        for (int m = 1; m <= n; ++m) {
            const i64 M = ipow(c.l, m);
            const i64 ord_src = ipow(c.l, n + 1), ord_tgt = ipow(c.l, n);
            const i64 Gs = ipow(ord_src, c.b), Gt = ipow(ord_tgt, c.b);
            const auto ops_s = group_ops(c, n + 1), ops_t = group_ops(c, n);
            for (int p = 0; p < c.bp && w > 0; ++p) {
                auto rho = [&](int deg) {
                    std::vector<long> out;
                    for (size_t s = 0; s < K.subsets(deg).size(); ++s)
                        for (i64 g = 0; g < Gs; ++g) {
                            const i64 h = group_index(group_coords(g, ord_src, c.b), ord_tgt);
                            for (size_t t = 0; t < w; ++t) out.push_back(static_cast<long>((s * Gt + h) * w + t));
                        }
                    return out;
                };
                const IMat ds = koszul_matrix(c, p, ops_s, Gs, M), dt = koszul_matrix(c, p, ops_t, Gt, M);
                rep.transitions_chain_maps = rep.transitions_chain_maps && chain_map(ds, dt, rho(p), rho(p + 1), M);
            }
        }
    rep.holds = rep.holds && rep.transitions_chain_maps;
    return rep;
}

std::string LimitReport::text() const
{
    std::string s;
    for (const auto& L : levels) {
        s += "level m=" + std::to_string(L.m) + " n=" + std::to_string(L.n) + ": group=" + format_dims(L.group_route) +
             " poly=" + format_dims(L.poly_route) + (L.routes_agree ? " agree" : " DIFFER");
        if (L.truncated) s += " truncated=" + format_dims(*L.truncated) + (L.projection_chain_map ? " projection ok" : " projection FAILS");
        s += "\n";
    }
    s += std::string("transitions ") + (transitions_chain_maps ? "commute with d" : "do NOT commute with d") + "\n";
    s += std::string("verdict ") + (holds ? "true" : "false") + "\n";
    return s;
}

} // namespace ladic
