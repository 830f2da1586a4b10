#include "ladic/mellin/koszul.hpp"

#include <algorithm>

#include "ladic/core/echelon.hpp"
#include "ladic/core/error.hpp"

namespace ladic {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int p)
{
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != p) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Laurent polynomial in u_1..u_b with cyclotomic coefficients
using Laurent = std::map<std::vector<i64>, Cyc>;
using LMatrix = std::vector<std::vector<Laurent>>;

void add_term(Laurent& p, const std::vector<i64>& e, const Cyc& c)
{
    auto [it, fresh] = p.emplace(e, c);
    if (!fresh) it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
}

Laurent mul(const Laurent& a, const Laurent& b)
{
    Laurent r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<i64> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            add_term(r, e, ca * cb);
        }
    return r;
}

} // namespace

MellinComplex::MellinComplex(MonodromyData data) : data_(std::move(data))
{
    const int bp = directions();
    for (int p = 0; p <= bp; ++p) subsets_.push_back(subsets_of_size(bp, p));
    blocks_.resize(bp + 1);
    for (int p = 0; p < bp; ++p) {
        const auto& src = subsets_[p];
        const auto& dst = subsets_[p + 1];
        for (size_t c = 0; c < src.size(); ++c)
            for (int j = 0; j < bp; ++j) {
                if (std::find(src[c].begin(), src[c].end(), j) != src[c].end()) continue;
                auto t = src[c];
                t.push_back(j);
                std::sort(t.begin(), t.end());
                const int row = static_cast<int>(std::lower_bound(dst.begin(), dst.end(), t) - dst.begin());
                const int before = static_cast<int>(std::count_if(src[c].begin(), src[c].end(), [j](int s) { return s < j; }));
                blocks_[p].push_back({row, static_cast<int>(c), before % 2 ? -1 : 1, j});
            }
    }

    // symbolic d^{p+1} d^p
    const int r = rank(), b = group_rank();
    const CycloPtr& F = data_.entries;
    auto symbolic = [&](int p) {
        LMatrix m(dim(p + 1), std::vector<Laurent>(dim(p)));
        for (const auto& bl : blocks_[p]) {
            const auto q = data_.direction(bl.direction);
            for (int a = 0; a < r; ++a)
                for (int c = 0; c < r; ++c) {
                    Laurent& e = m[bl.row * r + a][bl.col * r + c];
                    const Cyc s(F, bl.sign);
                    add_term(e, q, s * data_.M[bl.direction][a][c]);
                    if (a == c) add_term(e, std::vector<i64>(b, 0), -s);
                }
        }
        return m;
    };
    square_zero_ = true;
    for (int p = 0; p + 1 < bp && r > 0; ++p) {
        const LMatrix d0 = symbolic(p), d1 = symbolic(p + 1);
        for (size_t i = 0; i < d1.size() && square_zero_; ++i)
            for (size_t j = 0; j < d0[0].size(); ++j) {
                Laurent acc;
                for (size_t k = 0; k < d0.size(); ++k)
                    for (const auto& [e, c] : mul(d1[i][k], d0[k][j])) add_term(acc, e, c);
                if (!acc.empty()) {
                    square_zero_ = false;
                    break;
                }
            }
    }
}

CycMatrix MellinComplex::differential(int p, const std::vector<Cyc>& u) const
{
    const int r = rank();
    const CycloPtr& F = u.empty() ? data_.entries : u[0].field();
    CycMatrix m(dim(p + 1), std::vector<Cyc>(dim(p), Cyc(F, 0)));
    for (const auto& bl : blocks_[p]) {
        const Cyc s(F, bl.sign);
        for (int a = 0; a < r; ++a)
            for (int c = 0; c < r; ++c) {
                Cyc v = data_.M[bl.direction][a][c].embed(F) * u[bl.direction];
                if (a == c) v = v - Cyc(F, 1);
                m[bl.row * r + a][bl.col * r + c] = s * v;
            }
    }
    return m;
}

MellinComplex build_mellin_complex(const MonodromyData& m)
{
    m.validate();
    MellinComplex K(m);
    require(K.square_zero(), ErrorKind::NonCommuting, "Koszul differential does not square to zero");
    return K;
}

CycloPtr fiber_field(const MellinComplex& K, int level)
{
    return CycloField::make(K.data().prime, std::max(level, K.data().entries->level));
}

namespace {

std::vector<int> dims_from_ranks(const MellinComplex& K, const std::vector<int>& ranks)
{
    const int bp = K.directions();
    std::vector<int> dims(bp + 1);
    for (int p = 0; p <= bp; ++p) dims[p] = K.dim(p) - (p < bp ? ranks[p] : 0) - (p > 0 ? ranks[p - 1] : 0);
    return dims;
}

i64 dot_mod(const std::vector<i64>& a, const std::vector<i64>& q, i64 m)
{
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = mod(s + mulmod(mod(a[i], m), mod(q[i], m), m), m);
    return s;
}

} // namespace

std::vector<int> fiber_dims(const MellinComplex& K, const TorsionLabel& chi)
{
    require(static_cast<int>(chi.exponents.size()) == K.group_rank(), ErrorKind::DimensionMismatch, "character rank differs from the torus rank");
    const CycloPtr F = fiber_field(K, chi.level);
    const i64 ord = ipow(K.data().prime, chi.level);
    const i64 scale = F->order / ord;
    std::vector<Cyc> u;
    for (int k = 0; k < K.directions(); ++k) u.push_back(Cyc::zeta_power(F, dot_mod(chi.exponents, K.data().direction(k), ord) * scale));
    std::vector<int> ranks;
    for (int p = 0; p < K.directions(); ++p) ranks.push_back(K.rank() ? static_cast<int>(cyc_rank(K.differential(p, u))) : 0);
    return dims_from_ranks(K, ranks);
}

std::vector<int> fiber_dims_group_ring(const MellinComplex& K, const TorsionLabel& chi)
{
    const int b = K.group_rank(), r = K.rank(), bp = K.directions();
    require(static_cast<int>(chi.exponents.size()) == b, ErrorKind::DimensionMismatch, "character rank differs from the torus rank");
    const i64 l = K.data().prime;
    const i64 ord = ipow(l, chi.level);
    auto gsize = checked_pow(ord, b);
    require(gsize && *gsize <= 4096, ErrorKind::BudgetExceeded, "group ring too large");
    const i64 G = *gsize;
    const CycloPtr F = fiber_field(K, chi.level);
    const i64 scale = F->order / ord;

    auto coords = [&](i64 g) {
        std::vector<i64> a(b);
        for (int i = b - 1; i >= 0; --i) {
            a[i] = g % ord;
            g /= ord;
        }
        return a;
    };
    auto index = [&](const std::vector<i64>& a) {
        i64 g = 0;
        for (int i = 0; i < b; ++i) g = g * ord + mod(a[i], ord);
        return g;
    };
    std::vector<std::vector<i64>> shift(bp, std::vector<i64>(G));
    for (int k = 0; k < bp; ++k) {
        const auto q = K.data().direction(k);
        for (i64 g = 0; g < G; ++g) {
            auto a = coords(g);
            for (int i = 0; i < b; ++i) a[i] += q[i];
            shift[k][g] = index(a); // [q] [g] = [g + q]
        }
    }
    std::vector<CycMatrix> M;
    for (const auto& m : K.data().M) {
        M.emplace_back();
        for (const auto& row : m) {
            M.back().emplace_back();
            for (const auto& x : row) M.back().back().push_back(x.embed(F));
        }
    }
    // vector layout: ((subset * G) + g) * r + alpha
    auto apply_d = [&](int p, const std::vector<Cyc>& v) {
        std::vector<Cyc> out(static_cast<size_t>(K.dim(p + 1)) * G, Cyc(F, 0));
        for (const auto& bl : K.blocks(p)) {
            const Cyc s(F, bl.sign);
            for (i64 g = 0; g < G; ++g)
                for (int c = 0; c < r; ++c) {
                    const Cyc& x = v[(bl.col * G + g) * r + c];
                    if (x.is_zero()) continue;
                    const i64 h = shift[bl.direction][g];
                    for (int a = 0; a < r; ++a) {
                        const Cyc& mac = M[bl.direction][a][c];
                        if (!mac.is_zero()) {
                            Cyc& o = out[(bl.row * G + h) * r + a];
                            o = o + s * mac * x;
                        }
                    }
                    Cyc& o = out[(bl.row * G + g) * r + c];
                    o = o - s * x;
                }
        }
        return out;
    };
    // e_chi [0] = |G|^{-1} sum_g chi(g)^{-1} [g]
    std::vector<Cyc> idem(G, Cyc(F, 0));
    const Cyc invG(F, mpq_class(1, static_cast<unsigned long>(G)));
    for (i64 g = 0; g < G; ++g) idem[g] = invG * Cyc::zeta_power(F, -dot_mod(chi.exponents, coords(g), ord) * scale);

    std::vector<std::vector<std::vector<Cyc>>> proj(bp + 1); // spanning sets of e_chi K^p
    std::vector<int> proj_rank(bp + 1);
    for (int p = 0; p <= bp; ++p) {
        const size_t width = static_cast<size_t>(K.dim(p)) * G;
        for (size_t s = 0; s < K.subsets(p).size(); ++s)
            for (int a = 0; a < r; ++a) {
                std::vector<Cyc> w(width, Cyc(F, 0));
                for (i64 g = 0; g < G; ++g) w[(s * G + g) * r + a] = idem[g];
                proj[p].push_back(w);
            }
        proj_rank[p] = proj[p].empty() ? 0 : static_cast<int>(exact_rank(proj[p], width));
    }
    std::vector<int> ranks(bp, 0);
    for (int p = 0; p < bp; ++p) {
        std::vector<std::vector<Cyc>> images;
        for (const auto& w : proj[p]) images.push_back(apply_d(p, w));
        ranks[p] = images.empty() ? 0 : static_cast<int>(exact_rank(images, images[0].size()));
    }
    std::vector<int> dims(bp + 1);
    for (int p = 0; p <= bp; ++p) dims[p] = proj_rank[p] - (p < bp ? ranks[p] : 0) - (p > 0 ? ranks[p - 1] : 0);
    return dims;
}

std::vector<int> generic_dims(const MellinComplex& K)
{
    const int b = K.group_rank(), bp = K.directions();
    const CycloPtr& F = K.data().entries;
    std::vector<int> ranks(bp, 0);
    for (int p = 0; p < bp && K.rank() > 0; ++p) {
        // a minor of size s has exponent width <= s * max_k |q_ki| in u_i
        const int s = std::min(K.dim(p), K.dim(p + 1));
        std::vector<i64> width(b, 0);
        for (int k = 0; k < bp; ++k) {
            const auto q = K.data().direction(k);
            for (int i = 0; i < b; ++i) width[i] = std::max<i64>(width[i], s * std::llabs(q[i]));
        }
        i64 points = 1;
        for (int i = 0; i < b; ++i) {
            points *= width[i] + 1;
            require(points <= 200000, ErrorKind::BudgetExceeded, "generic rank grid too large");
        }
        int best = 0;
        std::vector<i64> t(b, 1);
        for (i64 idx = 0; idx < points && best < s; ++idx) {
            i64 rest = idx;
            for (int i = 0; i < b; ++i) {
                t[i] = 1 + rest % (width[i] + 1);
                rest /= width[i] + 1;
            }
            std::vector<Cyc> u;
            for (int k = 0; k < bp; ++k) {
                const auto q = K.data().direction(k);
                mpq_class val = 1;
                for (int i = 0; i < b; ++i) {
                    mpz_class pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(t[i]), static_cast<unsigned long>(std::llabs(q[i])));
                    if (q[i] >= 0) val *= pw;
                    else val /= pw;
                }
                u.push_back(Cyc(F, val));
            }
            best = std::max(best, static_cast<int>(cyc_rank(K.differential(p, u))));
        }
        ranks[p] = best;
    }
    return dims_from_ranks(K, ranks);
}

int euler_characteristic(const std::vector<int>& dims)
{
    int e = 0;
    for (size_t p = 0; p < dims.size(); ++p) e += p % 2 ? -dims[p] : dims[p];
    return e;
}

} // namespace ladic
