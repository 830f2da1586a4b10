#include "ladic/tate/closure.hpp"

#include <map>

#include "ladic/core/echelon.hpp"
#include "ladic/core/error.hpp"

namespace ladic {

int padic_rank(std::vector<std::vector<PadicScalar>> rows)
{
    if (rows.empty()) return 0;
    const size_t width = rows[0].size();
    int rank = 0;
    size_t top = 0;
    std::vector<bool> used(width, false);
    while (top < rows.size()) {
        // full pivoting on minimal valuation
        int best_r = -1, best_c = -1, best_v = 0;
        for (size_t r = top; r < rows.size(); ++r)
            for (size_t c = 0; c < width; ++c) {
                if (used[c] || rows[r][c].is_zero()) continue;
                const int v = rows[r][c].val_units();
                if (best_r < 0 || v < best_v) {
                    best_r = static_cast<int>(r);
                    best_c = static_cast<int>(c);
                    best_v = v;
                }
            }
        if (best_r < 0) {
            for (size_t r = top; r < rows.size(); ++r)
                for (size_t c = 0; c < width; ++c)
                    require(used[c] || rows[r][c].is_exact_zero(), ErrorKind::RankUncertain,
                            "remaining entries are zero only to the working precision");
            break;
        }
        std::swap(rows[top], rows[best_r]);
        used[best_c] = true;
        const PadicScalar inv = rows[top][best_c].inverse();
        for (size_t r = top + 1; r < rows.size(); ++r) {
            if (rows[r][best_c].is_exact_zero()) continue;
            const PadicScalar f = rows[r][best_c] * inv;
            for (size_t c = 0; c < width; ++c)
                if (!used[c] || c == static_cast<size_t>(best_c)) rows[r][c] = rows[r][c] - f * rows[top][c];
        }
        ++rank;
        ++top;
    }
    return rank;
}

namespace {

struct Layout {
    std::vector<Exponent> monos;
    std::map<Exponent, size_t> index;
    std::vector<int> degree;
};

Layout make_layout(int vars, int n)
{
    Layout L;
    L.monos = monomials(vars, 0, n - 1);
    for (size_t i = 0; i < L.monos.size(); ++i) {
        L.index[L.monos[i]] = i;
        L.degree.push_back(total_degree(L.monos[i]));
    }
    return L;
}

std::string format_rational_row(const std::vector<mpq_class>& row, const Layout& L)
{
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (sgn(row[i]) == 0) continue;
        mpq_class c = row[i];
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        std::string mono;
        for (size_t v = 0; v < L.monos[i].size(); ++v) {
            const int e = L.monos[i][v];
            if (e == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "T" + std::to_string(v + 1);
            if (e > 1) mono += "^" + std::to_string(e);
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (mono.empty()) out += c.get_str();
        else if (c == 1) out += mono;
        else out += c.get_str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

// Field-generic Krylov closure driver.
template <class F, class RankFn, class ApplyFn>
ClosureReport run_closure(const std::vector<std::vector<F>>& gens, const Layout& L, RankFn rank_of, ApplyFn apply, const F& zero)
{
    ClosureReport rep;
    rep.input_rank = rank_of(gens);
    std::vector<std::vector<F>> images = gens;
    for (const auto& g : gens) images.push_back(apply(g));
    rep.input_stable = rank_of(images) == rep.input_rank;

    std::vector<std::vector<F>> w;
    for (const auto& g : gens) {
        auto trial = w;
        trial.push_back(g);
        if (rank_of(trial) > static_cast<int>(w.size())) w.push_back(g);
    }
    for (size_t i = 0; i < w.size(); ++i) {
        auto img = apply(w[i]);
        auto trial = w;
        trial.push_back(img);
        if (rank_of(trial) > static_cast<int>(w.size())) w.push_back(img);
    }
    rep.dimension = static_cast<int>(w.size());
    auto all = w;
    for (const auto& v : w) all.push_back(apply(v));
    rep.closure_stable = rank_of(all) == rep.dimension;

    const int top = L.monos.empty() ? 0 : L.degree.back();
    std::vector<std::vector<F>> comps;
    rep.graded_dims.assign(top + 1, 0);
    for (int d = 0; d <= top; ++d) {
        std::vector<std::vector<F>> piece;
        for (const auto& v : w) {
            auto c = v;
            for (size_t i = 0; i < c.size(); ++i)
                if (L.degree[i] != d) c[i] = zero;
            piece.push_back(c);
            comps.push_back(c);
        }
        rep.graded_dims[d] = rank_of(piece);
    }
    rep.graded = rank_of(comps) == rep.dimension;
    // soundness: in the graded case every component lies in V
    if (rep.graded) {
        for (const auto& c : comps) {
            auto trial = w;
            trial.push_back(c);
            require(rank_of(trial) == rep.dimension, ErrorKind::RankUncertain, "component membership re-check failed");
        }
    }
    return rep;
}

} // namespace

ClosureReport graded_closure_check(const std::vector<TruncatedSeries>& generators, const SigmaAction& sigma, int n)
{
    require(n >= 1, ErrorKind::OutOfRange, "closure needs n >= 1");
    require(!generators.empty(), ErrorKind::MalformedInput, "no generators");
    const int b = generators.front().vars();
    const RingPtr& ring = generators.front().ring();
    for (const auto& g : generators) {
        require(g.vars() == b, ErrorKind::DimensionMismatch, "generators in different variable counts");
        require(n - 1 <= g.degree_cap(), ErrorKind::OutOfRange, "n exceeds the degree cap + 1");
    }
    require(sigma.dim() == b, ErrorKind::DimensionMismatch, "sigma size differs from variable count");
    const Layout L = make_layout(b, n);
    const size_t width = L.monos.size();

    // sigma on A/M^n, column i = image of monomial i
    std::vector<std::vector<PadicScalar>> smat(width, std::vector<PadicScalar>(width, PadicScalar(ring)));
    bool exact = true;
    for (size_t i = 0; i < width; ++i) {
        const auto img = sigma_apply(TruncatedSeries::monomial(ring, n - 1, L.monos[i], PadicScalar::from_int(ring, 1)), sigma);
        for (const auto& [m, c] : img.terms()) {
            smat[L.index.at(m)][i] = c;
            exact = exact && c.is_exact();
        }
    }
    std::vector<std::vector<PadicScalar>> pgens;
    for (const auto& g : generators) {
        std::vector<PadicScalar> v(width, PadicScalar(ring));
        for (const auto& [m, c] : g.terms()) {
            if (total_degree(m) >= n) continue;
            v[L.index.at(m)] = c;
            exact = exact && c.is_exact();
        }
        pgens.push_back(v);
    }

    ClosureReport rep;
    if (exact) {
        auto to_q = [](const PadicScalar& x) {
            const i128 v = *x.exact_integer();
            mpz_class z(static_cast<long>(v >> 62));
            z <<= 62;
            z += static_cast<unsigned long>(static_cast<unsigned long long>(v & ((i128(1) << 62) - 1)));
            return mpq_class(z);
        };
        std::vector<std::vector<mpq_class>> qs(width, std::vector<mpq_class>(width));
        for (size_t r = 0; r < width; ++r)
            for (size_t c = 0; c < width; ++c) qs[r][c] = to_q(smat[r][c]);
        std::vector<std::vector<mpq_class>> qgens;
        for (const auto& v : pgens) {
            qgens.emplace_back();
            for (const auto& x : v) qgens.back().push_back(to_q(x));
        }
        auto rank_of = [width](const std::vector<std::vector<mpq_class>>& rows) { return static_cast<int>(exact_rank(rows, width)); };
        auto apply = [&qs, width](const std::vector<mpq_class>& v) {
            std::vector<mpq_class> out(width);
            for (size_t r = 0; r < width; ++r)
                for (size_t c = 0; c < width; ++c)
                    if (sgn(v[c]) != 0 && sgn(qs[r][c]) != 0) out[r] += qs[r][c] * v[c];
            return out;
        };
        rep = run_closure<mpq_class>(qgens, L, rank_of, apply, mpq_class(0));
        // reduced echelon basis of V for reporting
        EchelonBasis<mpq_class> eb(width);
        for (const auto& g : qgens) eb.insert(g);
        for (bool grew = true; grew;) {
            grew = false;
            const auto rows = eb.rows();
            for (const auto& r : rows) grew = eb.insert(apply(r)) || grew;
        }
        for (const auto& r : eb.rows()) rep.basis.push_back(format_rational_row(r, L));
        rep.exact = true;
    } else {
        auto rank_of = [](const std::vector<std::vector<PadicScalar>>& rows) { return padic_rank(rows); };
        auto apply = [&smat, width, &ring](const std::vector<PadicScalar>& v) {
            std::vector<PadicScalar> out(width, PadicScalar(ring));
            for (size_t r = 0; r < width; ++r)
                for (size_t c = 0; c < width; ++c)
                    if (!v[c].is_exact_zero() && !smat[r][c].is_exact_zero()) out[r] = out[r] + smat[r][c] * v[c];
            return out;
        };
        rep = run_closure<PadicScalar>(pgens, L, rank_of, apply, PadicScalar(ring));
        rep.exact = false;
    }
    rep.n = n;
    return rep;
}

} // namespace ladic
