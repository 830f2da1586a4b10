#include "ladic/tate/sigma.hpp"

#include <gmpxx.h>

#include "ladic/core/error.hpp"

namespace ladic {

SigmaAction SigmaAction::diag(const RingPtr& ring, const std::vector<PadicScalar>& alphas)
{
    SigmaAction s;
    s.ring = ring;
    const int b = static_cast<int>(alphas.size());
    s.matrix.assign(b, std::vector<PadicScalar>(b, PadicScalar(ring)));
    for (int i = 0; i < b; ++i) s.matrix[i][i] = alphas[i];
    s.diagonal = true;
    s.eigenvalues = alphas;
    return s;
}

SigmaAction SigmaAction::diag_integers(const RingPtr& ring, const std::vector<i64>& alphas)
{
    std::vector<PadicScalar> a;
    std::vector<std::vector<i64>> m(alphas.size(), std::vector<i64>(alphas.size(), 0));
    for (size_t i = 0; i < alphas.size(); ++i) {
        a.push_back(PadicScalar::from_int(ring, alphas[i]));
        m[i][i] = alphas[i];
    }
    SigmaAction s = diag(ring, a);
    s.charpoly = integer_charpoly(m);
    return s;
}

SigmaAction SigmaAction::from_matrix(const RingPtr& ring, std::vector<std::vector<PadicScalar>> matrix)
{
    const size_t b = matrix.size();
    for (const auto& row : matrix) require(row.size() == b, ErrorKind::DimensionMismatch, "sigma must be square");
    SigmaAction s;
    s.ring = ring;
    s.matrix = std::move(matrix);
    s.diagonal = true;
    for (size_t i = 0; i < b; ++i)
        for (size_t j = 0; j < b; ++j)
            if (i != j && !s.matrix[i][j].is_exact_zero()) s.diagonal = false;
    if (s.diagonal)
        for (size_t i = 0; i < b; ++i) s.eigenvalues.push_back(s.matrix[i][i]);
    std::vector<std::vector<i64>> ints(b, std::vector<i64>(b));
    bool integral = true;
    for (size_t i = 0; i < b && integral; ++i)
        for (size_t j = 0; j < b && integral; ++j) {
            const auto& e = s.matrix[i][j].exact_integer();
            if (!e || *e > (i128(1) << 40) || *e < -(i128(1) << 40)) integral = false;
            else ints[i][j] = static_cast<i64>(*e);
        }
    if (integral) s.charpoly = integer_charpoly(ints);
    return s;
}

SigmaAction SigmaAction::from_integers(const RingPtr& ring, const std::vector<std::vector<i64>>& matrix)
{
    std::vector<std::vector<PadicScalar>> m;
    for (const auto& row : matrix) {
        m.emplace_back();
        for (i64 v : row) m.back().push_back(PadicScalar::from_int(ring, v));
    }
    return from_matrix(ring, std::move(m));
}

PadicScalar alpha_power(const SigmaAction& sigma, const Exponent& n)
{
    require(sigma.diagonal, ErrorKind::NotDiagonal, "alpha^n needs a diagonal action");
    require(static_cast<int>(n.size()) == sigma.dim(), ErrorKind::DimensionMismatch, "exponent length differs from sigma size");
    PadicScalar r = PadicScalar::from_int(sigma.ring, 1);
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i]) r = r * sigma.eigenvalues[i].pow(n[i]);
    return r;
}

TruncatedSeries sigma_apply(const TruncatedSeries& g, const SigmaAction& sigma)
{
    require(sigma.dim() == g.vars(), ErrorKind::DimensionMismatch, "sigma size differs from variable count");
    if (sigma.diagonal) {
        TruncatedSeries r(g.ring(), g.vars(), g.degree_cap());
        for (const auto& [n, c] : g.terms()) r.set(n, c * alpha_power(sigma, n));
        return r;
    }
    const int b = g.vars();
    std::vector<TruncatedSeries> images;
    for (int j = 0; j < b; ++j) {
        TruncatedSeries img(g.ring(), b, g.degree_cap());
        for (int i = 0; i < b; ++i) {
            Exponent e(b, 0);
            e[i] = 1;
            img.set(e, sigma.matrix[i][j]);
        }
        images.push_back(img);
    }
    return g.substitute(images);
}

std::vector<i64> integer_charpoly(const std::vector<std::vector<i64>>& m)
{
    // Faddeev-LeVerrier over Z
    const int d = static_cast<int>(m.size());
    std::vector<std::vector<mpz_class>> a(d, std::vector<mpz_class>(d)), mk(d, std::vector<mpz_class>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[i][j] = static_cast<long>(m[i][j]);
    std::vector<mpz_class> c(d + 1, 0);
    c[d] = 1;
    for (int k = 1; k <= d; ++k) {
        std::vector<std::vector<mpz_class>> next(d, std::vector<mpz_class>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                mpz_class s = 0;
                for (int l = 0; l < d; ++l) s += a[i][l] * mk[l][j];
                next[i][j] = s + (i == j ? c[d - k + 1] : mpz_class(0));
            }
        mk = next;
        mpz_class tr = 0;
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) tr += a[i][l] * mk[l][i];
        c[d - k] = -tr / k;
    }
    std::vector<i64> out;
    for (const auto& v : c) {
        require(v.fits_slong_p(), ErrorKind::OutOfRange, "characteristic polynomial coefficient overflow");
        out.push_back(v.get_si());
    }
    return out;
}

namespace {

using Matrix = std::vector<std::vector<PadicScalar>>;

PadicScalar eval_poly(const RingPtr& ring, const std::vector<i64>& p, const PadicScalar& x)
{
    PadicScalar r(ring);
    for (size_t i = p.size(); i-- > 0;) r = r * x + PadicScalar::from_int(ring, p[i]);
    return r;
}

std::vector<i64> derivative(const std::vector<i64>& p)
{
    std::vector<i64> d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<i64>(i));
    return d;
}

// Inverse over O_E with minimal-valuation pivoting; NotDiagonal unless the determinant is a unit.
Matrix invert_unimodular(Matrix a)
{
    const int n = static_cast<int>(a.size());
    const RingPtr& ring = a[0][0].ring();
    Matrix inv(n, std::vector<PadicScalar>(n, PadicScalar(ring)));
    for (int i = 0; i < n; ++i) inv[i][i] = PadicScalar::from_int(ring, 1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col].is_unit()) {
                piv = r;
                break;
            }
        require(piv >= 0, ErrorKind::NotDiagonal, "eigenvector matrix is not invertible over the integers of E");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        const PadicScalar p = a[col][col].inverse();
        for (int j = 0; j < n; ++j) {
            a[col][j] = a[col][j] * p;
            inv[col][j] = inv[col][j] * p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_exact_zero()) continue;
            const PadicScalar f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] = a[r][j] - f * a[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

std::vector<std::vector<i64>> residue_field_elements(const RingParams& R)
{
    const int f = R.residue_degree();
    const i64 q = R.residue_cardinality();
    require(q <= 4096, ErrorKind::NotDiagonal, "residue field too large for root enumeration");
    std::vector<std::vector<i64>> out;
    for (i64 idx = 0; idx < q; ++idx) {
        std::vector<i64> digits(R.degree(), 0);
        i64 t = idx;
        for (int i = 0; i < f; ++i) {
            digits[i] = t % R.prime();
            t /= R.prime();
        }
        out.push_back(digits);
    }
    return out;
}

} // namespace

Diagonalization diagonalize(const SigmaAction& sigma)
{
    const RingPtr& ring = sigma.ring;
    const int b = sigma.dim();
    if (sigma.diagonal) {
        Diagonalization d{sigma, {}, {}};
        d.basis.assign(b, std::vector<PadicScalar>(b, PadicScalar(ring)));
        for (int i = 0; i < b; ++i) d.basis[i][i] = PadicScalar::from_int(ring, 1);
        d.inverse = d.basis;
        return d;
    }
    require(sigma.charpoly.has_value(), ErrorKind::NotDiagonal, "diagonalization needs an integer matrix");
    const auto& p = *sigma.charpoly;
    const auto dp = derivative(p);
    std::vector<PadicScalar> roots;
    for (const auto& digits : residue_field_elements(*ring)) {
        PadicScalar x = PadicScalar::from_rep(ring, digits, ring->precision());
        if (!x.is_zero() && !x.is_unit()) continue;
        if (x.is_zero()) x = PadicScalar(ring);
        const PadicScalar px = eval_poly(ring, p, x);
        if (!px.is_zero() && px.val_units() == 0) continue;
        const PadicScalar dx = eval_poly(ring, dp, x);
        require(!dx.is_zero() && dx.is_unit(), ErrorKind::NotDiagonal, "repeated eigenvalue modulo lambda");
        for (int it = 0; it < 2 * ring->precision() + 4; ++it) {
            const PadicScalar fx = eval_poly(ring, p, x);
            if (fx.is_zero()) break;
            x = x - fx / eval_poly(ring, dp, x);
        }
        roots.push_back(x);
    }
    require(static_cast<int>(roots.size()) == b, ErrorKind::NotDiagonal, "characteristic polynomial does not split with distinct residues over E");

    Matrix basis;
    for (int k = 0; k < b; ++k) {
        // spectral projector prod_{j != k} (sigma - alpha_j) / (alpha_k - alpha_j)
        Matrix proj(b, std::vector<PadicScalar>(b, PadicScalar(ring)));
        for (int i = 0; i < b; ++i) proj[i][i] = PadicScalar::from_int(ring, 1);
        for (int j = 0; j < b; ++j) {
            if (j == k) continue;
            const PadicScalar den = (roots[k] - roots[j]).inverse();
            Matrix next(b, std::vector<PadicScalar>(b, PadicScalar(ring)));
            for (int r = 0; r < b; ++r)
                for (int c = 0; c < b; ++c) {
                    PadicScalar s(ring);
                    for (int l = 0; l < b; ++l) {
                        PadicScalar m = sigma.matrix[r][l];
                        if (r == l) m = m - roots[j];
                        s = s + m * proj[l][c];
                    }
                    next[r][c] = s * den;
                }
            proj = next;
        }
        int col = -1;
        for (int c = 0; c < b && col < 0; ++c)
            for (int r = 0; r < b; ++r)
                if (proj[r][c].is_unit()) {
                    col = c;
                    break;
                }
        require(col >= 0, ErrorKind::NotDiagonal, "eigenvector has no unit entry");
        std::vector<PadicScalar> v(b, PadicScalar(ring));
        for (int r = 0; r < b; ++r) v[r] = proj[r][col];
        basis.push_back(v);
    }
    Diagonalization d{SigmaAction::diag(ring, roots), basis, invert_unimodular(basis)};
    d.diagonal.charpoly = sigma.charpoly;
    return d;
}

TruncatedSeries to_eigen_coordinates(const TruncatedSeries& g, const Diagonalization& d)
{
    const int b = g.vars();
    std::vector<TruncatedSeries> images;
    for (int j = 0; j < b; ++j) {
        TruncatedSeries img(g.ring(), b, g.degree_cap());
        for (int k = 0; k < b; ++k) {
            Exponent e(b, 0);
            e[k] = 1;
            img.set(e, d.inverse[j][k]);
        }
        images.push_back(img);
    }
    return g.substitute(images);
}

} // namespace ladic
