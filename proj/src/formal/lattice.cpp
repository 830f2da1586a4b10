#include "ladic/formal/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "ladic/core/error.hpp"
#include "ladic/core/faults.hpp"

namespace ladic {

namespace {

int column_count(const IntMatrix& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

using ZMatrix = std::vector<std::vector<mpz_class>>;

int ord_z(i64 p, mpz_class z)
{
    int k = 0;
    const mpz_class pz = static_cast<long>(p);
    while (z != 0 && z % pz == 0) {
        z /= pz;
        ++k;
    }
    return k;
}

} // namespace

IntMatrix transpose(const IntMatrix& m)
{
    const int r = static_cast<int>(m.size()), c = column_count(m);
    IntMatrix t(c, std::vector<i64>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) t[j][i] = m[i][j];
    return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    const int n = static_cast<int>(a.size()), k = column_count(a), m = column_count(b);
    require(static_cast<int>(b.size()) == k || (k == 0 && b.empty()), ErrorKind::DimensionMismatch, "matrix product size mismatch");
    IntMatrix out(n, std::vector<i64>(m, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            i128 s = 0;
            for (int l = 0; l < k; ++l) s += static_cast<i128>(a[i][l]) * b[l][j];
            require(s < (i128(1) << 62) && s > -(i128(1) << 62), ErrorKind::OutOfRange, "integer matrix entry overflow");
            out[i][j] = static_cast<i64>(s);
        }
    return out;
}

IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty()) return b;
    if (b.empty()) return a;
    require(a.size() == b.size(), ErrorKind::DimensionMismatch, "row counts differ");
    IntMatrix out = a;
    for (size_t i = 0; i < a.size(); ++i) out[i].insert(out[i].end(), b[i].begin(), b[i].end());
    return out;
}

std::vector<mpz_class> smith_invariants(const IntMatrix& m)
{
    const int rows = static_cast<int>(m.size()), cols = column_count(m);
    ZMatrix a(rows, std::vector<mpz_class>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = static_cast<long>(m[i][j]);
    std::vector<mpz_class> out;
    for (int t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block as pivot
            int pr = -1, pc = -1;
            for (int i = t; i < rows; ++i)
                for (int j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
                        pr = i;
                        pc = j;
                    }
            if (pr < 0) {
                std::sort(out.begin(), out.end());
                return out;
            }
            std::swap(a[t], a[pr]);
            for (auto& row : a) std::swap(row[t], row[pc]);
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                const mpz_class q = a[i][t] / a[t][t];
                for (int j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                clean = clean && a[i][t] == 0;
            }
            for (int j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                const mpz_class q = a[t][j] / a[t][t];
                for (int i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                clean = clean && a[t][j] == 0;
            }
            if (!clean) continue;
            // pivot must divide the rest of the block
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            for (int j = t; j < cols; ++j) a[t][j] += a[bad][j];
        }
        out.push_back(abs(a[t][t]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_saturated(const IntMatrix& columns, i64 prime)
{
    const int k = column_count(columns);
    if (k == 0) return true;
    const auto inv = smith_invariants(columns);
    if (static_cast<int>(inv.size()) != k) return false;
    if (fault_active(Fault::unsaturated_lattice)) return true;
    for (const auto& d : inv)
        if (d % static_cast<long>(prime) == 0) return false;
    return true;
}

bool lattice_contains(const IntMatrix& b, const IntMatrix& a, i64 prime, int rows)
{
    if (column_count(a) == 0) return true;
    require(static_cast<int>(a.size()) == rows, ErrorKind::DimensionMismatch, "lattice has the wrong number of rows");
    if (column_count(b) == 0) return smith_invariants(a).empty();
    const auto ib = smith_invariants(b), iab = smith_invariants(hconcat(b, a));
    if (ib.size() != iab.size()) return false;
    int ob = 0, oab = 0;
    for (const auto& d : ib) ob += ord_z(prime, d);
    for (const auto& d : iab) oab += ord_z(prime, d);
    return ob == oab;
}

bool lattice_equal(const IntMatrix& a, const IntMatrix& b, i64 prime, int rows)
{
    return lattice_contains(a, b, prime, rows) && lattice_contains(b, a, prime, rows);
}

IntMatrix inverse_mod(const IntMatrix& a, i64 m)
{
    const int n = static_cast<int>(a.size());
    IntMatrix x(n, std::vector<i64>(2 * n, 0));
    for (int i = 0; i < n; ++i) {
        require(static_cast<int>(a[i].size()) == n, ErrorKind::DimensionMismatch, "matrix must be square");
        for (int j = 0; j < n; ++j) x[i][j] = mod(a[i][j], m);
        x[i][n + i] = 1 % m;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n && piv < 0; ++r)
            if (std::gcd(x[r][c], m) == 1) piv = r;
        require(piv >= 0, ErrorKind::NonInvertible, "matrix is not invertible modulo " + std::to_string(m));
        std::swap(x[c], x[piv]);
        const i64 inv = invmod(x[c][c], m);
        for (auto& v : x[c]) v = mulmod(v, inv, m);
        for (int r = 0; r < n; ++r) {
            if (r == c || x[r][c] == 0) continue;
            const i64 f = x[r][c];
            for (int j = 0; j < 2 * n; ++j) x[r][j] = mod(x[r][j] - mulmod(f, x[c][j], m), m);
        }
    }
    IntMatrix out(n, std::vector<i64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = x[i][n + j];
    return out;
}

} // namespace ladic
