#include "ladic/mellin/cyclotomic.hpp"

#include <cctype>
#include <map>

#include "ladic/core/echelon.hpp"
#include "ladic/core/error.hpp"
#include "ladic/core/op_counter.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

CycloPtr CycloField::make(i64 prime, int level)
{
    require(is_prime(prime), ErrorKind::MalformedInput, "l must be prime");
    require(level >= 0, ErrorKind::OutOfRange, "negative cyclotomic level");
    auto f = std::make_shared<CycloField>();
    f->prime = prime;
    f->level = level;
    if (level > 0) {
        auto ord = checked_pow(prime, level);
        require(ord && (prime - 1) * (*ord / prime) <= 512, ErrorKind::BudgetExceeded, "cyclotomic field too large");
        f->order = *ord;
        f->degree = static_cast<int>((prime - 1) * (*ord / prime));
    }
    return f;
}

namespace {

void check_field(const CycloPtr& a, const CycloPtr& b)
{
    require(a && b && a->prime == b->prime && a->level == b->level, ErrorKind::FieldMismatch, "cyclotomic elements from different fields");
}

// Reduce a polynomial in z modulo Phi_{l^L}: z^{d} = -sum_{j<l-1} z^{j l^{L-1}}.
std::vector<mpq_class> reduce(const CycloField& F, std::vector<mpq_class> v)
{
    const int d = F.degree;
    if (F.level == 0) {
        mpq_class s = 0;
        for (const auto& x : v) s += x;
        return {s};
    }
    const i64 step = F.order / F.prime;
    for (int i = static_cast<int>(v.size()) - 1; i >= d; --i) {
        if (sgn(v[i]) == 0) continue;
        const mpq_class c = v[i];
        v[i] = 0;
        for (i64 j = 0; j < F.prime - 1; ++j) v[i - d + j * step] -= c;
    }
    v.resize(d);
    return v;
}

} // namespace

Cyc::Cyc(CycloPtr field, const mpq_class& c) : field_(std::move(field)), c_(field_->degree, 0) { c_[0] = c; }

Cyc Cyc::zeta_power(CycloPtr field, i64 e)
{
    Cyc x(field, 0);
    if (field->level == 0) {
        x.c_[0] = 1;
        return x;
    }
    const i64 k = mod(e, field->order);
    std::vector<mpq_class> v(k + 1, 0);
    v[k] = 1;
    x.c_ = reduce(*field, std::move(v));
    return x;
}

bool Cyc::is_zero() const
{
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyc::is_rational() const
{
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Cyc Cyc::operator-() const
{
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc Cyc::operator+(const Cyc& y) const
{
    check_field(field_, y.field_);
    Cyc r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += y.c_[i];
    count_op();
    return r;
}

Cyc Cyc::operator-(const Cyc& y) const
{
    check_field(field_, y.field_);
    Cyc r = *this;
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= y.c_[i];
    count_op();
    return r;
}

Cyc Cyc::operator*(const Cyc& y) const
{
    check_field(field_, y.field_);
    count_op();
    Cyc r(field_, 0);
    if (is_zero() || y.is_zero()) return r;
    if (y.is_rational()) {
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * y.c_[0];
        return r;
    }
    if (is_rational()) {
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = y.c_[i] * c_[0];
        return r;
    }
    std::vector<mpq_class> v(2 * c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (size_t j = 0; j < c_.size(); ++j)
            if (sgn(y.c_[j]) != 0) v[i + j] += c_[i] * y.c_[j];
    }
    r.c_ = reduce(*field_, std::move(v));
    return r;
}

bool Cyc::operator==(const Cyc& y) const
{
    check_field(field_, y.field_);
    return c_ == y.c_;
}

std::vector<std::vector<mpq_class>> Cyc::mult_matrix() const
{
    const int d = field_->degree;
    std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d, 0));
    for (int j = 0; j < d; ++j) {
        const Cyc col = *this * zeta_power(field_, j);
        for (int i = 0; i < d; ++i) m[i][j] = col.c_[i];
    }
    return m;
}

Cyc Cyc::inverse() const
{
    require(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
    if (is_rational()) return Cyc(field_, 1 / c_[0]);
    // solve (mult matrix) x = e_0
    const int d = field_->degree;
    auto m = mult_matrix();
    std::vector<mpq_class> rhs(d, 0);
    rhs[0] = 1;
    for (int c = 0; c < d; ++c) {
        int piv = c;
        while (sgn(m[piv][c]) == 0) ++piv;
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        const mpq_class inv = 1 / m[c][c];
        for (int j = c; j < d; ++j) m[c][j] *= inv;
        rhs[c] *= inv;
        for (int r = 0; r < d; ++r) {
            if (r == c || sgn(m[r][c]) == 0) continue;
            const mpq_class f = m[r][c];
            for (int j = c; j < d; ++j) m[r][j] -= f * m[c][j];
            rhs[r] -= f * rhs[c];
        }
    }
    Cyc x(field_, 0);
    x.c_ = rhs;
    count_op(d * d);
    return x;
}

mpq_class Cyc::norm() const
{
    auto m = mult_matrix();
    const int d = field_->degree;
    mpq_class det = 1;
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r = c; r < d && piv < 0; ++r)
            if (sgn(m[r][c]) != 0) piv = r;
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int r = c + 1; r < d; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            const mpq_class f = m[r][c] / m[c][c];
            for (int j = c; j < d; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

Cyc Cyc::embed(const CycloPtr& target) const
{
    require(target->prime == field_->prime && target->level >= field_->level, ErrorKind::FieldMismatch, "cannot embed into a smaller cyclotomic field");
    if (target->level == field_->level) return *this;
    const i64 step = target->order / field_->order;
    Cyc r(target, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) r = r + Cyc(target, c_[i]) * zeta_power(target, static_cast<i64>(i) * step);
    return r;
}

std::string Cyc::to_string() const
{
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        mpq_class c = c_[i];
        const bool neg = sgn(c) < 0;
        if (neg) c = -c;
        std::string term;
        if (i == 0) term = c.get_str();
        else {
            term = c == 1 ? "" : c.get_str() + "*";
            term += i == 1 ? "z" : "z^" + std::to_string(i);
        }
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        out += term;
    }
    return out.empty() ? "0" : out;
}

Cyc Cyc::parse(CycloPtr field, const std::string& text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    require(!s.empty(), ErrorKind::MalformedInput, "empty cyclotomic entry");
    Cyc total(field, 0);
    size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            if (s[end] == '^' && end + 1 < s.size() && s[end + 1] == '-') ++end;
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        require(!term.empty(), ErrorKind::MalformedInput, "bad cyclotomic entry '" + text + "'");
        mpq_class coeff = 1;
        i64 power = 0;
        const size_t zpos = term.find('z');
        std::string cpart = zpos == std::string::npos ? term : term.substr(0, zpos);
        if (zpos != std::string::npos) {
            if (!cpart.empty()) {
                require(cpart.back() == '*', ErrorKind::MalformedInput, "expected c*z^a in '" + text + "'");
                cpart.pop_back();
            }
            const std::string zpart = term.substr(zpos + 1);
            if (zpart.empty()) power = 1;
            else {
                require(zpart[0] == '^', ErrorKind::MalformedInput, "expected z^a in '" + text + "'");
                power = parse_int(zpart.substr(1));
            }
            require(field->level > 0 || power == 0, ErrorKind::FieldTooSmall, "z used with zeta level 0");
        }
        if (!cpart.empty()) {
            const Rational q = parse_rational(cpart);
            coeff = mpq_class(static_cast<long>(q.numerator()), static_cast<long>(q.denominator()));
        }
        total = total + Cyc(field, sign * coeff) * zeta_power(field, power);
        pos = end;
    }
    return total;
}

CycMatrix identity(const CycloPtr& f, int n)
{
    CycMatrix m(n, std::vector<Cyc>(n, Cyc(f, 0)));
    for (int i = 0; i < n; ++i) m[i][i] = Cyc(f, 1);
    return m;
}

CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b)
{
    if (a.empty()) return {};
    const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    require(a[0].size() == k, ErrorKind::DimensionMismatch, "matrix product size mismatch");
    CycMatrix out(n, std::vector<Cyc>(m, Cyc(a[0][0].field(), 0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j)
            for (size_t l = 0; l < k; ++l)
                if (!a[i][l].is_zero() && !b[l][j].is_zero()) out[i][j] = out[i][j] + a[i][l] * b[l][j];
    return out;
}

Cyc determinant(CycMatrix a)
{
    const size_t n = a.size();
    require(n > 0, ErrorKind::DimensionMismatch, "determinant of an empty matrix");
    Cyc det(a[0][0].field(), 1);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n && piv == n; ++r)
            if (!a[r][c].is_zero()) piv = r;
        if (piv == n) return Cyc(a[0][0].field(), 0);
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det = det * a[c][c];
        const Cyc inv = a[c][c].inverse();
        for (size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const Cyc f = a[r][c] * inv;
            for (size_t j = c; j < n; ++j) a[r][j] = a[r][j] - f * a[c][j];
        }
    }
    return det;
}

size_t cyc_rank(const CycMatrix& rows)
{
    if (rows.empty()) return 0;
    return exact_rank(rows, rows[0].size());
}

} // namespace ladic
