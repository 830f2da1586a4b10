#include "ladic/core/padic_scalar.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "ladic/core/error.hpp"
#include "ladic/core/op_counter.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

namespace detail {

std::vector<i64> o_mul(const RingParams& R, const std::vector<i64>& a, const std::vector<i64>& b)
{
    const int d = R.degree();
    const i64 m = R.coeff_modulus();
    std::vector<i128> acc(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d; ++j) acc[i + j] = (acc[i + j] + static_cast<i128>(a[i]) * b[j]) % m;
    }
    const auto& p = R.poly();
    for (int i = 2 * d - 2; i >= d; --i) {
        const i64 c = static_cast<i64>(acc[i] % m);
        if (c == 0) continue;
        for (int j = 0; j < d; ++j) acc[i - d + j] = (acc[i - d + j] - static_cast<i128>(c) * p[j]) % m;
    }
    std::vector<i64> out(d);
    for (int i = 0; i < d; ++i) out[i] = mod(static_cast<i64>(acc[i] % m), m);
    count_op();
    return out;
}

std::vector<i64> o_add(const RingParams& R, const std::vector<i64>& a, const std::vector<i64>& b)
{
    const i64 m = R.coeff_modulus();
    std::vector<i64> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = mod(a[i] + b[i] - m, m);
    return out;
}

int o_valuation(const RingParams& R, const std::vector<i64>& a)
{
    const int k = R.coeff_digits();
    const i64 p = R.prime();
    if (R.kind() == ExtensionKind::eisenstein) {
        const int e = R.ramification();
        int best = e * k;
        for (int j = 0; j < e; ++j)
            if (a[j] != 0) best = std::min(best, e * ord(p, a[j]) + j);
        return best;
    }
    int best = k;
    for (i64 c : a)
        if (c != 0) best = std::min(best, ord(p, c));
    return best;
}

std::vector<i64> o_reduce(const RingParams& R, std::vector<i64> a, int rel)
{
    const i64 p = R.prime();
    const int k = R.coeff_digits();
    if (R.kind() == ExtensionKind::eisenstein) {
        const int e = R.ramification();
        const int q = rel / e, s = rel % e;
        for (int j = 0; j < e; ++j) {
            const int digits = std::min(k, q + (j < s ? 1 : 0));
            a[j] = mod(a[j], ipow(p, digits));
        }
        return a;
    }
    const i64 m = ipow(p, std::min(k, rel));
    for (auto& c : a) c = mod(c, m);
    return a;
}

} // namespace detail

using detail::o_add;
using detail::o_mul;
using detail::o_reduce;
using detail::o_valuation;

namespace {

std::vector<i64> mul_lambda(const RingParams& R, std::vector<i64> a, int d)
{
    const i64 m = R.coeff_modulus();
    if (R.kind() != ExtensionKind::eisenstein) {
        if (d >= R.coeff_digits()) return std::vector<i64>(a.size(), 0);
        const i64 f = ipow(R.prime(), d);
        for (auto& c : a) c = mulmod(c, f, m);
        return a;
    }
    const int n = R.degree();
    if (d >= n * R.coeff_digits()) return std::vector<i64>(a.size(), 0);
    const auto& p = R.poly();
    for (int step = 0; step < d; ++step) {
        const i64 top = a[n - 1];
        for (int j = n - 1; j > 0; --j) a[j] = a[j - 1];
        a[0] = 0;
        if (top != 0)
            for (int j = 0; j < n; ++j) a[j] = mod(a[j] - mulmod(top, p[j], m), m);
    }
    return a;
}

// a / lambda^d; a must have valuation >= d.
std::vector<i64> div_lambda(const RingParams& R, std::vector<i64> a, int d)
{
    const i64 p = R.prime();
    if (R.kind() != ExtensionKind::eisenstein) {
        const i64 f = ipow(p, d);
        for (auto& c : a) c /= f;
        return a;
    }
    const int n = R.degree();
    const i64 m = R.coeff_modulus();
    const auto& lt = R.ell_over_lambda();
    for (int step = 0; step < d; ++step) {
        const i64 c0 = a[0] / p;
        for (int j = 0; j + 1 < n; ++j) a[j] = a[j + 1];
        a[n - 1] = 0;
        if (c0 != 0)
            for (int j = 0; j < n; ++j) a[j] = mod(a[j] + mulmod(c0, lt[j], m), m);
    }
    return a;
}

std::vector<i64> one_rep(const RingParams& R)
{
    std::vector<i64> v(R.degree(), 0);
    v[0] = 1;
    return v;
}

// eps = l / lambda^e
std::vector<i64> epsilon(const RingParams& R)
{
    if (R.kind() != ExtensionKind::eisenstein) return one_rep(R);
    return div_lambda(R, R.ell_over_lambda(), R.ramification() - 1);
}

std::vector<i64> o_pow(const RingParams& R, std::vector<i64> a, i64 n)
{
    std::vector<i64> r = one_rep(R);
    while (n > 0) {
        if (n & 1) r = o_mul(R, r, a);
        n >>= 1;
        if (n) a = o_mul(R, a, a);
    }
    return r;
}

// inverse of a unit modulo lambda^rel
std::vector<i64> o_unit_inverse(const RingParams& R, const std::vector<i64>& u, int rel)
{
    const i64 q = R.residue_cardinality();
    std::vector<i64> y = o_pow(R, u, q - 2);
    if (q == 2) y = one_rep(R);
    std::vector<i64> two(R.degree(), 0);
    two[0] = 2;
    for (int known = 1; known < rel; known *= 2) {
        std::vector<i64> uy = o_mul(R, u, y);
        for (auto& c : uy) c = mod(-c, R.coeff_modulus());
        y = o_mul(R, y, o_add(R, two, uy));
    }
    return o_reduce(R, y, rel);
}

bool is_small(i128 v) { return v > -(i128(1) << 100) && v < (i128(1) << 100); }

i64 mod128(i128 n, i64 m)
{
    i128 r = n % m;
    if (r < 0) r += m;
    return static_cast<i64>(r);
}

char digit_char(i64 d) { return static_cast<char>(d < 10 ? '0' + d : 'a' + (d - 10)); }

i64 digit_value(char c)
{
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

std::vector<int> digit_widths(const RingParams& R, int rel)
{
    std::vector<int> w(R.degree());
    if (R.kind() == ExtensionKind::eisenstein) {
        const int e = R.ramification();
        for (int j = 0; j < e; ++j) w[j] = rel / e + (j < rel % e ? 1 : 0);
    } else {
        std::fill(w.begin(), w.end(), rel);
    }
    return w;
}

} // namespace

PadicScalar::PadicScalar(RingPtr ring) : ring_(std::move(ring)), zero_(true), abs_(kInfinite), exact_(i128(0)) {}

PadicScalar PadicScalar::zero_to(RingPtr ring, int abs)
{
    if (abs >= kInfinite) return PadicScalar(std::move(ring));
    require(abs > 0, ErrorKind::PrecisionExhausted, "result carries no certified digits");
    PadicScalar z(std::move(ring));
    z.abs_ = abs;
    z.exact_.reset();
    return z;
}

PadicScalar PadicScalar::make_nonzero(RingPtr ring, int val, int rel, std::vector<i64> unit)
{
    PadicScalar x;
    x.ring_ = std::move(ring);
    x.zero_ = false;
    x.abs_ = 0;
    x.val_ = val;
    x.rel_ = rel;
    x.unit_ = o_reduce(*x.ring_, std::move(unit), rel);
    return x;
}

PadicScalar PadicScalar::from_rep(RingPtr ring, std::vector<i64> rep, int abs)
{
    const RingParams& R = *ring;
    require(static_cast<int>(rep.size()) == R.degree(), ErrorKind::DimensionMismatch, "representative has wrong length");
    for (auto& c : rep) c = mod(c, R.coeff_modulus());
    abs = std::min(abs, R.ramification() * R.coeff_digits());
    const int w = o_valuation(R, o_reduce(R, rep, abs));
    if (w >= abs) return zero_to(std::move(ring), abs);
    const int rel = std::min(abs - w, R.precision());
    auto unit = div_lambda(R, o_reduce(R, rep, abs), w);
    return make_nonzero(std::move(ring), w, rel, std::move(unit));
}

PadicScalar PadicScalar::uniformizer(RingPtr ring)
{
    const RingParams& R = *ring;
    const int n = R.precision();
    auto x = make_nonzero(std::move(ring), 1, n, one_rep(R));
    if (R.kind() != ExtensionKind::eisenstein) x.exact_ = R.prime();
    return x;
}

PadicScalar PadicScalar::from_i128(RingPtr ring, i128 n)
{
    if (n == 0) return PadicScalar(std::move(ring));
    const RingParams& R = *ring;
    const i64 p = R.prime();
    const i128 original = n;
    int a = 0;
    while (n % p == 0) {
        n /= p;
        ++a;
    }
    std::vector<i64> rep(R.degree(), 0);
    rep[0] = mod128(n, R.coeff_modulus());
    PadicScalar u = make_nonzero(ring, 0, R.precision(), rep);
    if (a > 0) {
        auto eps = o_pow(R, epsilon(R), a);
        u = make_nonzero(ring, R.ramification() * a, R.precision(), o_mul(R, u.unit_, eps));
    }
    u.exact_ = original;
    return u;
}

PadicScalar PadicScalar::from_int(RingPtr ring, i64 n) { return from_i128(std::move(ring), n); }

PadicScalar PadicScalar::from_poly(RingPtr ring, const std::vector<i64>& coeffs)
{
    const RingParams& R = *ring;
    const i64 p = R.prime();
    // strip the common power of l so no digit is lost
    int g = INT_MAX;
    for (i64 c : coeffs)
        if (c != 0) g = std::min(g, ord(p, c));
    if (g == INT_MAX) return PadicScalar(std::move(ring));
    const int d = R.degree();
    std::vector<i64> rep(d, 0);
    const i64 pg = ipow(p, g);
    // reduce theta^i for i >= d
    std::vector<i64> power = one_rep(R);
    std::vector<i64> theta(d, 0);
    if (d > 1) theta[1] = 1;
    else theta[0] = mod(-R.poly()[0], R.coeff_modulus());
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const i64 c = mod(coeffs[i] / pg, R.coeff_modulus());
        for (int j = 0; j < d; ++j) rep[j] = mod(rep[j] + mulmod(c, power[j], R.coeff_modulus()), R.coeff_modulus());
        power = o_mul(R, power, theta);
    }
    const int w = o_valuation(R, rep);
    PadicScalar x = from_rep(ring, rep, w + R.precision());
    if (g > 0) x = x * from_int(ring, p).pow(g);
    bool constant = true;
    for (size_t i = 1; i < coeffs.size(); ++i) constant = constant && coeffs[i] == 0;
    if (constant) x.exact_ = coeffs[0];
    else x.exact_.reset();
    return x;
}

std::optional<Rational> PadicScalar::valuation() const
{
    if (zero_) return std::nullopt;
    return Rational(val_, ring_->ramification());
}

std::vector<i64> PadicScalar::rep() const
{
    const RingParams& R = *ring_;
    if (zero_) return std::vector<i64>(R.degree(), 0);
    require(val_ >= 0, ErrorKind::OutOfRange, "representative of a non-integral element");
    return mul_lambda(R, unit_, val_);
}

std::vector<i64> PadicScalar::residue() const
{
    const RingParams& R = *ring_;
    require(is_integral(), ErrorKind::OutOfRange, "residue of a non-integral element");
    const int f = R.residue_degree();
    std::vector<i64> r(f, 0);
    if (zero_ || val_ > 0) return r;
    for (int i = 0; i < f; ++i) r[i] = mod(unit_[i], R.prime());
    return r;
}

void PadicScalar::check_same_ring(const PadicScalar& y) const
{
    require(ring_ && y.ring_, ErrorKind::FieldMismatch, "scalar without ring");
    if (ring_ == y.ring_) return;
    require(*ring_ == *y.ring_, ErrorKind::FieldMismatch, "scalars from different rings: " + ring_->header() + " vs " + y.ring_->header());
}

PadicScalar PadicScalar::operator-() const
{
    if (zero_) return *this;
    std::vector<i64> u = unit_;
    for (auto& c : u) c = mod(-c, ring_->coeff_modulus());
    PadicScalar x = make_nonzero(ring_, val_, rel_, std::move(u));
    if (exact_) x.exact_ = -*exact_;
    return x;
}

PadicScalar PadicScalar::operator+(const PadicScalar& y) const
{
    check_same_ring(y);
    if (is_exact_zero()) return y;
    if (y.is_exact_zero()) return *this;
    if (exact_ && y.exact_ && is_small(*exact_) && is_small(*y.exact_)) {
        count_op();
        return from_i128(ring_, *exact_ + *y.exact_);
    }
    const int a = std::min(abs_precision(), y.abs_precision());
    if (zero_ && y.zero_) return zero_to(ring_, a);
    if (zero_ || y.zero_) {
        PadicScalar r = (zero_ ? y : *this).truncate_abs(a);
        r.exact_.reset();
        return r;
    }
    count_op();
    const RingParams& R = *ring_;
    const int v0 = std::min(val_, y.val_);
    if (a <= v0) return zero_to(ring_, a);
    const int r = a - v0;
    auto s = o_add(R, mul_lambda(R, unit_, val_ - v0), mul_lambda(R, y.unit_, y.val_ - v0));
    s = o_reduce(R, s, r);
    const int w = o_valuation(R, s);
    if (w >= r) return zero_to(ring_, a);
    return make_nonzero(ring_, v0 + w, r - w, div_lambda(R, s, w));
}

PadicScalar PadicScalar::operator-(const PadicScalar& y) const { return *this + (-y); }

PadicScalar PadicScalar::operator*(const PadicScalar& y) const
{
    check_same_ring(y);
    if (is_exact_zero() || y.is_exact_zero()) return PadicScalar(ring_);
    if (exact_ && y.exact_ && is_small(*exact_) && is_small(*y.exact_)) {
        i128 prod;
        if (!__builtin_mul_overflow(*exact_, *y.exact_, &prod) && is_small(prod)) {
            count_op();
            return from_i128(ring_, prod);
        }
    }
    if (zero_ && y.zero_) return zero_to(ring_, abs_ + y.abs_);
    if (zero_) return zero_to(ring_, abs_ + y.val_);
    if (y.zero_) return zero_to(ring_, y.abs_ + val_);
    return make_nonzero(ring_, val_ + y.val_, std::min(rel_, y.rel_), o_mul(*ring_, unit_, y.unit_));
}

PadicScalar PadicScalar::inverse() const
{
    require(ring_ != nullptr, ErrorKind::DivisionByZero, "inverse of an empty scalar");
    require(!zero_, ErrorKind::DivisionByZero, "division by an element indistinguishable from zero");
    PadicScalar x = make_nonzero(ring_, -val_, rel_, o_unit_inverse(*ring_, unit_, rel_));
    if (exact_ && (*exact_ == 1 || *exact_ == -1)) x.exact_ = exact_;
    return x;
}

PadicScalar PadicScalar::operator/(const PadicScalar& y) const
{
    check_same_ring(y);
    require(!y.zero_, ErrorKind::DivisionByZero, "division by an element indistinguishable from zero");
    if (is_exact_zero()) return *this;
    if (exact_ && y.exact_ && *exact_ % *y.exact_ == 0) {
        return from_i128(ring_, *exact_ / *y.exact_);
    }
    if (zero_) return zero_to(ring_, abs_ - y.val_);
    return *this * y.inverse();
}

PadicScalar PadicScalar::pow(i64 n) const
{
    if (n < 0) return inverse().pow(-n);
    PadicScalar r = from_int(ring_, 1), b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

PadicScalar PadicScalar::truncate_abs(int abs) const
{
    if (zero_) {
        if (abs >= abs_) return *this;
        return zero_to(ring_, abs);
    }
    if (abs >= val_ + rel_) return *this;
    if (abs <= val_) return zero_to(ring_, abs);
    return make_nonzero(ring_, val_, abs - val_, unit_);
}

bool PadicScalar::operator==(const PadicScalar& y) const
{
    if (zero_ != y.zero_) return false;
    if (zero_) return abs_ == y.abs_;
    return val_ == y.val_ && rel_ == y.rel_ && unit_ == y.unit_;
}

bool PadicScalar::equals_at_precision(const PadicScalar& y) const { return (*this - y).is_zero(); }

std::string PadicScalar::serialize() const
{
    if (zero_) return abs_ >= kInfinite ? "(zero; inf)" : "(zero; " + std::to_string(abs_) + ")";
    const RingParams& R = *ring_;
    const auto widths = digit_widths(R, rel_);
    std::string out = "(" + std::to_string(val_) + "; ";
    for (int j = 0; j < R.degree(); ++j) {
        if (j) out += '|';
        i64 c = unit_[j];
        for (int i = 0; i < widths[j]; ++i) {
            out += digit_char(c % R.prime());
            c /= R.prime();
        }
    }
    out += ')';
    return out;
}

PadicScalar PadicScalar::parse(RingPtr ring, const std::string& text)
{
    const std::string t = trim_copy(text);
    require(t.size() >= 2 && t.front() == '(' && t.back() == ')', ErrorKind::MalformedInput, "scalar must be parenthesized: " + t);
    const auto body = t.substr(1, t.size() - 2);
    const auto semi = body.find(';');
    require(semi != std::string::npos, ErrorKind::MalformedInput, "scalar needs '(v; digits)': " + t);
    const std::string head = trim_copy(body.substr(0, semi));
    const std::string tail = trim_copy(body.substr(semi + 1));
    if (head == "zero") {
        if (tail == "inf") return PadicScalar(std::move(ring));
        return zero_to(std::move(ring), static_cast<int>(parse_int(tail)));
    }
    const RingParams& R = *ring;
    const int val = static_cast<int>(parse_int(head));
    const auto parts = split(tail, '|');
    require(static_cast<int>(parts.size()) == R.degree(), ErrorKind::MalformedInput, "scalar has wrong number of coefficients: " + t);
    int rel = 0;
    for (const auto& part : parts) rel += static_cast<int>(part.size());
    if (R.kind() != ExtensionKind::eisenstein) rel = static_cast<int>(parts[0].size());
    require(rel >= 1 && rel <= R.precision(), ErrorKind::MalformedInput, "scalar digit count out of range: " + t);
    const auto widths = digit_widths(R, rel);
    std::vector<i64> unit(R.degree(), 0);
    for (int j = 0; j < R.degree(); ++j) {
        require(static_cast<int>(parts[j].size()) == widths[j], ErrorKind::MalformedInput, "non-canonical digit widths: " + t);
        i64 c = 0;
        for (int i = widths[j] - 1; i >= 0; --i) {
            const i64 d = digit_value(parts[j][i]);
            require(d >= 0 && d < R.prime(), ErrorKind::MalformedInput, "bad digit in scalar: " + t);
            c = c * R.prime() + d;
        }
        unit[j] = c;
    }
    require(o_valuation(R, unit) == 0, ErrorKind::MalformedInput, "unit part of scalar is not a unit: " + t);
    return make_nonzero(std::move(ring), val, rel, std::move(unit));
}

PadicScalar PadicScalar::parse_value(RingPtr ring, const std::string& text)
{
    const std::string t = trim_copy(text);
    require(!t.empty(), ErrorKind::MalformedInput, "empty scalar");
    if (t.front() == '(') return parse(std::move(ring), t);
    const auto slash = t.find('/');
    if (slash == std::string::npos) return from_int(std::move(ring), parse_int(t));
    const i64 den = parse_int(t.substr(slash + 1));
    require(den != 0, ErrorKind::MalformedInput, "zero denominator: " + t);
    return from_int(ring, parse_int(t.substr(0, slash))) / from_int(ring, den);
}

std::ostream& operator<<(std::ostream& os, const PadicScalar& x) { return os << x.serialize(); }

i64 residue_cardinality(const RingParams& ring) { return ring.residue_cardinality(); }

PadicScalar teichmuller(const RingPtr& ring, const std::vector<i64>& residue)
{
    require(ring->kind() != ExtensionKind::eisenstein, ErrorKind::WrongExtensionKind, "Teichmueller lifts need an unramified ring");
    const int f = ring->residue_degree();
    require(static_cast<int>(residue.size()) <= f, ErrorKind::OutOfRange, "residue has too many coefficients");
    std::vector<i64> rep(ring->degree(), 0);
    bool nonzero = false;
    for (size_t i = 0; i < residue.size(); ++i) {
        rep[i] = mod(residue[i], ring->prime());
        nonzero = nonzero || rep[i] != 0;
    }
    require(nonzero, ErrorKind::OutOfRange, "Teichmueller lift of zero residue");
    const i64 q = ring->residue_cardinality();
    PadicScalar x = PadicScalar::from_rep(ring, rep, ring->precision());
    for (int it = 0; it <= ring->precision() + 1; ++it) {
        PadicScalar next = x.pow(q);
        if (next == x) return x;
        x = next;
    }
    return x;
}

int binom_valuation(i64 prime, int n, i64 r)
{
    require(is_prime(prime), ErrorKind::OutOfRange, "l must be prime");
    require(n >= 0, ErrorKind::OutOfRange, "n must be >= 0");
    const i64 top = ipow(prime, n);
    require(r > 0 && r <= top, ErrorKind::OutOfRange, "need 0 < r <= l^n");
    return static_cast<int>(factorial_ord(prime, top) - factorial_ord(prime, r) - factorial_ord(prime, top - r));
}

} // namespace ladic
