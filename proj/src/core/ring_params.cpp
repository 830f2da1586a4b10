#include "ladic/core/ring_params.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ladic/core/error.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

namespace {

using Fpoly = std::vector<i64>; // low -> high, coefficients in [0, p)

void trim(Fpoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fpoly fp_mul_mod(const Fpoly& a, const Fpoly& b, const Fpoly& m, i64 p)
{
    if (a.empty() || b.empty()) return {};
    Fpoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // m is monic
    const size_t dm = m.size() - 1;
    for (size_t i = r.size(); i-- > dm;) {
        i64 c = r[i];
        if (c == 0) continue;
        for (size_t j = 0; j <= dm; ++j) r[i - dm + j] = mod(r[i - dm + j] - c * m[j], p);
    }
    r.resize(std::min(r.size(), dm));
    trim(r);
    return r;
}

Fpoly fp_rem(Fpoly a, const Fpoly& b, i64 p)
{
    trim(a);
    const size_t db = b.size() - 1;
    const i64 inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        i64 c = mulmod(a.back(), inv, p);
        const size_t shift = a.size() - 1 - db;
        for (size_t j = 0; j <= db; ++j) a[shift + j] = mod(a[shift + j] - c * b[j], p);
        trim(a);
    }
    return a;
}

Fpoly fp_gcd(Fpoly a, Fpoly b, i64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Fpoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// x^(p^k) mod m over F_p
Fpoly frobenius_power(const Fpoly& m, i64 p, int k)
{
    Fpoly x = {0, 1};
    Fpoly cur = fp_rem(x, m, p);
    for (int i = 0; i < k; ++i) {
        Fpoly base = cur, acc = {1};
        i64 e = p;
        while (e > 0) {
            if (e & 1) acc = fp_mul_mod(acc, base, m, p);
            base = fp_mul_mod(base, base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

// Rabin's irreducibility test over F_p.
bool irreducible_mod_p(const std::vector<i64>& poly, i64 p)
{
    Fpoly m(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) m[i] = mod(poly[i], p);
    trim(m);
    const int n = static_cast<int>(m.size()) - 1;
    if (n < 1 || m.back() != 1) return false;
    if (n == 1) return true;
    Fpoly x = {0, 1};
    auto sub_x = [&](Fpoly a) {
        a.resize(std::max<size_t>(a.size(), 2), 0);
        a[1] = mod(a[1] - 1, p);
        trim(a);
        return a;
    };
    if (!sub_x(frobenius_power(m, p, n)).empty()) return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(q)) continue;
        Fpoly g = fp_gcd(m, sub_x(frobenius_power(m, p, n / q)), p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<i64> cyclotomic_shifted(i64 p, int level)
{
    // Phi_{p^n}(1 + t) = sum_{j < p} (1 + t)^{j p^{n-1}}
    const i64 step = ipow(p, level - 1);
    const i64 deg = (p - 1) * step;
    require(deg <= 60, ErrorKind::OutOfRange, "cyclotomic degree too large");
    std::vector<std::vector<i64>> binom(deg + 1);
    for (i64 n = 0; n <= deg; ++n) {
        binom[n].assign(n + 1, 1);
        for (i64 k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    std::vector<i64> out(deg + 1, 0);
    for (i64 j = 0; j < p; ++j) {
        const i64 n = j * step;
        for (i64 k = 0; k <= n; ++k) out[k] += binom[n][k];
    }
    return out;
}

} // namespace

std::string to_string(ExtensionKind kind)
{
    switch (kind) {
    case ExtensionKind::trivial: return "trivial";
    case ExtensionKind::unramified: return "unramified";
    case ExtensionKind::eisenstein: return "eisenstein";
    }
    return "?";
}

void RingParams::validate()
{
    require(is_prime(prime_), ErrorKind::MalformedInput, "l must be prime, got " + std::to_string(prime_));
    require(precision_ >= 1, ErrorKind::MalformedInput, "precision must be >= 1");
    require(poly_.size() >= 2 && poly_.back() == 1, ErrorKind::MalformedInput, "defining polynomial must be monic of degree >= 1");
    const int deg = degree();
    switch (kind_) {
    case ExtensionKind::trivial:
        require(poly_ == std::vector<i64>{0, 1}, ErrorKind::MalformedInput, "trivial extension uses poly=0,1");
        e_ = f_ = 1;
        break;
    case ExtensionKind::unramified:
        require(irreducible_mod_p(poly_, prime_), ErrorKind::MalformedInput, "unramified polynomial is not irreducible mod l");
        e_ = 1;
        f_ = deg;
        break;
    case ExtensionKind::eisenstein:
        for (int i = 0; i < deg; ++i)
            require(poly_[i] % prime_ == 0, ErrorKind::MalformedInput, "Eisenstein criterion fails: coefficient not divisible by l");
        require(poly_[0] % (prime_ * prime_) != 0, ErrorKind::MalformedInput, "Eisenstein criterion fails: l^2 divides constant term");
        e_ = deg;
        f_ = 1;
        break;
    }
    input_poly_ = poly_;
    k_ = (precision_ + e_ - 1) / e_ + 1;
    auto m = checked_pow(prime_, k_);
    require(m.has_value(), ErrorKind::OutOfRange, "precision too large for 62-bit residue arithmetic");
    modulus_ = *m;
    if (kind_ == ExtensionKind::eisenstein) {
        // l / t = -(t^{d-1} + p_{d-1} t^{d-2} + ... + p_1) / u0 with p_0 = l * u0
        const i64 u0_inv = invmod(mod(poly_[0] / prime_, modulus_), modulus_);
        ell_over_lambda_.assign(deg, 0);
        for (int j = 0; j < deg; ++j) ell_over_lambda_[j] = mod(-mulmod(mod(poly_[j + 1], modulus_), u0_inv, modulus_), modulus_);
    }
    for (auto& c : poly_) c = mod(c, modulus_);
    poly_.back() = 1;

    cyclo_level_ = 0;
    if (kind_ == ExtensionKind::eisenstein) {
        for (int n = 1; (prime_ - 1) * ipow(prime_, n - 1) <= deg; ++n) {
            if ((prime_ - 1) * ipow(prime_, n - 1) != deg) continue;
            auto c = cyclotomic_shifted(prime_, n);
            bool same = true;
            for (int i = 0; i <= deg; ++i) same = same && mod(c[i], modulus_) == poly_[i];
            if (same) cyclo_level_ = n;
        }
    }
}

RingPtr RingParams::make(i64 prime, ExtensionKind kind, std::vector<i64> poly, int precision)
{
    std::shared_ptr<RingParams> r(new RingParams());
    r->prime_ = prime;
    r->kind_ = kind;
    r->poly_ = std::move(poly);
    r->precision_ = precision;
    r->validate();
    return r;
}

RingPtr RingParams::trivial(i64 prime, int precision) { return make(prime, ExtensionKind::trivial, {0, 1}, precision); }

RingPtr RingParams::unramified(i64 prime, std::vector<i64> poly, int precision)
{
    return make(prime, ExtensionKind::unramified, std::move(poly), precision);
}

RingPtr RingParams::eisenstein(i64 prime, std::vector<i64> poly, int precision)
{
    return make(prime, ExtensionKind::eisenstein, std::move(poly), precision);
}

RingPtr RingParams::cyclotomic(i64 prime, int level, int precision)
{
    require(level >= 0, ErrorKind::OutOfRange, "negative cyclotomic level");
    if (level == 0) return trivial(prime, precision);
    require(is_prime(prime), ErrorKind::MalformedInput, "l must be prime");
    return make(prime, ExtensionKind::eisenstein, cyclotomic_shifted(prime, level), precision);
}

RingPtr RingParams::parse_header(const std::string& text)
{
    std::map<std::string, std::string> kv;
    for (const auto& part : split(text, ';')) {
        const auto item = trim_copy(part);
        if (item.empty()) continue;
        const auto eq = item.find('=');
        require(eq != std::string::npos, ErrorKind::MalformedInput, "expected key=value in ring header: " + item);
        kv[trim_copy(item.substr(0, eq))] = trim_copy(item.substr(eq + 1));
    }
    for (const auto& [k, v] : kv)
        require(k == "prime" || k == "kind" || k == "poly" || k == "precision", ErrorKind::MalformedInput, "unknown ring header key: " + k);
    require(kv.count("prime") && kv.count("precision"), ErrorKind::MalformedInput, "ring header needs prime and precision");
    const i64 prime = parse_int(kv["prime"]);
    const int precision = static_cast<int>(parse_int(kv["precision"]));
    ExtensionKind kind = ExtensionKind::trivial;
    if (kv.count("kind")) {
        const auto& k = kv["kind"];
        if (k == "trivial") kind = ExtensionKind::trivial;
        else if (k == "unramified") kind = ExtensionKind::unramified;
        else if (k == "eisenstein") kind = ExtensionKind::eisenstein;
        else fail(ErrorKind::MalformedInput, "unknown extension kind: " + k);
    }
    std::vector<i64> poly = {0, 1};
    if (kv.count("poly")) poly = parse_int_list(kv["poly"], ',');
    return make(prime, kind, std::move(poly), precision);
}

std::string RingParams::header() const
{
    std::ostringstream os;
    os << "prime=" << prime_ << "; kind=" << to_string(kind_) << "; poly=";
    for (size_t i = 0; i < input_poly_.size(); ++i) os << (i ? "," : "") << input_poly_[i];
    os << "; precision=" << precision_;
    return os.str();
}

bool RingParams::same_field(const RingParams& other) const
{
    if (prime_ != other.prime_ || kind_ != other.kind_ || poly_.size() != other.poly_.size()) return false;
    // coefficient moduli may differ; compare modulo the smaller one
    const i64 m = std::min(modulus_, other.modulus_);
    for (size_t i = 0; i < poly_.size(); ++i)
        if (mod(poly_[i], m) != mod(other.poly_[i], m)) return false;
    return true;
}

bool RingParams::operator==(const RingParams& other) const { return same_field(other) && precision_ == other.precision_; }

RingPtr with_precision(const RingPtr& ring, int precision)
{
    return RingParams::make(ring->prime(), ring->kind(), ring->integer_poly(), precision);
}

} // namespace ladic
