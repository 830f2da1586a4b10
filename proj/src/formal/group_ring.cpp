#include "ladic/formal/group_ring.hpp"

#include <algorithm>
#include <map>

#include <gmpxx.h>

#include "ladic/core/error.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

namespace {

PadicScalar from_mpz(const RingPtr& ring, mpz_class z)
{
    if (z == 0) return PadicScalar(ring);
    if (mpz_sizeinbase(z.get_mpz_t(), 2) < 100) {
        const bool neg = z < 0;
        if (neg) z = -z;
        i128 v = 0;
        const std::string hex = z.get_str(16);
        for (char ch : hex) v = v * 16 + (ch <= '9' ? ch - '0' : ch - 'a' + 10);
        return PadicScalar::from_i128(ring, neg ? -v : v);
    }
    const i64 p = ring->prime();
    const mpz_class pz = static_cast<long>(p);
    int a = 0;
    while (z % pz == 0) {
        z /= pz;
        ++a;
    }
    mpz_class m = z % mpz_class(static_cast<long>(ring->coeff_modulus()));
    if (m < 0) m += static_cast<long>(ring->coeff_modulus());
    PadicScalar u = PadicScalar::from_int(ring, m.get_si());
    u = u + PadicScalar::zero_to(ring, u.abs_precision()); // the residue is not the integer itself
    return u * PadicScalar::from_int(ring, p).pow(a);
}

// binom(l^n, r) for r = 0..top
std::vector<mpz_class> power_binomials(i64 p, int n, int top)
{
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
    std::vector<mpz_class> c(top + 1);
    c[0] = 1;
    for (int r = 1; r <= top; ++r) {
        if (big < r) {
            c[r] = 0;
            continue;
        }
        c[r] = c[r - 1] * (big - (r - 1));
        c[r] /= r;
    }
    return c;
}

i64 lpow_checked(i64 p, int n, const std::string& what)
{
    auto v = checked_pow(p, n);
    require(v.has_value(), ErrorKind::OutOfRange, what + ": l^n too large");
    return *v;
}

} // namespace

TorsionLabel TorsionLabel::at_level(i64 prime, int target) const
{
    require(target >= level, ErrorKind::OutOfRange, "cannot lower the level of a torsion label");
    TorsionLabel r{target, exponents};
    const i64 f = ipow(prime, target - level), m = ipow(prime, target);
    for (auto& a : r.exponents) a = mod(mulmod(mod(a, m), f, m), m);
    return r;
}

TorsionLabel TorsionLabel::normalized(i64 prime) const
{
    TorsionLabel r{level, exponents};
    const i64 m = ipow(prime, level);
    for (auto& a : r.exponents) a = mod(a, m);
    while (r.level > 0 && std::all_of(r.exponents.begin(), r.exponents.end(), [prime](i64 a) { return a % prime == 0; })) {
        for (auto& a : r.exponents) a /= prime;
        --r.level;
    }
    return r;
}

std::string TorsionLabel::id() const
{
    std::string s = "(";
    for (size_t i = 0; i < exponents.size(); ++i) s += (i ? "," : "") + std::to_string(exponents[i]);
    return s + ")@" + std::to_string(level);
}

TorsionLabel TorsionLabel::parse(const std::string& text)
{
    const std::string t = trim_copy(text);
    const auto at = t.rfind('@');
    require(t.size() >= 4 && t.front() == '(' && at != std::string::npos && at > 0 && t[at - 1] == ')', ErrorKind::MalformedInput,
            "expected a torsion label (a1,..,ab)@k, got '" + t + "'");
    TorsionLabel r;
    r.level = static_cast<int>(parse_int(t.substr(at + 1)));
    require(r.level >= 0, ErrorKind::MalformedInput, "negative torsion level");
    r.exponents = parse_int_list(t.substr(1, at - 2), ',');
    return r;
}

std::string Character::serialize() const
{
    std::string s = "chi: [";
    for (size_t i = 0; i < images.size(); ++i) s += (i ? ", " : "") + images[i].serialize();
    return s + "] order=" + std::to_string(order) + " field=[" + field->header() + "]";
}

PadicScalar root_of_unity(const RingPtr& field, int level)
{
    require(level >= 0, ErrorKind::OutOfRange, "negative level");
    if (level == 0) return PadicScalar::from_int(field, 1);
    require(field->cyclotomic_level() >= level, ErrorKind::FieldTooSmall,
            "field does not contain mu_{l^" + std::to_string(level) + "}");
    const PadicScalar top = PadicScalar::from_int(field, 1) + PadicScalar::uniformizer(field);
    return top.pow(ipow(field->prime(), field->cyclotomic_level() - level));
}

Character trivial_character(const RingPtr& field, int b)
{
    Character c;
    c.field = field;
    c.images.assign(b, PadicScalar::from_int(field, 1));
    c.order = 1;
    c.label = TorsionLabel{0, std::vector<i64>(b, 0)};
    return c;
}

Character torsion_character(const RingPtr& field, const TorsionLabel& label)
{
    const TorsionLabel norm = label.normalized(field->prime());
    const PadicScalar z = root_of_unity(field, norm.level);
    Character c;
    c.field = field;
    for (i64 a : norm.exponents) c.images.push_back(z.pow(a));
    c.order = ipow(field->prime(), norm.level);
    c.label = norm;
    return c;
}

std::vector<Character> torsion_points(const RingPtr& field, int n, int b)
{
    require(n >= 0 && b >= 0, ErrorKind::OutOfRange, "torsion level and rank must be >= 0");
    if (n > 0)
        require(field->cyclotomic_level() >= n, ErrorKind::FieldTooSmall,
                "torsion level " + std::to_string(n) + " needs Q_l(zeta_{l^" + std::to_string(n) + "})");
    const i64 m = lpow_checked(field->prime(), n, "torsion_points");
    auto total = checked_pow(m, b);
    require(total && *total <= (i64(1) << 16), ErrorKind::BudgetExceeded, "too many torsion points");
    std::vector<Character> out;
    std::vector<i64> a(b, 0);
    for (i64 idx = 0; idx < *total; ++idx) {
        i64 t = idx;
        for (int i = b - 1; i >= 0; --i) {
            a[i] = t % m;
            t /= m;
        }
        out.push_back(torsion_character(field, TorsionLabel{n, a}));
    }
    return out;
}

PadicScalar embed_scalar(const PadicScalar& x, const RingPtr& field)
{
    const RingPtr& src = x.ring();
    if (*src == *field) return x;
    require(src->kind() == ExtensionKind::trivial && src->prime() == field->prime(), ErrorKind::FieldMismatch,
            "coefficient field does not embed into the character field");
    if (x.is_exact()) return PadicScalar::from_i128(field, *x.exact_integer());
    const int e = field->ramification();
    if (x.is_zero()) return PadicScalar::zero_to(field, x.abs_precision() >= PadicScalar::kInfinite ? PadicScalar::kInfinite : e * x.abs_precision());
    PadicScalar u = PadicScalar::from_int(field, x.unit()[0]);
    u = u.truncate_abs(e * x.rel_precision());
    u = u + PadicScalar::zero_to(field, u.abs_precision());
    return u * PadicScalar::from_int(field, field->prime()).pow(x.val_units());
}

PadicScalar evaluate_at_character(const GroupRingElement& g, const Character& chi)
{
    require(chi.rank() == g.vars(), ErrorKind::DimensionMismatch, "character rank differs from the number of variables");
    const RingPtr& field = chi.field;
    std::vector<PadicScalar> y;
    for (const auto& im : chi.images) {
        require(*im.ring() == *field, ErrorKind::FieldMismatch, "character values lie in different fields");
        y.push_back(im - PadicScalar::from_int(field, 1));
    }
    std::vector<std::vector<PadicScalar>> powers(y.size(), std::vector<PadicScalar>{PadicScalar::from_int(field, 1)});
    PadicScalar sum(field);
    for (const auto& [n, c] : g.terms()) {
        PadicScalar term = embed_scalar(c, field);
        for (size_t i = 0; i < y.size(); ++i) {
            while (static_cast<int>(powers[i].size()) <= n[i]) powers[i].push_back(powers[i].back() * y[i]);
            if (n[i]) term = term * powers[i][n[i]];
        }
        sum = sum + term;
    }
    return sum;
}

TruncatedSeries comultiply(const GroupRingElement& g)
{
    const int b = g.vars(), D = g.degree_cap();
    const RingPtr& ring = g.ring();
    std::vector<TruncatedSeries> images;
    for (int i = 0; i < b; ++i) {
        const auto y = TruncatedSeries::variable(ring, 2 * b, D, i);
        const auto yp = TruncatedSeries::variable(ring, 2 * b, D, b + i);
        images.push_back(y + yp + y * yp);
    }
    return g.substitute(images);
}

GroupRingElement ell_power_isogeny(const GroupRingElement& g, int n)
{
    require(n >= 0, ErrorKind::OutOfRange, "isogeny exponent must be >= 0");
    const int b = g.vars(), D = g.degree_cap();
    const RingPtr& ring = g.ring();
    const auto c = power_binomials(ring->prime(), n, D);
    std::vector<TruncatedSeries> images;
    for (int i = 0; i < b; ++i) {
        TruncatedSeries img(ring, b, D);
        for (int r = 1; r <= D; ++r) {
            if (c[r] == 0) continue;
            Exponent e(b, 0);
            e[i] = r;
            img.set(e, from_mpz(ring, c[r]));
        }
        images.push_back(img);
    }
    return g.substitute(images);
}

GroupRingElement inversion_twist(const GroupRingElement& g)
{
    const int b = g.vars(), D = g.degree_cap();
    const RingPtr& ring = g.ring();
    std::vector<TruncatedSeries> images;
    for (int i = 0; i < b; ++i) {
        TruncatedSeries img(ring, b, D);
        for (int r = 1; r <= D; ++r) {
            Exponent e(b, 0);
            e[i] = r;
            img.set(e, PadicScalar::from_int(ring, r % 2 ? -1 : 1));
        }
        images.push_back(img);
    }
    return g.substitute(images);
}

std::vector<PadicScalar> torsion_generator(const RingPtr& ring, int n)
{
    const i64 L = lpow_checked(ring->prime(), n, "torsion_generator");
    require(L <= 4096, ErrorKind::BudgetExceeded, "torsion generator degree above 4096");
    const auto c = power_binomials(ring->prime(), n, static_cast<int>(L));
    std::vector<PadicScalar> out{PadicScalar(ring)};
    for (i64 r = 1; r <= L; ++r) out.push_back(from_mpz(ring, c[r]));
    return out;
}

bool torsion_ideal_membership(const GroupRingElement& g, int n)
{
    require(n >= 0, ErrorKind::OutOfRange, "torsion level must be >= 0");
    const RingPtr& ring = g.ring();
    const int b = g.vars();
    std::map<Exponent, PadicScalar> poly;
    for (const auto& [e, c] : g.terms()) poly[e] = c;
    int top = 0;
    for (const auto& [e, c] : poly)
        for (int x : e) top = std::max(top, x);
    auto L = checked_pow(ring->prime(), n);
    if (L && *L <= top) {
        const auto f = torsion_generator(ring, n);
        const int deg = static_cast<int>(*L);
        for (int i = 0; i < b; ++i) {
            // x_i^e = x_i^{e-L} (x_i^L - f) with deg f < L after removing x^L
            for (;;) {
                auto it = std::max_element(poly.begin(), poly.end(), [i](const auto& a, const auto& c) { return a.first[i] < c.first[i]; });
                if (it == poly.end() || it->first[i] < deg) break;
                const Exponent e = it->first;
                const PadicScalar c = it->second;
                poly.erase(it);
                for (int r = 0; r < deg; ++r) {
                    if (f[r].is_exact_zero()) continue;
                    Exponent t = e;
                    t[i] = e[i] - deg + r;
                    auto [pos, fresh] = poly.emplace(t, PadicScalar(ring));
                    pos->second = pos->second - c * f[r];
                }
            }
        }
    }
    bool all_zero = true, all_exact_zero = true;
    for (const auto& [e, c] : poly) {
        all_zero = all_zero && c.is_zero();
        all_exact_zero = all_exact_zero && c.is_exact_zero();
    }
    if (!all_zero) return false;
    require(all_exact_zero, ErrorKind::PrecisionUncertain, "reduction vanishes only to the working precision");
    return true;
}

} // namespace ladic
