#include "ladic/tate/series.hpp"

#include <numeric>
#include <sstream>

#include "ladic/core/error.hpp"
#include "ladic/core/text.hpp"

namespace ladic {

int total_degree(const Exponent& n) { return std::accumulate(n.begin(), n.end(), 0); }

bool MonomialLess::operator()(const Exponent& a, const Exponent& b) const
{
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a > b;
}

namespace {

void fill_degree(int vars, int pos, int remaining, Exponent& cur, std::vector<Exponent>& out)
{
    if (pos == vars - 1) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int k = remaining; k >= 0; --k) {
        cur[pos] = k;
        fill_degree(vars, pos + 1, remaining - k, cur, out);
    }
    cur[pos] = 0;
}

std::string i128_to_string(i128 v)
{
    if (v == 0) return "0";
    const bool neg = v < 0;
    std::string s;
    while (v != 0) {
        int d = static_cast<int>(v % 10);
        if (d < 0) d = -d;
        s.push_back(static_cast<char>('0' + d));
        v /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

} // namespace

std::vector<Exponent> monomials(int vars, int lo, int hi)
{
    std::vector<Exponent> out;
    if (vars == 0) {
        if (lo <= 0 && hi >= 0) out.emplace_back();
        return out;
    }
    for (int d = std::max(lo, 0); d <= hi; ++d) {
        Exponent cur(vars, 0);
        fill_degree(vars, 0, d, cur, out);
    }
    return out;
}

std::string format_exponent(const Exponent& n)
{
    std::string s = "(";
    for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + std::to_string(n[i]);
    return s + ")";
}

Exponent parse_exponent(const std::string& text, int vars)
{
    std::string t = trim_copy(text);
    if (!t.empty() && t.front() == '(') {
        require(t.back() == ')', ErrorKind::MalformedInput, "unbalanced exponent: " + t);
        t = t.substr(1, t.size() - 2);
    }
    Exponent n;
    for (i64 v : parse_int_list(t, ',')) {
        require(v >= 0 && v < 1000, ErrorKind::MalformedInput, "exponent out of range: " + text);
        n.push_back(static_cast<int>(v));
    }
    require(static_cast<int>(n.size()) == vars, ErrorKind::MalformedInput, "exponent has wrong length: " + text);
    return n;
}

TruncatedSeries::TruncatedSeries(RingPtr ring, int vars, int degree_cap) : ring_(std::move(ring)), vars_(vars), cap_(degree_cap)
{
    require(vars >= 0, ErrorKind::DimensionMismatch, "negative variable count");
    require(degree_cap >= 0, ErrorKind::OutOfRange, "negative degree cap");
}

TruncatedSeries TruncatedSeries::constant(RingPtr ring, int vars, int degree_cap, const PadicScalar& c)
{
    TruncatedSeries g(std::move(ring), vars, degree_cap);
    g.set(Exponent(vars, 0), c);
    return g;
}

TruncatedSeries TruncatedSeries::one(RingPtr ring, int vars, int degree_cap)
{
    auto c = PadicScalar::from_int(ring, 1);
    return constant(std::move(ring), vars, degree_cap, c);
}

TruncatedSeries TruncatedSeries::variable(RingPtr ring, int vars, int degree_cap, int index)
{
    require(index >= 0 && index < vars, ErrorKind::DimensionMismatch, "variable index out of range");
    Exponent n(vars, 0);
    n[index] = 1;
    auto c = PadicScalar::from_int(ring, 1);
    return monomial(std::move(ring), degree_cap, n, c);
}

TruncatedSeries TruncatedSeries::monomial(RingPtr ring, int degree_cap, const Exponent& n, const PadicScalar& c)
{
    TruncatedSeries g(std::move(ring), static_cast<int>(n.size()), degree_cap);
    g.set(n, c);
    return g;
}

PadicScalar TruncatedSeries::coeff(const Exponent& n) const
{
    auto it = terms_.find(n);
    if (it == terms_.end()) return PadicScalar(ring_);
    return it->second;
}

void TruncatedSeries::set(const Exponent& n, const PadicScalar& c)
{
    require(static_cast<int>(n.size()) == vars_, ErrorKind::DimensionMismatch, "exponent length differs from variable count");
    if (total_degree(n) > cap_) return;
    if (c.is_exact_zero()) {
        terms_.erase(n);
        return;
    }
    terms_.insert_or_assign(n, c);
}

void TruncatedSeries::add_to(const Exponent& n, const PadicScalar& c)
{
    if (c.is_exact_zero() || total_degree(n) > cap_) return;
    auto it = terms_.find(n);
    if (it == terms_.end()) {
        set(n, c);
        return;
    }
    PadicScalar s = it->second + c;
    if (s.is_exact_zero()) terms_.erase(it);
    else it->second = s;
}

bool TruncatedSeries::is_zero() const
{
    for (const auto& [n, c] : terms_)
        if (!c.is_zero()) return false;
    return true;
}

int TruncatedSeries::degree() const
{
    int d = -1;
    for (const auto& [n, c] : terms_)
        if (!c.is_zero()) d = std::max(d, total_degree(n));
    return d;
}

bool TruncatedSeries::equals_at_precision(const TruncatedSeries& y) const { return (*this - y).is_zero(); }

void TruncatedSeries::check_compatible(const TruncatedSeries& y) const
{
    require(vars_ == y.vars_, ErrorKind::DimensionMismatch, "series in different variable counts");
    require(ring_ && y.ring_ && (ring_ == y.ring_ || *ring_ == *y.ring_), ErrorKind::FieldMismatch, "series over different rings");
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r(ring_, vars_, cap_);
    for (const auto& [n, c] : terms_) r.terms_.emplace(n, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& y) const
{
    check_compatible(y);
    TruncatedSeries r(ring_, vars_, std::min(cap_, y.cap_));
    for (const auto& [n, c] : terms_) r.add_to(n, c);
    for (const auto& [n, c] : y.terms_) r.add_to(n, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& y) const { return *this + (-y); }

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& y) const
{
    check_compatible(y);
    TruncatedSeries r(ring_, vars_, std::min(cap_, y.cap_));
    Exponent sum(vars_);
    for (const auto& [n, c] : terms_) {
        const int dn = total_degree(n);
        for (const auto& [m, d] : y.terms_) {
            if (dn + total_degree(m) > r.cap_) continue;
            for (int i = 0; i < vars_; ++i) sum[i] = n[i] + m[i];
            r.add_to(sum, c * d);
        }
    }
    return r;
}

TruncatedSeries TruncatedSeries::scaled(const PadicScalar& c) const
{
    TruncatedSeries r(ring_, vars_, cap_);
    for (const auto& [n, a] : terms_) r.set(n, a * c);
    return r;
}

TruncatedSeries TruncatedSeries::pow(int n) const
{
    require(n >= 0, ErrorKind::OutOfRange, "negative power of a series");
    TruncatedSeries r = one(ring_, vars_, cap_), b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        n >>= 1;
        if (n) b = b * b;
    }
    return r;
}

TruncatedSeries TruncatedSeries::homogeneous_part(int d) const
{
    TruncatedSeries r(ring_, vars_, cap_);
    for (const auto& [n, c] : terms_)
        if (total_degree(n) == d) r.terms_.emplace(n, c);
    return r;
}

TruncatedSeries TruncatedSeries::with_cap(int degree_cap) const
{
    TruncatedSeries r(ring_, vars_, degree_cap);
    for (const auto& [n, c] : terms_) r.set(n, c);
    return r;
}

TruncatedSeries TruncatedSeries::substitute(const std::vector<TruncatedSeries>& images) const
{
    require(static_cast<int>(images.size()) == vars_, ErrorKind::DimensionMismatch, "substitution needs one image per variable");
    require(!images.empty() || terms_.size() <= 1, ErrorKind::DimensionMismatch, "empty substitution");
    if (images.empty()) return *this;
    const auto& first = images.front();
    for (const auto& im : images) first.check_compatible(im);
    const int cap = first.degree_cap();
    // cache powers of each image
    std::vector<std::vector<TruncatedSeries>> powers(vars_);
    for (int i = 0; i < vars_; ++i) powers[i].push_back(one(first.ring(), first.vars(), cap));
    TruncatedSeries r(first.ring(), first.vars(), cap);
    for (const auto& [n, c] : terms_) {
        TruncatedSeries term = constant(first.ring(), first.vars(), cap, c);
        for (int i = 0; i < vars_; ++i) {
            while (static_cast<int>(powers[i].size()) <= n[i]) powers[i].push_back(powers[i].back() * images[i]);
            if (n[i] > 0) term = term * powers[i][n[i]];
        }
        for (const auto& [m, d] : term.terms_) r.add_to(m, d);
    }
    return r;
}

std::string TruncatedSeries::serialize() const
{
    std::string out;
    for (const auto& [n, c] : terms_) out += format_exponent(n) + " : " + c.serialize() + "\n";
    return out;
}

TruncatedSeries TruncatedSeries::parse(RingPtr ring, int vars, int degree_cap, const std::vector<std::string>& lines)
{
    TruncatedSeries g(ring, vars, degree_cap);
    for (const auto& raw : lines) {
        const std::string line = trim_copy(raw);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        require(colon != std::string::npos, ErrorKind::MalformedInput, "series line needs '<exponent> : <scalar>': " + line);
        const Exponent n = parse_exponent(line.substr(0, colon), vars);
        require(total_degree(n) <= degree_cap, ErrorKind::MalformedInput, "series term exceeds the degree cap: " + line);
        require(!g.terms_.count(n), ErrorKind::MalformedInput, "repeated exponent: " + line);
        g.set(n, PadicScalar::parse_value(ring, line.substr(colon + 1)));
    }
    return g;
}

std::string TruncatedSeries::pretty() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, c] : terms_) {
        std::string coef;
        bool negative = false;
        if (c.exact_integer()) {
            i128 v = *c.exact_integer();
            negative = v < 0;
            if (negative) v = -v;
            coef = i128_to_string(v);
        } else {
            coef = c.serialize();
        }
        std::string mono;
        for (int i = 0; i < vars_; ++i) {
            if (n[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "T" + std::to_string(i + 1);
            if (n[i] > 1) mono += "^" + std::to_string(n[i]);
        }
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        if (mono.empty()) os << coef;
        else if (coef == "1") os << mono;
        else os << coef << "*" << mono;
    }
    return os.str();
}

std::optional<Rational> gauss_norm(const TruncatedSeries& g, std::optional<Rational> rho_exponent)
{
    if (rho_exponent) require(*rho_exponent > 0, ErrorKind::OutOfRange, "rho must lie in (0,1)");
    std::optional<Rational> best;
    for (const auto& [n, c] : g.terms()) {
        if (c.is_zero()) continue;
        Rational q = *c.valuation();
        if (rho_exponent) q += *rho_exponent * total_degree(n);
        if (!best || q < *best) best = q;
    }
    return best;
}

} // namespace ladic
