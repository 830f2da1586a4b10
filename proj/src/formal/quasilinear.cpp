#include "ladic/formal/quasilinear.hpp"

#include <algorithm>

#include "ladic/core/error.hpp"

namespace ladic {

namespace {

int column_count(const IntMatrix& m) { return m.empty() ? 0 : static_cast<int>(m[0].size()); }

std::string format_columns(const IntMatrix& m)
{
    std::string s = "[";
    const int k = column_count(m);
    for (int j = 0; j < k; ++j) {
        s += j ? ",(" : "(";
        for (size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i][j]);
        s += ")";
    }
    return s + "]";
}

// (a - s) . c = 0 mod l^L for every column c
bool in_component(const QuasiLinearComponent& comp, const TorsionLabel& chi, i64 prime)
{
    const int L = std::max(comp.shift.level, chi.level);
    const TorsionLabel a = chi.at_level(prime, L), s = comp.shift.at_level(prime, L);
    const i64 m = ipow(prime, L);
    const int k = column_count(comp.lattice);
    for (int j = 0; j < k; ++j) {
        i64 acc = 0;
        for (size_t i = 0; i < a.exponents.size(); ++i)
            acc = mod(acc + mulmod(mod(a.exponents[i] - s.exponents[i], m), mod(comp.lattice[i][j], m), m), m);
        if (acc != 0) return false;
    }
    return true;
}

// y = s' H' inside x = s H; H' is a torus, so this is H' in H and s' in s H
bool component_inside(const QuasiLinearComponent& x, const QuasiLinearComponent& y, i64 prime, int rank)
{
    return lattice_contains(y.lattice, x.lattice, prime, rank) && in_component(x, y.shift, prime);
}

} // namespace

void QuasiLinearSet::add(QuasiLinearComponent c)
{
    require(static_cast<int>(c.shift.exponents.size()) == rank_, ErrorKind::DimensionMismatch, "shift has the wrong rank");
    require(column_count(c.lattice) == 0 || static_cast<int>(c.lattice.size()) == rank_, ErrorKind::DimensionMismatch,
            "lattice has the wrong number of rows");
    require(is_saturated(c.lattice, prime_), ErrorKind::MalformedInput, "lattice " + format_columns(c.lattice) + " is not saturated");
    c.shift = c.shift.normalized(prime_);
    components_.push_back(std::move(c));
}

bool QuasiLinearSet::contains(const TorsionLabel& chi) const
{
    require(static_cast<int>(chi.exponents.size()) == rank_, ErrorKind::DimensionMismatch, "character has the wrong rank");
    for (const auto& c : components_)
        if (in_component(c, chi, prime_)) return true;
    return false;
}

std::string QuasiLinearSet::serialize() const
{
    std::string out;
    for (size_t r = 0; r < components_.size(); ++r)
        out += "component " + std::to_string(r + 1) + ": s=" + components_[r].shift.id() + " lattice=" + format_columns(components_[r].lattice) + "\n";
    return out;
}

bool quasilinear_contains(const QuasiLinearSet& s, const Character& chi)
{
    require(chi.label.has_value(), ErrorKind::NonTorsionInput, "membership is decided for torsion characters only");
    return s.contains(*chi.label);
}

SigmaImageReport quasilinear_sigma_image(const QuasiLinearSet& s, const IntMatrix& sigma)
{
    const int b = s.rank();
    require(static_cast<int>(sigma.size()) == b, ErrorKind::DimensionMismatch, "sigma size differs from the rank");
    inverse_mod(sigma, s.prime()); // unit determinant
    SigmaImageReport rep{QuasiLinearSet(s.prime(), b), true, true};
    for (const auto& c : s.components()) {
        QuasiLinearComponent img;
        img.shift = c.shift;
        if (c.shift.level > 0) {
            const IntMatrix inv = inverse_mod(sigma, ipow(s.prime(), c.shift.level));
            const i64 m = ipow(s.prime(), c.shift.level);
            for (int i = 0; i < b; ++i) {
                i64 acc = 0;
                for (int j = 0; j < b; ++j) acc = mod(acc + mulmod(inv[j][i], mod(c.shift.exponents[j], m), m), m);
                img.shift.exponents[i] = acc;
            }
        }
        img.lattice = column_count(c.lattice) ? multiply(sigma, c.lattice) : IntMatrix{};
        rep.saturated = rep.saturated && is_saturated(img.lattice, s.prime());
        rep.image.add(img);
    }
    auto covered = [&](const QuasiLinearSet& x, const QuasiLinearSet& y) {
        for (const auto& cy : y.components()) {
            bool found = false;
            for (const auto& cx : x.components()) found = found || component_inside(cx, cy, s.prime(), b);
            if (!found) return false;
        }
        return true;
    };
    rep.stable = covered(s, rep.image) && covered(rep.image, s);
    return rep;
}

QuasiLinearSet ell_image(const QuasiLinearSet& s)
{
    QuasiLinearSet out(s.prime(), s.rank());
    for (auto c : s.components()) {
        for (auto& a : c.shift.exponents) a *= s.prime();
        out.add(c);
    }
    return out;
}

std::vector<TorsionLabel> torsion_points_of(const QuasiLinearSet& s, int n)
{
    const i64 m = ipow(s.prime(), n);
    auto total = checked_pow(m, s.rank());
    require(total && *total <= (i64(1) << 20), ErrorKind::BudgetExceeded, "too many torsion points");
    std::vector<TorsionLabel> out;
    TorsionLabel t{n, std::vector<i64>(s.rank(), 0)};
    for (i64 idx = 0; idx < *total; ++idx) {
        i64 r = idx;
        for (int i = s.rank() - 1; i >= 0; --i) {
            t.exponents[i] = r % m;
            r /= m;
        }
        if (s.contains(t)) out.push_back(t);
    }
    return out;
}

DeJongReport de_jong_check(const QuasiLinearSet& s, int n)
{
    DeJongReport rep;
    for (const auto& t : torsion_points_of(s, n)) {
        TorsionLabel p = t;
        for (auto& a : p.exponents) a = mod(a * s.prime(), ipow(s.prime(), n));
        if (!s.contains(p)) rep.witnesses.push_back(t);
    }
    rep.holds = rep.witnesses.empty();
    return rep;
}

bool same_torsion_points(const QuasiLinearSet& a, const QuasiLinearSet& b, int n)
{
    return torsion_points_of(a, n) == torsion_points_of(b, n);
}

} // namespace ladic
