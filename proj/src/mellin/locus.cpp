#include "ladic/mellin/locus.hpp"

#include <algorithm>

#include "ladic/core/error.hpp"

namespace ladic {

std::string format_dims(const std::vector<int>& dims)
{
    std::string s = "[";
    for (size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
    return s + "]";
}

std::string LocusReport::block() const
{
    std::string s = "sigma i=" + std::to_string(degree) + " j=" + std::to_string(threshold) + " level=" + std::to_string(level) + ": [";
    for (size_t k = 0; k < points.size(); ++k) s += (k ? ", " : "") + points[k].id();
    return s + "]; generic=" + format_dims(generic) + "; euler=" + std::to_string(euler);
}

std::vector<TorsionLabel> torsion_labels(i64 prime, int b, int n)
{
    const auto m = checked_pow(prime, n);
    require(m.has_value(), ErrorKind::BudgetExceeded, "torsion level too large");
    const auto total = checked_pow(*m, b);
    require(total && *total <= 4096, ErrorKind::BudgetExceeded, "more than 4096 torsion characters at this level");
    std::vector<TorsionLabel> out;
    for (i64 idx = 0; idx < *total; ++idx) {
        TorsionLabel t{n, std::vector<i64>(b)};
        i64 r = idx;
        for (int i = b - 1; i >= 0; --i) {
            t.exponents[i] = r % *m;
            r /= *m;
        }
        out.push_back(t);
    }
    return out;
}

LocusReport jumping_locus(const MellinComplex& K, int i, int j, int n)
{
    require(i >= 0 && j >= 0 && n >= 0, ErrorKind::OutOfRange, "degree, threshold and level must be >= 0");
    LocusReport rep;
    rep.degree = i;
    rep.threshold = j;
    rep.level = n;
    const auto labels = torsion_labels(K.data().prime, K.group_rank(), n);
    fiber_field(K, n); // budget check on the field
    rep.generic = generic_dims(K);
    bool first = true;
    for (const auto& t : labels) {
        const auto dims = fiber_dims(K, t);
        const int e = euler_characteristic(dims);
        if (first) rep.euler = e;
        rep.euler_consistent = rep.euler_consistent && e == rep.euler;
        first = false;
        ++rep.characters;
        if (i < static_cast<int>(dims.size()) && dims[i] > j) rep.points.push_back(t);
    }
    return rep;
}

QuasiLinearVerdict verify_quasilinear(const LocusReport& report, const QuasiLinearSet& s)
{
    QuasiLinearVerdict v;
    const auto expected = torsion_points_of(s, report.level);
    for (const auto& t : expected)
        if (std::find(report.points.begin(), report.points.end(), t) == report.points.end()) v.missing.push_back(t);
    for (const auto& t : report.points)
        if (!s.contains(t)) v.extra.push_back(t);
    v.holds = v.missing.empty() && v.extra.empty();
    return v;
}

} // namespace ladic
