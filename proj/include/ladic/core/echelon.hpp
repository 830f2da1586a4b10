#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace ladic {

inline bool field_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline mpq_class field_inverse(const mpq_class& x) { return 1 / x; }

// Incrementally built row-echelon basis over an exact field F.
// F needs +, -, * and free functions field_is_zero, field_inverse.
template <class F>
class EchelonBasis {
public:
    explicit EchelonBasis(size_t width) : width_(width) {}

    size_t rank() const { return rows_.size(); }
    size_t width() const { return width_; }
    const std::vector<std::vector<F>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }

    // Reduces v against the basis; true when v lies in the span.
    bool reduce(std::vector<F>& v) const
    {
        for (size_t r = 0; r < rows_.size(); ++r) {
            const size_t p = pivots_[r];
            if (field_is_zero(v[p])) continue;
            const F f = v[p];
            for (size_t j = p; j < width_; ++j)
                if (!field_is_zero(rows_[r][j])) v[j] = v[j] - f * rows_[r][j];
        }
        for (const auto& x : v)
            if (!field_is_zero(x)) return false;
        return true;
    }

    bool contains(std::vector<F> v) const { return reduce(v); }

    // Adds v if independent; returns whether the rank grew.
    bool insert(std::vector<F> v)
    {
        if (reduce(v)) return false;
        size_t p = 0;
        while (field_is_zero(v[p])) ++p;
        const F inv = field_inverse(v[p]);
        for (size_t j = p; j < width_; ++j) v[j] = v[j] * inv;
        // keep fully reduced form
        for (auto& row : rows_) {
            if (field_is_zero(row[p])) continue;
            const F f = row[p];
            for (size_t j = p; j < width_; ++j) row[j] = row[j] - f * v[j];
        }
        size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

private:
    size_t width_;
    std::vector<std::vector<F>> rows_;
    std::vector<size_t> pivots_;
};

template <class F>
size_t exact_rank(const std::vector<std::vector<F>>& rows, size_t width)
{
    EchelonBasis<F> b(width);
    for (const auto& r : rows) b.insert(r);
    return b.rank();
}

} // namespace ladic
