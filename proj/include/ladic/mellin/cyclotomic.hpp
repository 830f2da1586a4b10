#pragma once

#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ladic/core/integer.hpp"

namespace ladic {

// Q(zeta_{l^L}) as Q[z] / Phi_{l^L}(z); level 0 is Q itself.
struct CycloField {
    i64 prime = 2;
    int level = 0;
    int degree = 1; // (l-1) l^{L-1}
    i64 order = 1;  // l^L

    static std::shared_ptr<const CycloField> make(i64 prime, int level);
};

using CycloPtr = std::shared_ptr<const CycloField>;

class Cyc {
public:
    Cyc() = default;
    Cyc(CycloPtr field, const mpq_class& c);
    static Cyc zeta_power(CycloPtr field, i64 e);

    const CycloPtr& field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;

    Cyc operator-() const;
    Cyc operator+(const Cyc& y) const;
    Cyc operator-(const Cyc& y) const;
    Cyc operator*(const Cyc& y) const;
    Cyc operator/(const Cyc& y) const { return *this * y.inverse(); }
    bool operator==(const Cyc& y) const;
    bool operator!=(const Cyc& y) const { return !(*this == y); }

    Cyc inverse() const;
    // Norm to Q: determinant of multiplication by this element.
    mpq_class norm() const;
    // Image in a field of higher level, z -> z^{l^{L-k}}.
    Cyc embed(const CycloPtr& target) const;
    // Multiplication by this element on the basis 1, z, .., z^{d-1} (column j = image of z^j).
    std::vector<std::vector<mpq_class>> mult_matrix() const;

    // Sum of `c*z^a` terms, e.g. `2 - z^3 + 1/2*z`.
    std::string to_string() const;
    static Cyc parse(CycloPtr field, const std::string& text);

private:
    CycloPtr field_;
    std::vector<mpq_class> c_;
};

inline bool field_is_zero(const Cyc& x) { return x.is_zero(); }
inline Cyc field_inverse(const Cyc& x) { return x.inverse(); }

using CycMatrix = std::vector<std::vector<Cyc>>;

CycMatrix identity(const CycloPtr& f, int n);
CycMatrix mat_mul(const CycMatrix& a, const CycMatrix& b);
Cyc determinant(CycMatrix a);
size_t cyc_rank(const CycMatrix& rows);

} // namespace ladic
