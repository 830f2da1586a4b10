#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladic/tate/series.hpp"

namespace ladic {

// O_E[[pi]] in the coordinates [e_i] -> 1 + X_i.
using GroupRingElement = TruncatedSeries;

// chi(e_i) = zeta_{l^level}^{exponents[i]}
struct TorsionLabel {
    int level = 0;
    std::vector<i64> exponents;

    bool operator==(const TorsionLabel& o) const { return level == o.level && exponents == o.exponents; }
    // Same label written at a higher level.
    TorsionLabel at_level(i64 prime, int level) const;
    // Lowest level representing the same character.
    TorsionLabel normalized(i64 prime) const;
    std::string id() const; // `(a1,a2)@k`
    static TorsionLabel parse(const std::string& text);
};

struct Character {
    RingPtr field;
    std::vector<PadicScalar> images; // chi(e_1) .. chi(e_b), 1-units
    i64 order = 0; // l^k when torsion, 0 when unknown
    std::optional<TorsionLabel> label;

    int rank() const { return static_cast<int>(images.size()); }
    // `chi: [scalar, ...] order=<t> field=[<header>]`
    std::string serialize() const;
};

// zeta_{l^level} = 1 + t inside a cyclotomic ring of at least that level.
PadicScalar root_of_unity(const RingPtr& field, int level);

Character trivial_character(const RingPtr& field, int b);
Character torsion_character(const RingPtr& field, const TorsionLabel& label);
// All characters with values in mu_{l^n}, lexicographic in the exponent vectors.
std::vector<Character> torsion_points(const RingPtr& field, int n, int b);

// Image of a scalar of the base ring Q_l (or of the same field) in `field`.
PadicScalar embed_scalar(const PadicScalar& x, const RingPtr& field);

// Substitute X_i -> chi(e_i) - 1.
PadicScalar evaluate_at_character(const GroupRingElement& g, const Character& chi);

// X_i -> Y_i + Y'_i + Y_i Y'_i in the 2b variables (Y_1..Y_b, Y'_1..Y'_b).
TruncatedSeries comultiply(const GroupRingElement& g);

// X_i -> (1 + X_i)^{l^n} - 1.
GroupRingElement ell_power_isogeny(const GroupRingElement& g, int n);

// X_i -> (1 + X_i)^{-1} - 1.
GroupRingElement inversion_twist(const GroupRingElement& g);

// Is the image of g in O_E[x]/((1 + x_i)^{l^n} - 1) zero?
bool torsion_ideal_membership(const GroupRingElement& g, int n);

// (1 + x)^{l^n} - 1 as a polynomial with integer coefficients, low -> high.
std::vector<PadicScalar> torsion_generator(const RingPtr& ring, int n);

} // namespace ladic
