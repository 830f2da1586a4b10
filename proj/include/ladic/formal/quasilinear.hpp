#pragma once

#include <string>
#include <vector>

#include "ladic/formal/group_ring.hpp"
#include "ladic/formal/lattice.hpp"

namespace ladic {

// s * H where H = {chi : chi(v) = 1 for v in pi'} and pi' is spanned by the
// columns of `lattice` (b rows).
struct QuasiLinearComponent {
    TorsionLabel shift;
    IntMatrix lattice; // b x k, possibly k = 0
};

class QuasiLinearSet {
public:
    QuasiLinearSet(i64 prime, int rank) : prime_(prime), rank_(rank) {}

    i64 prime() const { return prime_; }
    int rank() const { return rank_; }
    const std::vector<QuasiLinearComponent>& components() const { return components_; }

    // Rejects unsaturated lattices (MalformedInput).
    void add(QuasiLinearComponent c);

    bool contains(const TorsionLabel& chi) const;
    // `component r: s=<label> lattice=<columns>` lines
    std::string serialize() const;

private:
    i64 prime_;
    int rank_;
    std::vector<QuasiLinearComponent> components_;
};

bool quasilinear_contains(const QuasiLinearSet& s, const Character& chi);

struct SigmaImageReport {
    QuasiLinearSet image;
    bool stable = false;
    bool saturated = false; // every image lattice passes the Smith-form test
};

// sigma acts on pi by the integer matrix; characters move by chi -> chi o sigma^{-1}.
SigmaImageReport quasilinear_sigma_image(const QuasiLinearSet& s, const IntMatrix& sigma);

// Image under [l]: shifts raised to the l-th power, lattices unchanged.
QuasiLinearSet ell_image(const QuasiLinearSet& s);

// Torsion points of S with values in mu_{l^n}, lexicographic.
std::vector<TorsionLabel> torsion_points_of(const QuasiLinearSet& s, int n);

struct DeJongReport {
    bool holds = false;
    std::vector<TorsionLabel> witnesses; // points of S whose l-th power leaves S
};

// [l](S) inside S, checked on all level-n torsion points of S.
DeJongReport de_jong_check(const QuasiLinearSet& s, int n);

// Set equality of two presented sets on the level-n torsion points.
bool same_torsion_points(const QuasiLinearSet& a, const QuasiLinearSet& b, int n);

} // namespace ladic
