#pragma once

#include <map>
#include <string>
#include <vector>

#include "ladic/formal/group_ring.hpp"
#include "ladic/mellin/monodromy.hpp"

namespace ladic {

// Koszul complex K^p = sum_{|S|=p} R^r on the commuting operators
// D_k = M_k [q_k] - 1, [q] = prod_i (1 + X_i)^{q_i}, with
// d(e_S (x) v) = sum_{j not in S} (-1)^{#{s in S : s < j}} e_{S+j} (x) D_j v.
class MellinComplex {
public:
    explicit MellinComplex(MonodromyData data);

    const MonodromyData& data() const { return data_; }
    int rank() const { return data_.rank; }
    int group_rank() const { return data_.group_rank(); }
    int directions() const { return data_.directions(); }
    // subsets of size p as sorted index lists
    const std::vector<std::vector<int>>& subsets(int p) const { return subsets_[p]; }
    int dim(int p) const { return rank() * static_cast<int>(subsets_[p].size()); }

    // Block structure of d^p: entry (row subset, column subset) -> (sign, direction).
    struct Block {
        int row, col, sign, direction;
    };
    const std::vector<Block>& blocks(int p) const { return blocks_[p]; }

    // d^p with every [q_k] replaced by the scalar u_k (already in the field of `u`).
    CycMatrix differential(int p, const std::vector<Cyc>& u) const;

    // d^{p+1} d^p = 0 as Laurent polynomials in (1 + X_i); checked at build time.
    bool square_zero() const { return square_zero_; }

private:
    MonodromyData data_;
    std::vector<std::vector<std::vector<int>>> subsets_;
    std::vector<std::vector<Block>> blocks_;
    bool square_zero_ = false;
};

// NonCommuting, NonInvertible
MellinComplex build_mellin_complex(const MonodromyData& m);

// Field holding both the entries and the values of a level-n character.
CycloPtr fiber_field(const MellinComplex& K, int level);

// Exact dim H^p at a torsion character: specialize (1 + X_i) -> chi(e_i) and take ranks.
std::vector<int> fiber_dims(const MellinComplex& K, const TorsionLabel& chi);

// Same dimensions from the finite group ring F[(Z/l^n)^b]: the idempotent e_chi
// cuts out the chi-part of K (x) F[G] and ranks are taken on it.
std::vector<int> fiber_dims_group_ring(const MellinComplex& K, const TorsionLabel& chi);

// Ranks over the function field in (1 + X_i), as maxima over an integer grid
// large enough for every minor (combinatorial Nullstellensatz).
std::vector<int> generic_dims(const MellinComplex& K);

int euler_characteristic(const std::vector<int>& dims);

} // namespace ladic
