#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladic/formal/lattice.hpp"
#include "ladic/mellin/cyclotomic.hpp"

namespace ladic {

// Local system of rank r on the torus with commuting monodromies M_k over
// Z[zeta_{l^k}] (k = zeta level), optionally inflated along the directions
// given by the rows of Q.
struct MonodromyData {
    i64 prime = 2;
    int rank = 0;
    CycloPtr entries; // field of the matrix entries
    std::vector<CycMatrix> M;
    std::optional<IntMatrix> quotient;
    int group_rank_hint = 0; // b when rank 0 and no quotient

    int directions() const { return static_cast<int>(M.size()); }
    // b: rank of pi
    int group_rank() const;
    // q_k in pi: row k of Q, or e_k
    std::vector<i64> direction(int k) const;

    // NonCommuting, NonInvertible, MalformedInput
    void validate() const;

    // `rank=<r>; M<i>=<rows>; quotient=<matrix|none>` (optional `zeta=<k>`, `b=<b>`)
    static MonodromyData parse(i64 prime, const std::string& text, int default_zeta = 0);
    std::string serialize() const;

    // Scalar data M_k = zeta^{c_k} (rank 1), trivial when all c_k = 0.
    static MonodromyData scalar(i64 prime, int zeta_level, const std::vector<i64>& exponents);
};

} // namespace ladic
