#pragma once

#include <string>
#include <vector>

#include "ladic/tate/sigma.hpp"

namespace ladic {

struct ClosureReport {
    int n = 0; // works in A / M^n
    bool exact = false; // rational elimination (integer inputs) vs valuation pivoting
    int input_rank = 0;
    int dimension = 0; // dim of the sigma-stable closure V
    bool closure_stable = false; // sigma(V) in V, re-verified
    bool input_stable = false;
    bool graded = false;
    std::vector<int> graded_dims; // dim of the degree-d piece spanned by components, d = 0..n-1
    std::vector<std::string> basis; // reduced echelon basis of V (exact route)
};

// Smallest sigma-stable subspace of A/M^n containing the generators, and
// whether it is the direct sum of its homogeneous pieces.
ClosureReport graded_closure_check(const std::vector<TruncatedSeries>& generators, const SigmaAction& sigma, int n);

// Rank of a matrix over E by valuation-pivoted elimination; RankUncertain
// when the undecided remainder is only zero at the working precision.
int padic_rank(std::vector<std::vector<PadicScalar>> rows);

} // namespace ladic
