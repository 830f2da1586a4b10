#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ladic/mellin/monodromy.hpp"

namespace ladic {

// Koszul cohomology over A_{m,n} = (O_E/l^m)[pi/l^n pi]; orders are given as
// exponents: |H^p| = l^{log_orders[p]}.
struct LimitLevel {
    int m = 0, n = 0;
    std::vector<int> group_route;  // group basis [g], [q] acting by translation
    std::vector<int> poly_route;   // monomial basis modulo (1 + X_i)^{l^n} - 1
    bool routes_agree = false;
    bool stabilized = false;       // f_n vanishes modulo (l^m, deg > D)
    std::optional<std::vector<int>> truncated; // cohomology over (O_E/l^m)[X]/(deg > D)
    bool projection_chain_map = true;          // A_{m,n} -> R_{D,m} commutes with d
};

struct LimitReport {
    bool holds = false;
    int degree_cap = 0;
    std::vector<LimitLevel> levels;
    bool transitions_chain_maps = true; // A_{m,n+1} -> A_{m,n} and A_{m+1,n} -> A_{m,n}
    std::string text() const;
};

// All pairs 1 <= m <= n <= levels. BudgetExceeded when a complex has more
// than `cap` rows or columns over Z/l^m.
LimitReport finite_level_limit_check(const MonodromyData& data, int degree_cap, int levels, int cap = 6000);

// Exponent of |image| for an integer matrix over Z/l^m (valuation-pivoted elimination).
int image_log_order(std::vector<std::vector<i64>> a, i64 prime, int m);

} // namespace ladic
