#pragma once

#include "ladic/core/integer.hpp"

namespace ladic {

struct DivisibilityReport {
    bool holds = false;
    i64 threshold = 0; // l^{n-m+1}
    i64 lowest_surviving = 0; // smallest r >= 1 with binom(l^n, r) != 0 mod l^m
};

// Does X^{l^{n-m+1}} divide (X + 1)^{l^n} - 1 in (Z/l^m)[X]?
DivisibilityReport prosystem_divisibility_check(i64 prime, int m, int n);

} // namespace ladic
