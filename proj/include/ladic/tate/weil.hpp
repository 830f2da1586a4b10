#pragma once

#include <string>
#include <vector>

#include "ladic/core/integer.hpp"

namespace ladic {

enum class Verdict { pass, fail, inconclusive };

std::string to_string(Verdict v);

struct WeilReport {
    Verdict verdict = Verdict::inconclusive;
    int degree = 0; // of the squarefree part
    i64 constant = 0; // a0 of the squarefree part; c^degree = |a0|
    std::string modulus; // c printed as |a0|^(1/d)
    double modulus_approx = 0;
    bool same_modulus = false; // certified
    bool modulus_is_one = false;
    int digits_used = 0; // working precision of the last isolation attempt
    std::string reason;
};

// Do all complex roots of the monic integer polynomial (low -> high) share
// one modulus c != 1? A pass certifies alpha^n != 1 for all n != 0.
WeilReport weil_condition_check(const std::vector<i64>& charpoly);

} // namespace ladic
