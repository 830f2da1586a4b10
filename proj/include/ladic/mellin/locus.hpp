#pragma once

#include <string>
#include <vector>

#include "ladic/formal/quasilinear.hpp"
#include "ladic/mellin/koszul.hpp"

namespace ladic {

struct LocusReport {
    int degree = 0;    // i
    int threshold = 0; // j
    int level = 0;     // n
    std::vector<TorsionLabel> points; // level-n labels with dim H^i > j, lexicographic
    std::vector<int> generic;
    int euler = 0;
    bool euler_consistent = true; // same Euler characteristic on every enumerated fiber
    int characters = 0;           // number of fibers computed

    // `sigma i=<i> j=<j> level=<n>: [ids]; generic=[dims]; euler=<e>`
    std::string block() const;
};

// All level-n torsion characters, exponents in [0, l^n), lexicographic.
std::vector<TorsionLabel> torsion_labels(i64 prime, int b, int n);

// BudgetExceeded when l^{nb} > 4096 or the cyclotomic field gets too large.
LocusReport jumping_locus(const MellinComplex& K, int i, int j, int n);

struct QuasiLinearVerdict {
    bool holds = false;
    std::vector<TorsionLabel> missing; // torsion points of S outside the locus
    std::vector<TorsionLabel> extra;   // locus points outside S
};

QuasiLinearVerdict verify_quasilinear(const LocusReport& report, const QuasiLinearSet& s);

std::string format_dims(const std::vector<int>& dims);

} // namespace ladic
