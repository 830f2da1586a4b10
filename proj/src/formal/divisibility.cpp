#include "ladic/formal/divisibility.hpp"

#include "ladic/core/error.hpp"

namespace ladic {

DivisibilityReport prosystem_divisibility_check(i64 prime, int m, int n)
{
    require(is_prime(prime), ErrorKind::MalformedInput, "l must be prime");
    require(m >= 1 && n >= 0, ErrorKind::OutOfRange, "need m >= 1 and n >= 0");
    const auto top = checked_pow(prime, n);
    require(top && *top <= 4096, ErrorKind::BudgetExceeded, "l^n above 4096");
    const auto mod_m = checked_pow(prime, m);
    require(mod_m.has_value(), ErrorKind::OutOfRange, "l^m too large");
    const i64 L = *top, M = *mod_m;

    // row L of Pascal's triangle modulo l^m
    std::vector<i64> row{1};
    for (i64 k = 1; k <= L; ++k) {
        std::vector<i64> next(k + 1, 1);
        for (i64 j = 1; j < k; ++j) next[j] = (row[j - 1] + row[j]) % M;
        row = std::move(next);
    }
    DivisibilityReport rep;
    rep.threshold = n - m + 1 >= 0 ? ipow(prime, n - m + 1) : 1;
    rep.lowest_surviving = 0;
    for (i64 r = 1; r <= L; ++r)
        if (row[r] % M != 0) {
            rep.lowest_surviving = r;
            break;
        }
    rep.holds = rep.lowest_surviving == 0 || rep.lowest_surviving >= rep.threshold;
    return rep;
}

} // namespace ladic
