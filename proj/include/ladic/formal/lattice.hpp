#pragma once

#include <vector>

#include <gmpxx.h>

#include "ladic/core/integer.hpp"

namespace ladic {

// Integer matrix stored by rows.
using IntMatrix = std::vector<std::vector<i64>>;

IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
// Columns of a followed by those of b.
IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b);

// Nonzero invariant factors of the Smith normal form, d_1 | d_2 | ...
std::vector<mpz_class> smith_invariants(const IntMatrix& m);

// Columns independent and no invariant factor divisible by l, i.e. the
// column span is a direct summand of Z_l^rows.
bool is_saturated(const IntMatrix& columns, i64 prime);

// Z_l-span of the columns of a inside the Z_l-span of the columns of b.
bool lattice_contains(const IntMatrix& b, const IntMatrix& a, i64 prime, int rows);
bool lattice_equal(const IntMatrix& a, const IntMatrix& b, i64 prime, int rows);

// Inverse modulo m = l^k of a matrix with unit determinant; NonInvertible otherwise.
IntMatrix inverse_mod(const IntMatrix& a, i64 m);

} // namespace ladic
