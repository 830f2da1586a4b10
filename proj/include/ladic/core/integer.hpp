#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace ladic {

using i64 = std::int64_t;
using i128 = __int128;
using Rational = boost::rational<i64>;

// Largest modulus used for residue arithmetic; products go through i128.
inline constexpr i64 kMaxModulus = i64(1) << 62;

bool is_prime(i64 n);

// ord_p(n) for n != 0.
int ord(i64 p, i64 n);
int ord128(i64 p, i128 n);

// p^k, or nullopt if it would exceed kMaxModulus.
std::optional<i64> checked_pow(i64 p, int k);
i64 ipow(i64 p, int k);

inline i64 mod(i64 a, i64 m)
{
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) { return static_cast<i64>((static_cast<i128>(a) * b) % m); }

i64 powmod(i64 a, i64 e, i64 m);

// Inverse of a unit modulo p^k (a coprime to p).
i64 invmod(i64 a, i64 m);

// Sum of base-p digits of n >= 0.
int digit_sum(i64 p, i64 n);

// ord_p(n!) = (n - s_p(n)) / (p - 1).
i64 factorial_ord(i64 p, i64 n);

std::vector<i64> base_digits(i64 p, i64 n, int count);

} // namespace ladic
