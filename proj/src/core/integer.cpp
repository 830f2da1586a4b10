#include "ladic/core/integer.hpp"

#include "ladic/core/error.hpp"

namespace ladic {

bool is_prime(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int ord(i64 p, i64 n)
{
    require(n != 0, ErrorKind::OutOfRange, "ord of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

int ord128(i64 p, i128 n)
{
    require(n != 0, ErrorKind::OutOfRange, "ord of zero");
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::optional<i64> checked_pow(i64 p, int k)
{
    i64 r = 1;
    for (int i = 0; i < k; ++i) {
        if (r > kMaxModulus / p) return std::nullopt;
        r *= p;
    }
    return r;
}

i64 ipow(i64 p, int k)
{
    auto r = checked_pow(p, k);
    require(r.has_value(), ErrorKind::OutOfRange, "power exceeds 62-bit modulus range");
    return *r;
}

i64 powmod(i64 a, i64 e, i64 m)
{
    i64 r = 1 % m;
    a = mod(a, m);
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 m)
{
    i64 g = m, x = 0, x1 = 1, a1 = mod(a, m);
    // extended Euclid on (m, a)
    while (a1 != 0) {
        i64 q = g / a1;
        i64 t = g - q * a1;
        g = a1;
        a1 = t;
        i64 tx = x - q * x1;
        x = x1;
        x1 = tx;
    }
    require(g == 1, ErrorKind::DivisionByZero, "not a unit modulo " + std::to_string(m));
    return mod(x, m);
}

int digit_sum(i64 p, i64 n)
{
    int s = 0;
    while (n > 0) {
        s += static_cast<int>(n % p);
        n /= p;
    }
    return s;
}

i64 factorial_ord(i64 p, i64 n) { return (n - digit_sum(p, n)) / (p - 1); }

std::vector<i64> base_digits(i64 p, i64 n, int count)
{
    std::vector<i64> d(count, 0);
    for (int i = 0; i < count && n > 0; ++i) {
        d[i] = n % p;
        n /= p;
    }
    return d;
}

} // namespace ladic
