#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace freeloop {

/// Exact integer used everywhere.  Binomials 2^m and normal-form pivots
/// overflow fixed width quickly, so all coefficients are arbitrary precision.
using Int = boost::multiprecision::cpp_int;

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int int_gcd(Int a, Int b)
{
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Int int_lcm(const Int& a, const Int& b)
{
    if (a == 0 || b == 0)
        return 0;
    return int_abs(a / int_gcd(a, b) * b);
}

/// (-1)^e as an Int, for Koszul bookkeeping.
inline Int parity_sign(long long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

inline Int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

inline bool is_prime(const Int& p)
{
    if (p < 2)
        return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Representative of a mod p in [0, p).
inline Int mod_reduce(const Int& a, const Int& p)
{
    Int r = a % p;
    if (r < 0)
        r += p;
    return r;
}

/// Inverse of a mod p (p prime, a not divisible by p).
inline Int mod_inverse(const Int& a, const Int& p)
{
    // extended Euclid
    Int old_r = mod_reduce(a, p), r = p;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    return mod_reduce(old_s, p);
}

inline std::string to_string(const Int& a) { return a.str(); }

} // namespace freeloop
