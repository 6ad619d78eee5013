#ifndef CYCLONUM_NUMERIC_HPP
#define CYCLONUM_NUMERIC_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"

namespace cyclonum {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod_u64(u64 a, u64 b, u64 m) {
    if (((a | b) >> 32) == 0) return (a * b) % m; // product fits in 64 bits
    return static_cast<u64>((u128)a * b % m);
}

inline u64 powmod_u64(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Prime factorization by trial division, as a sorted multiset of primes.
// Intended for desk-scale inputs (the quantities q - 1, k, group orders);
// no attempt is made at sublinear factoring.
inline std::vector<u64> factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: argument must be nonzero");
    std::vector<u64> fs;
    for (u64 d : {u64(2), u64(3)}) {
        while (n % d == 0) { fs.push_back(d); n /= d; }
    }
    for (u64 d = 5; d <= n / d; d += 6) {
        while (n % d == 0) { fs.push_back(d); n /= d; }
        u64 e = d + 2;
        while (n % e == 0) { fs.push_back(e); n /= e; }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
    auto fs = factorize(n);
    fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
    return fs;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    return factorize(n).size() == 1;
}

inline u64 euler_phi(u64 n) {
    u64 phi = n;
    for (u64 r : distinct_prime_factors(n)) phi -= phi / r;
    return phi;
}

// Largest squarefree divisor (the radical).
inline u64 squarefree_part(u64 n) {
    u64 m = 1;
    for (u64 r : distinct_prime_factors(n)) m *= r;
    return m;
}

// Multiplicative order of a modulo k.  Starts from the group order phi(k)
// and strips prime factors that keep a^(d/r) = 1, so no incremental search
// is ever performed.
inline u64 mult_order(u64 a, u64 k) {
    if (k == 0) throw std::invalid_argument("mult_order: modulus must be nonzero");
    a %= k;
    if (k == 1) return 1;
    if (std::gcd(a, k) != 1) throw std::invalid_argument("mult_order: arguments are not coprime");
    u64 d = euler_phi(k);
    for (u64 r : distinct_prime_factors(d)) {
        while (d % r == 0 && powmod_u64(a, d / r, k) == 1) d /= r;
    }
    return d;
}

inline mpz_class mpz_pow(const mpz_class& base, u64 exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

inline mpz_class mpz_pow(u64 base, u64 exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

} // namespace cyclonum

#endif
