#ifndef CYCLONUM_POLYNOMIAL_HPP
#define CYCLONUM_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "numeric.hpp"

namespace cyclonum {

// Dense integer polynomials, lowest coefficient first, empty vector = 0.
using IntPoly = std::vector<mpz_class>;

inline void poly_trim(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline bool poly_is_zero(const IntPoly& f) {
    for (const auto& c : f) if (c != 0) return false;
    return true;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

// Division with remainder by a monic divisor; exact over Z.
inline void poly_divmod_monic(IntPoly a, const IntPoly& b, IntPoly& quot, IntPoly& rem) {
    if (b.empty() || b.back() != 1)
        throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
    poly_trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) { quot.clear(); rem = std::move(a); return; }
    quot.assign(a.size() - db, mpz_class(0));
    while (a.size() >= b.size()) {
        const std::size_t off = a.size() - b.size();
        mpz_class c = a.back();
        quot[off] = c;
        for (std::size_t j = 0; j <= db; ++j) a[off + j] -= c * b[j];
        poly_trim(a);
    }
    rem = std::move(a);
    poly_trim(quot);
}

inline IntPoly poly_mod_monic(const IntPoly& a, const IntPoly& b) {
    IntPoly q, r;
    poly_divmod_monic(a, b, q, r);
    return r;
}

inline mpz_class poly_eval(const IntPoly& f, const mpz_class& x) {
    mpz_class r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
    return r;
}

// x^k - 1 divided by the product of the lower-order factors, walking the
// divisor lattice of k in ascending order.  Returns the order-k factor.
inline IntPoly cyclotomic_poly(u64 k) {
    if (k == 0) throw std::invalid_argument("cyclotomic_poly: order must be positive");
    std::vector<u64> divs;
    for (u64 d = 1; d * d <= k; ++d) {
        if (k % d == 0) {
            divs.push_back(d);
            if (d != k / d) divs.push_back(k / d);
        }
    }
    std::sort(divs.begin(), divs.end());
    std::vector<IntPoly> phi(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) {
        const u64 d = divs[i];
        IntPoly num(d + 1, mpz_class(0));
        num[0] = -1;
        num[d] = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (d % divs[j] != 0) continue;
            IntPoly q, r;
            poly_divmod_monic(num, phi[j], q, r);
            if (!poly_is_zero(r)) throw std::logic_error("cyclotomic_poly: inexact division");
            num = std::move(q);
        }
        phi[i] = std::move(num);
    }
    return phi.back();
}

} // namespace cyclonum

#endif
