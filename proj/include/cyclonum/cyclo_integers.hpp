#ifndef CYCLONUM_CYCLO_INTEGERS_HPP
#define CYCLONUM_CYCLO_INTEGERS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "numeric.hpp"
#include "polynomial.hpp"

namespace cyclonum {

// Integer combination of k-th roots of unity, kept as the raw coefficient
// vector (a_0, ..., a_{k-1}) of f(x) = sum a_i x^i without reduction.
struct CycInt {
    u64 k = 0;
    std::vector<mpz_class> coeffs;

    CycInt() = default;
    CycInt(u64 k_, std::vector<mpz_class> coeffs_) : k(k_), coeffs(std::move(coeffs_)) {
        if (k < 2) throw std::invalid_argument("CycInt: order must be at least 2");
        if (coeffs.size() != k)
            throw std::invalid_argument("CycInt: coefficient vector must have length k");
    }
};

inline CycInt make_cycint(u64 k, std::vector<i64> coeffs) {
    std::vector<mpz_class> c(coeffs.begin(), coeffs.end());
    return CycInt(k, std::move(c));
}

struct IntMatrix {
    std::size_t dim = 0;
    std::vector<mpz_class> a; // row-major

    IntMatrix() = default;
    explicit IntMatrix(std::size_t d) : dim(d), a(d * d, mpz_class(0)) {
        if (d < 1) throw std::invalid_argument("IntMatrix: dimension must be at least 1");
    }
    mpz_class& at(std::size_t i, std::size_t j) { return a[i * dim + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a[i * dim + j]; }
};

namespace detail {

// Product of B over the roots of the monic polynomial A, modulo a word
// prime, computed by the remainder recursion
//   prod_A(B) = lc(B)^deg A * (-1)^(deg A * deg B) * prod_B~(A mod B~).
// This is a polynomial identity in the coefficients, so it commutes with
// reduction mod p; A monic keeps every step well-defined.
inline u64 roots_product_mod(std::vector<u64> A, std::vector<u64> B, u64 p) {
    auto trim = [](std::vector<u64>& f) { while (!f.empty() && f.back() == 0) f.pop_back(); };
    trim(A); trim(B);
    u64 acc = 1;
    while (true) {
        if (B.empty()) return A.size() >= 2 ? 0 : acc;
        const std::size_t degA = A.size() - 1, degB = B.size() - 1;
        if (degB == 0) {
            return mulmod_u64(acc, powmod_u64(B[0], degA, p), p);
        }
        const u64 c = B.back();
        acc = mulmod_u64(acc, powmod_u64(c, degA, p), p);
        if ((degA & 1) && (degB & 1) && acc != 0) acc = p - acc;
        const u64 cinv = powmod_u64(c, p - 2, p);
        for (auto& x : B) x = mulmod_u64(x, cinv, p);
        // A mod B (B monic now)
        while (A.size() >= B.size()) {
            const u64 lead = A.back();
            const std::size_t off = A.size() - B.size();
            if (lead != 0) {
                for (std::size_t j = 0; j + 1 < B.size(); ++j) {
                    u64 s = mulmod_u64(lead, B[j], p);
                    A[off + j] = A[off + j] >= s ? A[off + j] - s : A[off + j] + p - s;
                }
            }
            A.pop_back();
            trim(A);
        }
        std::swap(A, B);
    }
}

inline std::vector<u64> reduce_poly_mod(const IntPoly& f, u64 p) {
    std::vector<u64> r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), static_cast<unsigned long>(p));
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

} // namespace detail

// Product of f over the primitive k-th roots of unity, an exact integer.
//
// Computed multimodularly: the value is bounded in absolute value by
// (sum |r_i|)^deg, where r = f reduced mod the order-k factor and deg is
// that factor's degree (triangle inequality on the unit circle), so enough
// word-prime images pinned together by the remainder theorem recover it.
inline mpz_class norm(const CycInt& f) {
    const IntPoly phi = cyclotomic_poly(f.k);
    IntPoly r = poly_mod_monic(IntPoly(f.coeffs.begin(), f.coeffs.end()), phi);
    if (r.empty()) return 0;
    const std::size_t deg = phi.size() - 1;
    mpz_class height = 0;
    for (const auto& c : r) height += abs(c);
    mpz_class bound = 2 * mpz_pow(height, deg) + 1;

    mpz_class X = 0, M = 1;
    mpz_class prime = (mpz_class(1) << 62) - 1;
    while (M <= bound) {
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        const u64 p = mpz_get_ui(prime.get_mpz_t());
        const u64 img = detail::roots_product_mod(detail::reduce_poly_mod(phi, p),
                                                  detail::reduce_poly_mod(r, p), p);
        if (M == 1) {
            X = img;
            M = p;
        } else {
            u64 xm = mpz_fdiv_ui(X.get_mpz_t(), static_cast<unsigned long>(p));
            u64 minv = powmod_u64(mpz_fdiv_ui(M.get_mpz_t(), static_cast<unsigned long>(p)),
                                  p - 2, p);
            u64 t = mulmod_u64(img >= xm ? img - xm : img + p - xm, minv, p);
            X += M * t;
            M *= p;
        }
    }
    if (X * 2 > M) X -= M;
    return X;
}

// Exact form of the discriminant-free norm bound: compares
// norm^2 * d^d against k^d * S^d with d the degree of the order-k factor
// and S the coefficient square sum.  The optional power-form verdict is
// norm^2 <= S^k, meaningful once S >= 3.
struct GeneralNormBound {
    mpz_class norm_value;
    mpz_class square_sum; // S
    mpz_class lhs;        // norm^2 * d^d
    mpz_class rhs;        // k^d * S^d
    bool holds = false;
    std::optional<bool> holds_power_form;
};

inline GeneralNormBound norm_bound_general(const CycInt& f) {
    GeneralNormBound out;
    out.norm_value = norm(f);
    for (const auto& c : f.coeffs) out.square_sum += c * c;
    const u64 d = euler_phi(f.k);
    out.lhs = out.norm_value * out.norm_value * mpz_pow(d, d);
    out.rhs = mpz_pow(f.k, d) * mpz_pow(out.square_sum, d);
    out.holds = out.lhs <= out.rhs;
    if (out.square_sum >= 3)
        out.holds_power_form = out.norm_value * out.norm_value <= mpz_pow(out.square_sum, f.k);
    return out;
}

inline IntMatrix circulant(const std::vector<mpz_class>& first_row) {
    if (first_row.empty()) throw std::invalid_argument("circulant: need at least one entry");
    const std::size_t k = first_row.size();
    IntMatrix m(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m.at(i, j) = first_row[(j + k - i % k) % k];
    return m;
}

inline IntMatrix circulant(const CycInt& f) { return circulant(f.coeffs); }

// Fraction-free elimination; every division is exact over Z.
inline mpz_class det_exact(IntMatrix m) {
    const std::size_t n = m.dim;
    if (n == 0) throw std::invalid_argument("det_exact: empty matrix");
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m.at(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(c, j));
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                mpz_class t = m.at(i, j) * m.at(c, c) - m.at(i, c) * m.at(c, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m.at(i, c) = 0;
        }
        prev = m.at(c, c);
    }
    return sign * m.at(n - 1, n - 1);
}

// Determinant route to the norm for prime k, via the circulant matrix M of
// f.  With s = f(1): if s != 0 the norm is det(M) / s; if s = 0 it is
// k times the minor of M with the first row and column removed.  The
// divisibility in the first case is asserted.
inline mpz_class norm_via_circulant(const CycInt& f) {
    if (!is_prime(f.k))
        throw std::invalid_argument("norm_via_circulant: order must be prime");
    IntMatrix m = circulant(f);
    mpz_class s = 0;
    for (const auto& c : f.coeffs) s += c;
    if (s != 0) {
        mpz_class d = det_exact(m);
        if (!mpz_divisible_p(d.get_mpz_t(), s.get_mpz_t()))
            throw std::logic_error("norm_via_circulant: determinant not divisible by f(1)");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), d.get_mpz_t(), s.get_mpz_t());
        return q;
    }
    IntMatrix minor(f.k - 1);
    for (std::size_t i = 1; i < f.k; ++i)
        for (std::size_t j = 1; j < f.k; ++j)
            minor.at(i - 1, j - 1) = m.at(i, j);
    return mpz_class(f.k) * det_exact(minor);
}

// Row-wise determinant bound: the product over rows of
// max(sum of positive entries, -(sum of negative entries)).
inline mpz_class schinzel_bound(const IntMatrix& m) {
    mpz_class prod = 1;
    for (std::size_t i = 0; i < m.dim; ++i) {
        mpz_class pos = 0, neg = 0;
        for (std::size_t j = 0; j < m.dim; ++j) {
            const mpz_class& v = m.at(i, j);
            if (v > 0) pos += v; else neg -= v;
        }
        prod *= pos >= neg ? pos : neg;
    }
    return prod;
}

// Prime-order norm bound from the circulant route, split by whether the
// coefficient sum vanishes: |norm| <= k * A^(k-1) when it does, and
// |norm| <= A^k / |sum| otherwise, with A = max of the one-sided
// coefficient sums.  The verdict is evaluated cross-multiplied, the bound
// itself reported as an exact rational.
struct PrimeNormBound {
    bool zero_sum_case = false;
    mpz_class one_sided_max; // A
    mpq_class bound;
    bool holds = false;
    mpz_class norm_value;
};

inline PrimeNormBound norm_bound_prime(const CycInt& f) {
    if (!is_prime(f.k))
        throw std::invalid_argument("norm_bound_prime: order must be prime");
    PrimeNormBound out;
    mpz_class pos = 0, neg = 0, sum = 0;
    for (const auto& c : f.coeffs) {
        if (c > 0) pos += c; else neg -= c;
        sum += c;
    }
    out.one_sided_max = pos >= neg ? pos : neg;
    out.norm_value = norm(f);
    mpz_class absn = abs(out.norm_value);
    out.zero_sum_case = sum == 0;
    if (out.zero_sum_case) {
        mpz_class b = mpz_class(f.k) * mpz_pow(out.one_sided_max, f.k - 1);
        out.bound = mpq_class(b);
        out.holds = absn <= b;
    } else {
        mpz_class abss = abs(sum);
        out.bound = mpq_class(mpz_pow(out.one_sided_max, f.k), abss);
        out.bound.canonicalize();
        out.holds = absn * abss <= mpz_pow(out.one_sided_max, f.k);
    }
    return out;
}

// Product in Z[x]/(order-k factor), zero-padded back to length k so the
// result is again a CycInt of the same order.
inline CycInt mul_mod_phi(const CycInt& f, const CycInt& g) {
    if (f.k != g.k) throw std::invalid_argument("mul_mod_phi: mixed orders");
    const IntPoly phi = cyclotomic_poly(f.k);
    IntPoly prod = poly_mul(IntPoly(f.coeffs.begin(), f.coeffs.end()),
                            IntPoly(g.coeffs.begin(), g.coeffs.end()));
    IntPoly rem = poly_mod_monic(prod, phi);
    rem.resize(f.k, mpz_class(0));
    return CycInt(f.k, std::move(rem));
}

} // namespace cyclonum

#endif
