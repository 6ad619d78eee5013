#ifndef CYCLONUM_FINITE_FIELD_HPP
#define CYCLONUM_FINITE_FIELD_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "numeric.hpp"

namespace cyclonum {

// An element of F_{p^n}, stored as its coefficient vector read as a base-p
// integer: code = sum c_i p^i with c_i the coefficient of x^i in the
// residue-polynomial representation.  The induced integer order on codes is
// the canonical enumeration order used by find_primitive and find_irreducible.
struct FieldElement {
    u64 code = 0;
    friend bool operator==(FieldElement a, FieldElement b) { return a.code == b.code; }
    friend bool operator!=(FieldElement a, FieldElement b) { return a.code != b.code; }
    friend bool operator<(FieldElement a, FieldElement b) { return a.code < b.code; }
};

namespace detail {

// Dense polynomials over F_p, lowest coefficient first, used only to select
// the canonical modulus.  Leading zeros are trimmed.
using FpPoly = std::vector<u64>;

inline void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u128> t(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            t[i + j] += (u128)a[i] * b[j];
    const std::size_t n = mod.size() - 1;
    for (std::size_t i = t.size(); i-- > n;) {
        u64 c = static_cast<u64>(t[i] % p);
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            t[i - n + j] += (u128)c * (p - mod[j] % p);
        t[i] = 0;
    }
    FpPoly r(std::min(t.size(), n));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = static_cast<u64>(t[i] % p);
    fp_trim(r);
    return r;
}

inline FpPoly fp_powmod_x(u64 e, const FpPoly& mod, u64 p) {
    FpPoly r{1}, b{0, 1}; // mod has degree >= 2, so x is already reduced
    while (e) {
        if (e & 1) r = fp_mulmod(r, b, mod, p);
        b = fp_mulmod(b, b, mod, p);
        e >>= 1;
    }
    return r;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& b, u64 p) {
    fp_trim(a);
    const u64 lead_inv = powmod_u64(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
        u64 c = mulmod_u64(a.back(), lead_inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            u64 s = mulmod_u64(c, b[j], p);
            a[off + j] = (a[off + j] + p - s) % p;
        }
        fp_trim(a);
        if (a.size() > off + b.size()) throw std::logic_error("fp_mod: no progress");
    }
    return a;
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
    fp_trim(a); fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Degree-d gcd test: f (monic, degree n) is irreducible over F_p iff
// x^(p^n) = x (mod f) and gcd(x^(p^(n/r)) - x, f) = 1 for each prime r | n.
inline bool fp_irreducible(const FpPoly& f, u64 p) {
    const std::size_t n = f.size() - 1;
    u64 q = 1;
    for (std::size_t i = 0; i < n; ++i) q *= p;
    FpPoly xq = fp_powmod_x(q, f, p);
    FpPoly x{0, 1};
    if (xq != fp_mod(x, f, p)) return false;
    for (u64 r : distinct_prime_factors(static_cast<u64>(n))) {
        u64 pd = 1;
        for (std::size_t i = 0; i < n / r; ++i) pd *= p;
        FpPoly g = fp_powmod_x(pd, f, p);
        // g - x
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] + p - 1) % p;
        fp_trim(g);
        FpPoly d = fp_gcd(f, g, p);
        if (d.size() != 1) return false;
    }
    return true;
}

} // namespace detail

// First monic irreducible of degree n over F_p, in the order induced by
// reading (c_0, ..., c_{n-1}) as the base-p integer sum c_i p^i.
inline std::vector<u64> find_irreducible(u64 p, unsigned n) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (n < 2) throw std::invalid_argument("find_irreducible: degree must be at least 2");
    mpz_class count = mpz_pow(p, n);
    for (mpz_class v = 0; v < count; ++v) {
        detail::FpPoly f(n + 1, 0);
        mpz_class rest = v;
        for (unsigned i = 0; i < n; ++i) {
            f[i] = mpz_class(rest % p).get_ui();
            rest /= p;
        }
        f[n] = 1;
        if (detail::fp_irreducible(f, p)) {
            return f;
        }
    }
    throw std::logic_error("find_irreducible: exhausted candidates"); // unreachable
}

// Immutable description of F_{p^n}: the characteristic, the degree, and for
// n >= 2 the canonical (first-in-order) monic irreducible modulus.
// All element operations work on base-p codes; see FieldElement.
class FieldSpec {
public:
    u64 p = 0;
    unsigned n = 1;
    u64 q = 0;
    std::vector<u64> modulus; // c_0..c_n with c_n = 1; empty when n == 1

    static FieldSpec make(u64 p, unsigned n) {
        if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p must be prime");
        if (n < 1) throw std::invalid_argument("FieldSpec: n must be at least 1");
        FieldSpec fs;
        fs.p = p;
        fs.n = n;
        fs.q = 1;
        for (unsigned i = 0; i < n; ++i) {
            if (fs.q > std::numeric_limits<u64>::max() / 2 / p)
                throw std::invalid_argument("FieldSpec: p^n exceeds 2^63");
            fs.q *= p;
        }
        if (n >= 2) fs.modulus = find_irreducible(p, n);
        return fs;
    }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }

    // The residue of an arbitrary integer, embedded as a constant.
    FieldElement from_integer(const mpz_class& v) const {
        u64 r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
        return {r};
    }
    FieldElement from_integer(i64 v) const { return from_integer(mpz_class(v)); }

    std::vector<u64> coeffs(FieldElement a) const {
        std::vector<u64> c(n);
        u64 v = a.code;
        for (unsigned i = 0; i < n; ++i) { c[i] = v % p; v /= p; }
        return c;
    }

    FieldElement encode(const std::vector<u64>& c) const {
        u64 v = 0;
        for (unsigned i = n; i-- > 0;) v = v * p + (i < c.size() ? c[i] % p : 0);
        return {v};
    }

    FieldElement add(FieldElement a, FieldElement b) const {
        if (n == 1) { u64 s = a.code + b.code; return {s >= q ? s - q : s}; }
        u64 r = 0, mul = 1;
        for (unsigned i = 0; i < n; ++i) {
            u64 s = a.code % p + b.code % p;
            if (s >= p) s -= p;
            r += s * mul;
            mul *= p;
            a.code /= p; b.code /= p;
        }
        return {r};
    }

    FieldElement neg(FieldElement a) const {
        if (n == 1) return {a.code == 0 ? 0 : q - a.code};
        u64 r = 0, mul = 1;
        for (unsigned i = 0; i < n; ++i) {
            u64 c = a.code % p;
            r += (c == 0 ? 0 : p - c) * mul;
            mul *= p;
            a.code /= p;
        }
        return {r};
    }

    FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (n == 1) return {mulmod_u64(a.code, b.code, p)};
        u64 ac[64], bc[64];
        u128 t[127] = {};
        u64 va = a.code, vb = b.code;
        for (unsigned i = 0; i < n; ++i) { ac[i] = va % p; va /= p; bc[i] = vb % p; vb /= p; }
        for (unsigned i = 0; i < n; ++i) {
            if (ac[i] == 0) continue;
            for (unsigned j = 0; j < n; ++j) t[i + j] += (u128)ac[i] * bc[j];
        }
        for (unsigned i = 2 * n - 1; i-- > n;) {
            u64 c = static_cast<u64>(t[i] % p);
            if (c == 0) continue;
            for (unsigned j = 0; j < n; ++j)
                t[i - n + j] += (u128)c * (p - modulus[j]);
            t[i] = 0;
        }
        u64 r = 0, mul = 1;
        for (unsigned i = 0; i < n; ++i) {
            r += static_cast<u64>(t[i] % p) * mul;
            mul *= p;
        }
        return {r};
    }

    FieldElement pow(FieldElement a, u64 e) const {
        FieldElement r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    FieldElement inv(FieldElement a) const {
        if (a.code == 0) throw std::invalid_argument("FieldSpec::inv: zero has no inverse");
        return pow(a, q - 2);
    }
};

// First element (in code order) whose multiplicative order is q - 1,
// certified by g^((q-1)/r) != 1 for every prime r | q - 1.
inline FieldElement find_primitive(const FieldSpec& fs) {
    if (fs.q == 2) return {1};
    auto rs = distinct_prime_factors(fs.q - 1);
    for (u64 v = 1; v < fs.q; ++v) {
        FieldElement g{v};
        bool ok = true;
        for (u64 r : rs) {
            if (fs.pow(g, (fs.q - 1) / r) == fs.one()) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("find_primitive: no generator found"); // unreachable
}

inline constexpr u64 default_dlog_cap = u64(1) << 24;

// Full discrete log table with respect to a generator g: log[x.code] = i
// with g^i = x, built in one multiplicative sweep.  Memory is q entries,
// guarded by a configurable cap.
struct DlogTable {
    u64 q = 0;
    FieldElement g;
    std::vector<std::uint32_t> log;

    u64 operator()(FieldElement x) const {
        if (x.code == 0 || x.code >= q)
            throw std::invalid_argument("DlogTable: argument outside F_q*");
        return log[x.code];
    }
};

inline DlogTable dlog_table(const FieldSpec& fs, FieldElement g, u64 cap = default_dlog_cap) {
    if (fs.q > cap)
        throw resource_limit_error(
            "dlog_table: q = " + std::to_string(fs.q) +
            " exceeds the table memory cap of " + std::to_string(cap) + " entries");
    if (fs.q > std::numeric_limits<std::uint32_t>::max())
        throw resource_limit_error("dlog_table: q exceeds the 2^32 - 1 entry-width limit");
    DlogTable t;
    t.q = fs.q;
    t.g = g;
    t.log.assign(fs.q, std::numeric_limits<std::uint32_t>::max());
    FieldElement x = fs.one();
    for (u64 i = 0; i + 1 < fs.q; ++i) {
        if (t.log[x.code] != std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("dlog_table: generator is not primitive");
        t.log[x.code] = static_cast<std::uint32_t>(i);
        x = fs.mul(x, g);
    }
    return t;
}

} // namespace cyclonum

#endif
