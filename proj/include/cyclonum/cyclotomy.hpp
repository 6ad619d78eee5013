#ifndef CYCLONUM_CYCLOTOMY_HPP
#define CYCLONUM_CYCLOTOMY_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "finite_field.hpp"
#include "numeric.hpp"

namespace cyclonum {

// A choice of field F_q together with a nontrivial divisor e of q - 1.
// The index classes are C_a = { g^(a + re) : 0 <= r < k } with k = (q-1)/e
// and g the canonical generator, so membership depends only on a mod e.
struct CyclotomyConfig {
    FieldSpec field;
    u64 e = 0;
    u64 k = 0;
    FieldElement g;
};

inline CyclotomyConfig make_config(u64 p, unsigned n, u64 e) {
    CyclotomyConfig cfg;
    cfg.field = FieldSpec::make(p, n);
    const u64 qm1 = cfg.field.q - 1;
    if (e < 2 || qm1 % e != 0)
        throw std::invalid_argument("make_config: e must be a divisor of q - 1 with e >= 2");
    cfg.e = e;
    cfg.k = qm1 / e;
    if (cfg.k < 2)
        throw std::invalid_argument("make_config: k = (q-1)/e must be at least 2");
    cfg.g = find_primitive(cfg.field);
    return cfg;
}

// Index class of a nonzero x: dlog(x) mod e.
inline u64 class_index(const CyclotomyConfig& cfg, const DlogTable& dlog, FieldElement x) {
    return dlog(x) % cfg.e;
}

// Table-free variant for one-off queries; walks the cyclic group once.
inline u64 class_index(const CyclotomyConfig& cfg, FieldElement x) {
    if (x.code == 0) throw std::invalid_argument("class_index: argument must be nonzero");
    FieldElement y = cfg.field.one();
    for (u64 i = 0; i + 1 < cfg.field.q; ++i) {
        if (y == x) return i % cfg.e;
        y = cfg.field.mul(y, cfg.g);
    }
    throw std::logic_error("class_index: element not reached"); // unreachable
}

struct CyclotomicTable {
    u64 p = 0;
    unsigned n = 1;
    u64 q = 0;
    u64 e = 0;
    u64 k = 0;
    std::vector<std::vector<i64>> counts; // counts[a][b]

    i64 total() const {
        i64 t = 0;
        for (const auto& row : counts) for (i64 c : row) t += c;
        return t;
    }
};

// All e^2 entries in one O(q) sweep: x runs through F_q* as successive
// powers of g, so the class of x is the loop counter mod e and only the
// class of 1 + x needs a table lookup.  The single x with 1 + x = 0 is
// skipped (x = -1 for odd q, x = 1 in characteristic 2).
inline CyclotomicTable compute_table(const CyclotomyConfig& cfg, const DlogTable& dlog) {
    const FieldSpec& F = cfg.field;
    CyclotomicTable t;
    t.p = F.p; t.n = F.n; t.q = F.q; t.e = cfg.e; t.k = cfg.k;
    t.counts.assign(cfg.e, std::vector<i64>(cfg.e, 0));
    const FieldElement one = F.one();
    FieldElement x = one;
    for (u64 i = 0; i + 1 < F.q; ++i) {
        FieldElement y = F.add(one, x);
        if (y.code != 0) {
            u64 a = i % cfg.e;
            u64 b = dlog(y) % cfg.e;
            ++t.counts[a][b];
        }
        x = F.mul(x, cfg.g);
    }
    return t;
}

inline CyclotomicTable compute_table(const CyclotomyConfig& cfg, u64 cap = default_dlog_cap) {
    return compute_table(cfg, dlog_table(cfg.field, cfg.g, cap));
}

// Independent oracle for a single entry: counts solutions of
// 1 + g^(a+re) = g^(b+se) by the literal double loop over (r, s).  Every
// power is built explicitly from g via g^(a+re) = g^a (g^e)^r; no dlog
// table is consulted, so nothing is shared with the sweep above beyond
// the field arithmetic itself.
inline u64 brute_force_entry(const CyclotomyConfig& cfg, u64 a, u64 b) {
    if (a >= cfg.e || b >= cfg.e)
        throw std::invalid_argument("brute_force_entry: class indices must lie in [0, e)");
    const FieldSpec& F = cfg.field;
    const FieldElement ge = F.pow(cfg.g, cfg.e);
    static thread_local std::vector<FieldElement> ys;
    ys.resize(cfg.k);
    ys[0] = F.pow(cfg.g, b);
    for (u64 s = 1; s < cfg.k; ++s) ys[s] = F.mul(ys[s - 1], ge);
    u64 count = 0;
    const FieldElement one = F.one();
    FieldElement x = F.pow(cfg.g, a);
    for (u64 r = 0; r < cfg.k; ++r) {
        const FieldElement lhs = F.add(one, x);
        for (u64 s = 0; s < cfg.k; ++s)
            if (lhs == ys[s]) ++count;
        x = F.mul(x, ge);
    }
    return count;
}

// Exact spread diagnostics: entry extremes and the maximum deviation from
// the heuristic value q / e^2, as a rational number.
struct UniformityStats {
    i64 min = 0;
    i64 max = 0;
    mpq_class max_deviation;
};

inline UniformityStats uniformity_stats(const CyclotomicTable& t) {
    UniformityStats s;
    bool first = true;
    const mpq_class center(mpz_class(t.q), mpz_class(t.e) * t.e);
    for (const auto& row : t.counts) {
        for (i64 c : row) {
            if (first || c < s.min) s.min = c;
            if (first || c > s.max) s.max = c;
            first = false;
            mpq_class dev = mpq_class(c) - center;
            if (dev < 0) dev = -dev;
            if (dev > s.max_deviation) s.max_deviation = dev;
        }
    }
    return s;
}

} // namespace cyclonum

#endif
