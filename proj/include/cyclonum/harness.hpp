#ifndef CYCLONUM_HARNESS_HPP
#define CYCLONUM_HARNESS_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

#include "cyclotomy.hpp"
#include "errors.hpp"
#include "numeric.hpp"

namespace cyclonum {

// ------------------------------------------------------------------------
// Premise predicates.  Every inequality is evaluated cross-multiplied over
// the integers; ord always means the multiplicative order of p mod k.
// ------------------------------------------------------------------------

// p^(2 ord) > 14^k: entries of the whole table are at most 3.
inline bool premise_main1(u64 p, u64 k) {
    const u64 ord = mult_order(p, k);
    return mpz_pow(p, 2 * ord) > mpz_pow(u64(14), k);
}

// k prime, p^ord > 3^(k-1) * k: entries of the whole table are at most 2.
inline bool premise_main2(u64 p, u64 k) {
    if (!is_prime(k)) throw std::invalid_argument("premise_main2: k must be prime");
    const u64 ord = mult_order(p, k);
    return mpz_pow(p, ord) > mpz_pow(u64(3), k - 1) * k;
}

// p^(2 ord) * d^d > (c k)^d with d = phi(k); the per-cell premises use
// c = 3, 4 and 14.
inline bool case_premise(u64 p, u64 k, u64 c) {
    const u64 ord = mult_order(p, k);
    const u64 d = euler_phi(k);
    return mpz_pow(p, 2 * ord) * mpz_pow(d, d) > mpz_pow(c * k, d);
}

// k prime, p^ord > 2^(k-1) * k: first-row entries (0, a) are at most 2.
inline bool prime_row_premise(u64 p, u64 k) {
    if (!is_prime(k)) throw std::invalid_argument("prime_row_premise: k must be prime");
    const u64 ord = mult_order(p, k);
    return mpz_pow(p, ord) > mpz_pow(u64(2), k - 1) * k;
}

// ------------------------------------------------------------------------
// Per-theorem verification records.
// ------------------------------------------------------------------------

struct TheoremWitness {
    u64 a = 0;
    u64 b = 0;
    i64 value = 0;
    i64 expected = 0; // allowed maximum, or the exact predicted value
};

enum class RecordStatus { Pass, Vacuous, Unsupported, Fail };

struct TheoremRecord {
    std::string id;
    bool premise = false;
    bool conclusion_checked = false;
    bool conclusion_holds = true;
    bool unsupported = false;
    std::vector<TheoremWitness> witnesses;

    RecordStatus status() const {
        if (unsupported) return RecordStatus::Unsupported;
        if (!conclusion_checked) return RecordStatus::Vacuous;
        return conclusion_holds ? RecordStatus::Pass : RecordStatus::Fail;
    }
};

inline const char* to_string(RecordStatus s) {
    switch (s) {
        case RecordStatus::Pass: return "pass";
        case RecordStatus::Vacuous: return "vacuous";
        case RecordStatus::Unsupported: return "unsupported";
        case RecordStatus::Fail: return "fail";
    }
    return "?";
}

namespace detail {

inline void check_cell(TheoremRecord& rec, const CyclotomicTable& t, u64 a, u64 b, i64 limit) {
    const i64 v = t.counts[a][b];
    if (v > limit) {
        rec.conclusion_holds = false;
        rec.witnesses.push_back({a, b, v, limit});
    }
}

// Class of the element 2; meaningless in characteristic 2.
inline u64 two_class(const CyclotomyConfig& cfg, const DlogTable& dlog) {
    if (cfg.field.p == 2)
        throw unsupported_case_error("two_class: 2 vanishes in characteristic 2");
    return class_index(cfg, dlog, cfg.field.from_integer(i64(2)));
}

} // namespace detail

// Whole-table bound 3 under the 14^k premise.
inline TheoremRecord verify_main1(const CyclotomyConfig& cfg, const CyclotomicTable& t) {
    TheoremRecord rec;
    rec.id = "all_le3";
    rec.premise = premise_main1(cfg.field.p, cfg.k);
    if (!rec.premise) return rec;
    rec.conclusion_checked = true;
    for (u64 a = 0; a < cfg.e; ++a)
        for (u64 b = 0; b < cfg.e; ++b) detail::check_cell(rec, t, a, b, 3);
    return rec;
}

// Whole-table bound 2 for prime k under the 3^(k-1) k premise.
inline TheoremRecord verify_main2(const CyclotomyConfig& cfg, const CyclotomicTable& t) {
    TheoremRecord rec;
    rec.id = "prime_all_le2";
    rec.premise = premise_main2(cfg.field.p, cfg.k);
    if (!rec.premise) return rec;
    rec.conclusion_checked = true;
    for (u64 a = 0; a < cfg.e; ++a)
        for (u64 b = 0; b < cfg.e; ++b) detail::check_cell(rec, t, a, b, 2);
    return rec;
}

struct Prediction00 {
    bool premise = false;
    i64 value = 0;
};

// Exact value of the (0, 0) entry under the 3k-premise: 0 or 1 when k is
// not divisible by 6 (by whether 2 lies in C_0), 2 or 3 when it is.
inline Prediction00 predicted_00(const CyclotomyConfig& cfg, const DlogTable& dlog) {
    Prediction00 out;
    const u64 two = detail::two_class(cfg, dlog); // throws for p = 2
    out.premise = case_premise(cfg.field.p, cfg.k, 3);
    const bool two_in_c0 = two == 0;
    if (cfg.k % 6 == 0)
        out.value = two_in_c0 ? 3 : 2;
    else
        out.value = two_in_c0 ? 1 : 0;
    return out;
}

inline Prediction00 predicted_00(const CyclotomyConfig& cfg, u64 cap = default_dlog_cap) {
    return predicted_00(cfg, dlog_table(cfg.field, cfg.g, cap));
}

inline TheoremRecord verify_diag00(const CyclotomyConfig& cfg, const CyclotomicTable& t,
                                   const DlogTable& dlog) {
    TheoremRecord rec;
    rec.id = "diag00_exact";
    if (cfg.field.p == 2) {
        rec.unsupported = true;
        return rec;
    }
    const Prediction00 pred = predicted_00(cfg, dlog);
    rec.premise = pred.premise;
    if (!rec.premise) return rec;
    rec.conclusion_checked = true;
    if (t.counts[0][0] != pred.value) {
        rec.conclusion_holds = false;
        rec.witnesses.push_back({0, 0, t.counts[0][0], pred.value});
    }
    return rec;
}

// The four per-cell bounds under the 4k- and 14k-premises: first row,
// first column, diagonal, and the off cells (a, b) with distinct nonzero
// a, b.  First-row bounds select 3 or 2 by whether 2 lies in C_a, so that
// record is unsupported in characteristic 2; the column and diagonal
// bounds consult the class of 2 only for even k, which forces p odd.
// The diagonal cell (a, a) equals the first-column cell (e - a, 0), so its
// slack case sits at the mirrored index: limit 3 when 2 lies in C_{e-a}.
inline std::vector<TheoremRecord> verify_case_theorems(const CyclotomyConfig& cfg,
                                                       const CyclotomicTable& t,
                                                       const DlogTable& dlog) {
    const u64 e = cfg.e;
    const bool p2 = cfg.field.p == 2;
    std::vector<TheoremRecord> recs;

    const std::optional<u64> cls2 =
        p2 ? std::nullopt : std::optional<u64>(detail::two_class(cfg, dlog));

    TheoremRecord row;
    row.id = "row0_bound";
    if (p2) {
        row.unsupported = true;
    } else {
        row.premise = case_premise(cfg.field.p, cfg.k, 4);
        if (row.premise) {
            row.conclusion_checked = true;
            for (u64 a = 1; a < e; ++a)
                detail::check_cell(row, t, 0, a, cls2 == a ? 3 : 2);
        }
    }
    recs.push_back(std::move(row));

    const bool even_k = cfg.k % 2 == 0; // even k forces p odd, so cls2 is set
    for (int which = 0; which < 2; ++which) {
        TheoremRecord rec;
        rec.id = which == 0 ? "col0_bound" : "diag_bound";
        rec.premise = case_premise(cfg.field.p, cfg.k, 4);
        if (rec.premise) {
            rec.conclusion_checked = true;
            for (u64 a = 1; a < e; ++a) {
                const u64 slack_class = which == 0 ? a : e - a;
                i64 limit = 2;
                if (even_k && cls2 == slack_class) limit = 3;
                detail::check_cell(rec, t, a, which == 0 ? 0 : a, limit);
            }
        }
        recs.push_back(std::move(rec));
    }

    TheoremRecord mixed;
    mixed.id = "mixed_le2";
    mixed.premise = case_premise(cfg.field.p, cfg.k, 14);
    if (mixed.premise) {
        mixed.conclusion_checked = true;
        for (u64 a = 1; a < e; ++a)
            for (u64 b = 1; b < e; ++b)
                if (a != b) detail::check_cell(mixed, t, a, b, 2);
    }
    recs.push_back(std::move(mixed));
    return recs;
}

// Sharper prime-k variants: exact (0, 0) under the 3k-premise, bound 2 on
// the first column and diagonal under the 4k-premise, bound 2 on the first
// row under the 2^(k-1) k premise, and bound 2 off the axes under the
// 3^(k-1) k premise.
inline std::vector<TheoremRecord> verify_prime_k_theorems(const CyclotomyConfig& cfg,
                                                          const CyclotomicTable& t,
                                                          const DlogTable& dlog) {
    if (!is_prime(cfg.k))
        throw std::invalid_argument("verify_prime_k_theorems: k must be prime");
    const u64 e = cfg.e;
    const bool p2 = cfg.field.p == 2;
    std::vector<TheoremRecord> recs;

    TheoremRecord c00;
    c00.id = "prime_00_exact";
    if (p2) {
        c00.unsupported = true;
    } else {
        c00.premise = case_premise(cfg.field.p, cfg.k, 3);
        if (c00.premise) {
            c00.conclusion_checked = true;
            const i64 expected = detail::two_class(cfg, dlog) == 0 ? 1 : 0;
            if (t.counts[0][0] != expected) {
                c00.conclusion_holds = false;
                c00.witnesses.push_back({0, 0, t.counts[0][0], expected});
            }
        }
    }
    recs.push_back(std::move(c00));

    TheoremRecord cd;
    cd.id = "prime_col0_diag_le2";
    cd.premise = case_premise(cfg.field.p, cfg.k, 4);
    if (cd.premise) {
        cd.conclusion_checked = true;
        for (u64 a = 1; a < e; ++a) {
            detail::check_cell(cd, t, a, 0, 2);
            detail::check_cell(cd, t, a, a, 2);
        }
    }
    recs.push_back(std::move(cd));

    TheoremRecord r0;
    r0.id = "prime_row0_le2";
    r0.premise = prime_row_premise(cfg.field.p, cfg.k);
    if (r0.premise) {
        r0.conclusion_checked = true;
        for (u64 a = 1; a < e; ++a) detail::check_cell(r0, t, 0, a, 2);
    }
    recs.push_back(std::move(r0));

    TheoremRecord mx;
    mx.id = "prime_mixed_le2";
    mx.premise = premise_main2(cfg.field.p, cfg.k);
    if (mx.premise) {
        mx.conclusion_checked = true;
        for (u64 a = 1; a < e; ++a)
            for (u64 b = 1; b < e; ++b)
                if (a != b) detail::check_cell(mx, t, a, b, 2);
    }
    recs.push_back(std::move(mx));
    return recs;
}

// ------------------------------------------------------------------------
// Whole-config report and the grid sweep.
// ------------------------------------------------------------------------

struct VerificationReport {
    u64 p = 0;
    unsigned n = 1;
    u64 q = 0;
    u64 e = 0;
    u64 k = 0;
    std::vector<TheoremRecord> records;
    UniformityStats stats;
    double ms = 0.0;

    bool all_ok() const {
        for (const auto& r : records)
            if (r.status() == RecordStatus::Fail) return false;
        return true;
    }
};

inline VerificationReport verify_config(const CyclotomyConfig& cfg, u64 cap = default_dlog_cap) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.p = cfg.field.p;
    rep.n = cfg.field.n;
    rep.q = cfg.field.q;
    rep.e = cfg.e;
    rep.k = cfg.k;
    const DlogTable dlog = dlog_table(cfg.field, cfg.g, cap);
    const CyclotomicTable table = compute_table(cfg, dlog);
    rep.records.push_back(verify_main1(cfg, table));
    if (is_prime(cfg.k)) rep.records.push_back(verify_main2(cfg, table));
    rep.records.push_back(verify_diag00(cfg, table, dlog));
    for (auto& r : verify_case_theorems(cfg, table, dlog)) rep.records.push_back(std::move(r));
    if (is_prime(cfg.k))
        for (auto& r : verify_prime_k_theorems(cfg, table, dlog))
            rep.records.push_back(std::move(r));
    rep.stats = uniformity_stats(table);
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                 .count();
    return rep;
}

struct GridBounds {
    u64 q_max = 0;
    u64 k_max = ~u64(0);
    u64 p_max = ~u64(0);
};

struct ConfigKey {
    u64 p = 0;
    unsigned n = 1;
    u64 q = 0;
    u64 e = 0;
    u64 k = 0;
};

// Every admissible (p, n, e, k) with q = p^n <= q_max, ordered by q then e.
inline std::vector<ConfigKey> admissible_configs(const GridBounds& b) {
    std::vector<ConfigKey> out;
    for (u64 q = 4; q <= b.q_max; ++q) {
        const auto fs = factorize(q);
        const u64 p = fs.front();
        bool prime_power = true;
        for (u64 f : fs)
            if (f != p) { prime_power = false; break; }
        if (!prime_power || p > b.p_max) continue;
        for (u64 e = 2; e * 2 <= q - 1; ++e) {
            if ((q - 1) % e != 0) continue;
            const u64 k = (q - 1) / e;
            if (k < 2 || k > b.k_max) continue;
            out.push_back({p, static_cast<unsigned>(fs.size()), q, e, k});
        }
    }
    return out;
}

// Runs verify_config over the whole grid, handing each report to the sink
// in enumeration order.  Returns false (stopping the sweep) as soon as a
// report carries a failed record.  jobs > 1 parallelizes the computation
// but never the emission order.
inline bool grid_search(const GridBounds& bounds,
                        const std::function<void(const VerificationReport&)>& sink,
                        unsigned jobs = 1, u64 cap = default_dlog_cap) {
    if (bounds.q_max > cap)
        throw resource_limit_error("grid_search: q_max = " + std::to_string(bounds.q_max) +
                                   " exceeds the table memory cap of " + std::to_string(cap) +
                                   " entries");
    const std::vector<ConfigKey> keys = admissible_configs(bounds);
    auto run_one = [&](const ConfigKey& key) {
        return verify_config(make_config(key.p, key.n, key.e), cap);
    };
    if (jobs <= 1) {
        for (const auto& key : keys) {
            VerificationReport rep = run_one(key);
            sink(rep);
            if (!rep.all_ok()) return false;
        }
        return true;
    }
    std::vector<std::optional<VerificationReport>> slots(keys.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    const unsigned width = std::min<std::size_t>(jobs, keys.size());
    pool.reserve(width);
    for (unsigned w = 0; w < width; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < keys.size(); i = next.fetch_add(1))
                slots[i] = run_one(keys[i]);
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& slot : slots) {
        sink(*slot);
        if (!slot->all_ok()) return false;
    }
    return true;
}

// ------------------------------------------------------------------------
// Fermat-style check: for prime p = ek + 1 with p^2 > 3^k and 2 not an
// e-th power mod p, no x^e + y^e with x, y nonzero mod p lands on a
// nonzero e-th power.
// ------------------------------------------------------------------------

enum class FermatMode { Exhaustive, Sampled };

enum class FermatOutcome { PremiseFailed, TwoIsPower, Verified, Counterexample };

struct FermatReport {
    u64 p = 0;
    u64 e = 0;
    u64 k = 0;
    bool premise = false;
    bool two_is_power = false;
    FermatMode mode = FermatMode::Exhaustive;
    u64 pairs_checked = 0;
    u64 violation_count = 0;
    std::vector<std::pair<u64, u64>> violations; // first few only
    FermatOutcome outcome = FermatOutcome::PremiseFailed;
};

inline FermatReport fermat_check(u64 p, u64 e, FermatMode mode = FermatMode::Exhaustive,
                                 u64 samples = 100000) {
    if (!is_prime(p)) throw std::invalid_argument("fermat_check: p must be prime");
    if (e < 2 || (p - 1) % e != 0 || (p - 1) / e < 2)
        throw std::invalid_argument("fermat_check: need p = ek + 1 with e, k >= 2");
    FermatReport rep;
    rep.p = p;
    rep.e = e;
    rep.k = (p - 1) / e;
    rep.mode = mode;
    rep.premise = mpz_class(p) * p > mpz_pow(u64(3), rep.k);
    rep.two_is_power = powmod_u64(2, rep.k, p) == 1;
    if (!rep.premise) {
        rep.outcome = FermatOutcome::PremiseFailed;
        return rep;
    }
    if (rep.two_is_power) {
        rep.outcome = FermatOutcome::TwoIsPower;
        return rep;
    }
    std::vector<u64> powe(p, 0);
    std::vector<bool> is_res(p, false);
    for (u64 x = 1; x < p; ++x) {
        powe[x] = powmod_u64(x, e, p);
        is_res[powe[x]] = true;
    }
    auto probe = [&](u64 x, u64 y) {
        u64 s = powe[x] + powe[y];
        if (s >= p) s -= p;
        if (s != 0 && is_res[s]) {
            ++rep.violation_count;
            if (rep.violations.size() < 16) rep.violations.emplace_back(x, y);
        }
    };
    if (mode == FermatMode::Exhaustive) {
        for (u64 x = 1; x < p; ++x)
            for (u64 y = 1; y < p; ++y) probe(x, y);
        rep.pairs_checked = (p - 1) * (p - 1);
    } else {
        std::mt19937_64 rng(0x1d0c5eedULL);
        std::uniform_int_distribution<u64> pick(1, p - 1);
        for (u64 i = 0; i < samples; ++i) probe(pick(rng), pick(rng));
        rep.pairs_checked = samples;
    }
    rep.outcome =
        rep.violation_count == 0 ? FermatOutcome::Verified : FermatOutcome::Counterexample;
    return rep;
}

} // namespace cyclonum

#endif
