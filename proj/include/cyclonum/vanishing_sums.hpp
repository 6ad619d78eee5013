#ifndef CYCLONUM_VANISHING_SUMS_HPP
#define CYCLONUM_VANISHING_SUMS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"

namespace cyclonum {

// Formal sum of m-th roots of unity with rational weights:
//   S = sum_i coeff_i * zeta_m^(exp_i),
// coefficients nonzero, exponents distinct in [0, m).
struct RootTerm {
    mpq_class coeff;
    u64 exp = 0;
};

struct RootSum {
    u64 m = 1;
    std::vector<RootTerm> terms;
};

inline RootSum make_root_sum(u64 m, std::vector<RootTerm> terms) {
    if (m < 1) throw std::invalid_argument("RootSum: order must be positive");
    std::vector<u64> exps;
    exps.reserve(terms.size());
    for (auto& t : terms) {
        t.coeff.canonicalize();
        if (t.coeff == 0) throw std::invalid_argument("RootSum: zero coefficient");
        if (t.exp >= m) throw std::invalid_argument("RootSum: exponent out of range");
        exps.push_back(t.exp);
    }
    std::sort(exps.begin(), exps.end());
    if (std::adjacent_find(exps.begin(), exps.end()) != exps.end())
        throw std::invalid_argument("RootSum: repeated exponent");
    return RootSum{m, std::move(terms)};
}

// S vanishes iff the order-m factor of x^m - 1 divides the integer
// polynomial obtained after clearing denominators.
inline mpz_class common_denominator(const RootSum& s) {
    mpz_class den = 1;
    for (const auto& t : s.terms) {
        mpz_class d = t.coeff.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    return den;
}

inline bool is_vanishing(const RootSum& s) {
    if (s.terms.empty()) return true;
    const mpz_class den = common_denominator(s);
    IntPoly f(s.m, mpz_class(0));
    for (const auto& t : s.terms)
        f[t.exp] = t.coeff.get_num() * (den / t.coeff.get_den());
    return poly_is_zero(poly_mod_monic(f, cyclotomic_poly(s.m)));
}

inline constexpr std::size_t subsum_length_limit = 12;

// Index sets of all nonempty proper subsets whose subsum vanishes, in
// increasing bitmask order.  Each term is first reduced to its coordinate
// vector mod the order-m factor, so a subset test is a vector sum.
inline std::vector<std::vector<std::size_t>> vanishing_subsums(const RootSum& s) {
    const std::size_t l = s.terms.size();
    if (l > subsum_length_limit)
        throw resource_limit_error("vanishing_subsums: length " + std::to_string(l) +
                                   " exceeds the enumeration limit of " +
                                   std::to_string(subsum_length_limit) + " terms");
    std::vector<std::vector<std::size_t>> out;
    if (l < 2) return out;
    const IntPoly phi = cyclotomic_poly(s.m);
    const std::size_t dim = phi.size() - 1;
    const mpz_class den = common_denominator(s);
    std::vector<std::vector<mpz_class>> vec(l, std::vector<mpz_class>(dim, mpz_class(0)));
    for (std::size_t i = 0; i < l; ++i) {
        IntPoly xe(s.terms[i].exp + 1, mpz_class(0));
        xe[s.terms[i].exp] = s.terms[i].coeff.get_num() * (den / s.terms[i].coeff.get_den());
        IntPoly r = poly_mod_monic(xe, phi);
        for (std::size_t j = 0; j < r.size(); ++j) vec[i][j] = r[j];
    }
    const std::size_t full = (std::size_t(1) << l) - 1;
    for (std::size_t mask = 1; mask < full; ++mask) {
        std::vector<mpz_class> acc(dim, mpz_class(0));
        for (std::size_t i = 0; i < l; ++i)
            if (mask & (std::size_t(1) << i))
                for (std::size_t j = 0; j < dim; ++j) acc[j] += vec[i][j];
        bool zero = true;
        for (const auto& v : acc) if (v != 0) { zero = false; break; }
        if (zero) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < l; ++i)
                if (mask & (std::size_t(1) << i)) idx.push_back(i);
            out.push_back(std::move(idx));
        }
    }
    return out;
}

inline bool is_minimal(const RootSum& s) {
    if (!is_vanishing(s))
        throw std::invalid_argument("is_minimal: sum does not vanish");
    return vanishing_subsums(s).empty();
}

inline constexpr u64 similarity_order_limit = 10000;
inline constexpr std::size_t similarity_length_limit = 8;

namespace detail {

// Positive-coefficient normal form over the doubled lattice Z_{2L}: a term
// (c, a) with c < 0 is the same formal term as (-c, a + L), because negating
// both the weight and the root leaves the term unchanged.  After this move
// the remaining freedoms of similarity are exactly one rotation and one
// positive rational scale.
inline std::vector<std::pair<u64, mpq_class>> pos_normal(const RootSum& s, u64 order2) {
    std::vector<std::pair<u64, mpq_class>> out;
    const u64 stretch = order2 / s.m;
    out.reserve(s.terms.size());
    for (const auto& t : s.terms) {
        u64 a = t.exp * stretch;
        mpq_class c = t.coeff;
        if (c < 0) {
            c = -c;
            a = (a + order2 / 2) % order2;
        }
        out.emplace_back(a, c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

// Decides whether s can be written as k * beta * t' with k a nonzero
// rational, beta a root of unity, and t' obtained from t by flipping the
// sign of both the weight and the root in some subset of terms.  In the
// positive normal form this reduces to a rotation search with the scale
// pinned by the smallest coefficients.
inline bool is_similar(const RootSum& s, const RootSum& t) {
    if (s.terms.size() != t.terms.size()) return false;
    if (s.terms.size() > similarity_length_limit)
        throw resource_limit_error("is_similar: length exceeds the limit of " +
                                   std::to_string(similarity_length_limit) + " terms");
    const u64 order = std::lcm(s.m, t.m);
    if (order > similarity_order_limit)
        throw resource_limit_error("is_similar: common root order " + std::to_string(order) +
                                   " exceeds the limit of " +
                                   std::to_string(similarity_order_limit));
    if (s.terms.empty()) return true;
    const u64 order2 = std::lcm(order, u64(2));
    auto sn = detail::pos_normal(s, order2);
    auto tn = detail::pos_normal(t, order2);
    mpq_class mins = sn[0].second, mint = tn[0].second;
    for (const auto& e : sn) if (e.second < mins) mins = e.second;
    for (const auto& e : tn) if (e.second < mint) mint = e.second;
    const mpq_class scale = mins / mint;
    for (auto& e : tn) e.second *= scale;
    std::sort(sn.begin(), sn.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    std::sort(tn.begin(), tn.end(),
              [](const auto& x, const auto& y) { return x.second < y.second; });
    for (std::size_t i = 0; i < sn.size(); ++i)
        if (sn[i].second != tn[i].second) return false;
    std::sort(sn.begin(), sn.end());
    for (u64 rot = 0; rot < order2; ++rot) {
        auto cand = tn;
        for (auto& e : cand) e.first = (e.first + rot) % order2;
        std::sort(cand.begin(), cand.end());
        if (cand == sn) return true;
    }
    return false;
}

enum class SumClass {
    HasPairSubsum,
    HasR3Subsum,
    SimilarR5,
    SimilarR3R5,
    Violation,
};

inline const char* to_string(SumClass c) {
    switch (c) {
        case SumClass::HasPairSubsum: return "has-pair-subsum";
        case SumClass::HasR3Subsum: return "has-R3-subsum";
        case SumClass::SimilarR5: return "similar-R5";
        case SumClass::SimilarR3R5: return "similar-R3R5";
        case SumClass::Violation: return "violation";
    }
    return "?";
}

inline RootSum pair_model_sum() { return make_root_sum(2, {{1, 0}, {1, 1}}); }
inline RootSum r3_model_sum() { return make_root_sum(3, {{1, 0}, {1, 1}, {1, 2}}); }
inline RootSum r5_model_sum() {
    return make_root_sum(5, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}});
}
// -z3 - z3^2 + z5 + z5^2 + z5^3 + z5^4 over the order-15 lattice.
inline RootSum r3r5_model_sum() {
    return make_root_sum(15, {{-1, 5}, {-1, 10}, {1, 3}, {1, 6}, {1, 9}, {1, 12}});
}

namespace detail {

inline RootSum subsum(const RootSum& s, const std::vector<std::size_t>& idx) {
    RootSum out;
    out.m = s.m;
    for (std::size_t i : idx) out.terms.push_back(s.terms[i]);
    return out;
}

} // namespace detail

// Classification of a vanishing sum of length at most 6: first look for a
// two-term subsum similar to 1 + (-1), then a three-term subsum similar to
// the full cube-root sum, then compare the whole sum against the full
// fifth-root sum and the mixed six-term model.  A leftover is a violation
// and fails the suite.
inline SumClass classify_up_to_6(const RootSum& s) {
    if (!is_vanishing(s))
        throw std::invalid_argument("classify_up_to_6: sum does not vanish");
    const std::size_t l = s.terms.size();
    if (l < 1 || l > 6)
        throw std::invalid_argument("classify_up_to_6: length must be in [1, 6]");
    const RootSum pair = pair_model_sum(), r3 = r3_model_sum();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            if (is_similar(detail::subsum(s, {i, j}), pair)) return SumClass::HasPairSubsum;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j)
            for (std::size_t h = j + 1; h < l; ++h)
                if (is_similar(detail::subsum(s, {i, j, h}), r3)) return SumClass::HasR3Subsum;
    if (l == 5 && is_similar(s, r5_model_sum())) return SumClass::SimilarR5;
    if (l == 6 && is_similar(s, r3r5_model_sum())) return SumClass::SimilarR3R5;
    return SumClass::Violation;
}

// True iff the terms can be partitioned into two-term vanishing subsums.
// A two-term vanishing subsum forces equal coefficients and antipodal
// roots, so each term has at most one possible partner and the matching
// is greedy.
inline bool cancels_in_pairs(const RootSum& s) {
    const std::size_t l = s.terms.size();
    if (l % 2 != 0) return false;
    if (l == 0) return true;
    if (s.m % 2 != 0) return false;
    const u64 half = s.m / 2;
    std::vector<bool> used(l, false);
    for (std::size_t i = 0; i < l; ++i) {
        if (used[i]) continue;
        const u64 want = (s.terms[i].exp + half) % s.m;
        bool found = false;
        for (std::size_t j = i + 1; j < l; ++j) {
            if (used[j] || s.terms[j].exp != want) continue;
            if (s.terms[j].coeff == s.terms[i].coeff) {
                used[i] = used[j] = true;
                found = true;
            }
            break;
        }
        if (!found) return false;
    }
    return true;
}

struct SquarefreeReduction {
    u64 rotation = 0; // multiply by zeta_m^rotation
    RootSum reduced;  // rewritten over the radical of m
};

// For a minimal vanishing sum, searches the m rotations for one that moves
// every root into the subgroup of order rad(m) and rewrites the sum there.
// Returns nothing if no rotation works.
inline std::optional<SquarefreeReduction> squarefree_reduce(const RootSum& s) {
    if (s.m > similarity_order_limit)
        throw resource_limit_error("squarefree_reduce: order " + std::to_string(s.m) +
                                   " exceeds the limit of " +
                                   std::to_string(similarity_order_limit));
    if (!is_vanishing(s))
        throw std::invalid_argument("squarefree_reduce: sum does not vanish");
    if (!vanishing_subsums(s).empty())
        throw std::invalid_argument("squarefree_reduce: sum is not minimal");
    const u64 m0 = squarefree_part(s.m);
    const u64 r = s.m / m0;
    for (u64 t = 0; t < s.m; ++t) {
        bool ok = true;
        for (const auto& term : s.terms)
            if ((term.exp + t) % r != 0) { ok = false; break; }
        if (!ok) continue;
        SquarefreeReduction red;
        red.rotation = t;
        std::vector<RootTerm> terms;
        for (const auto& term : s.terms)
            terms.push_back({term.coeff, ((term.exp + t) % s.m) / r});
        red.reduced = make_root_sum(m0, std::move(terms));
        return red;
    }
    return std::nullopt;
}

} // namespace cyclonum

#endif
