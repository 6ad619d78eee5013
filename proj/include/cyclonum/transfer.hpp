#ifndef CYCLONUM_TRANSFER_HPP
#define CYCLONUM_TRANSFER_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>

#include <gmpxx.h>

#include "cyclo_integers.hpp"
#include "cyclotomy.hpp"
#include "numeric.hpp"

namespace cyclonum {

enum class PremiseForm {
    General,         // p^(2 ord) * d^d > k^d * S^d, d = phi(k), S = sum a_i^2
    PrimeZeroSum,    // k prime, sum a_i = 0:  p^ord > k * A^(k-1)
    PrimeNonzeroSum, // k prime, sum a_i != 0: p^ord * |sum a_i| > A^k
};

// The size condition under which a vanishing of f at the order-k element
// of F_q* transfers to a vanishing of f at a complex k-th root of unity.
// All certifying integers are stored so the verdict can be recomputed.
struct TransferPremise {
    PremiseForm form = PremiseForm::General;
    u64 p = 0;
    u64 k = 0;
    u64 ord = 0;              // multiplicative order of p mod k
    mpz_class square_sum;     // S
    mpz_class coeff_sum;      // sum of coefficients
    mpz_class one_sided_max;  // A = max of one-sided coefficient sums
    bool verdict = false;
    // Secondary sufficient form p^(2 ord) > S^k, reported when S >= 3.
    std::optional<bool> verdict_power_form;
};

namespace detail {

inline void premise_sums(const CycInt& f, mpz_class& square_sum, mpz_class& coeff_sum,
                         mpz_class& one_sided_max) {
    mpz_class pos = 0, neg = 0;
    square_sum = 0;
    coeff_sum = 0;
    for (const auto& c : f.coeffs) {
        square_sum += c * c;
        coeff_sum += c;
        if (c > 0) pos += c; else neg -= c;
    }
    one_sided_max = pos >= neg ? pos : neg;
}

} // namespace detail

inline TransferPremise premise_general(u64 p, u64 k, const CycInt& f) {
    if (f.k != k) throw std::invalid_argument("premise_general: order mismatch");
    TransferPremise pr;
    pr.form = PremiseForm::General;
    pr.p = p;
    pr.k = k;
    pr.ord = mult_order(p, k); // throws unless gcd(p, k) = 1
    detail::premise_sums(f, pr.square_sum, pr.coeff_sum, pr.one_sided_max);
    const u64 d = euler_phi(k);
    mpz_class lhs = mpz_pow(p, 2 * pr.ord) * mpz_pow(d, d);
    mpz_class rhs = mpz_pow(k, d) * mpz_pow(pr.square_sum, d);
    pr.verdict = lhs > rhs;
    if (pr.square_sum >= 3)
        pr.verdict_power_form = mpz_pow(p, 2 * pr.ord) > mpz_pow(pr.square_sum, k);
    return pr;
}

inline TransferPremise premise_prime_k(u64 p, u64 k, const CycInt& f) {
    if (f.k != k) throw std::invalid_argument("premise_prime_k: order mismatch");
    if (!is_prime(k)) throw std::invalid_argument("premise_prime_k: k must be prime");
    TransferPremise pr;
    pr.p = p;
    pr.k = k;
    pr.ord = mult_order(p, k);
    detail::premise_sums(f, pr.square_sum, pr.coeff_sum, pr.one_sided_max);
    const mpz_class pord = mpz_pow(p, pr.ord);
    if (pr.coeff_sum == 0) {
        pr.form = PremiseForm::PrimeZeroSum;
        pr.verdict = pord > mpz_class(k) * mpz_pow(pr.one_sided_max, k - 1);
    } else {
        pr.form = PremiseForm::PrimeNonzeroSum;
        pr.verdict = pord * abs(pr.coeff_sum) > mpz_pow(pr.one_sided_max, k);
    }
    return pr;
}

// Evaluates f at the canonical element of multiplicative order k in F_q*
// (namely g^e), by Horner with each coefficient embedded mod p.
inline bool eval_zero_in_fq(const CyclotomyConfig& cfg, const CycInt& f) {
    if (f.k != cfg.k) throw std::invalid_argument("eval_zero_in_fq: order mismatch");
    const FieldSpec& F = cfg.field;
    const FieldElement t = F.pow(cfg.g, cfg.e);
    FieldElement acc = F.zero();
    for (std::size_t i = f.coeffs.size(); i-- > 0;)
        acc = F.add(F.mul(acc, t), F.from_integer(f.coeffs[i]));
    return acc.code == 0;
}

// Exact complex-side test: f vanishes at a primitive k-th root of unity
// iff the order-k factor of x^k - 1 divides f.
inline bool vanishes_at_root(const CycInt& f) {
    return poly_is_zero(
        poly_mod_monic(IntPoly(f.coeffs.begin(), f.coeffs.end()), cyclotomic_poly(f.k)));
}

struct EquivalenceCheck {
    bool fq_zero = false;
    bool c_zero = false;
    TransferPremise premise;
    bool consistent = false; // premise fails, or the two verdicts agree
};

// Both vanishing tests plus the premise.  The direction c_zero => fq_zero
// holds without any premise (the evaluation map factors through the
// order-k relations) and is asserted on every call.
inline EquivalenceCheck check_equivalence(const CyclotomyConfig& cfg, const CycInt& f) {
    EquivalenceCheck out;
    out.fq_zero = eval_zero_in_fq(cfg, f);
    out.c_zero = vanishes_at_root(f);
    out.premise = premise_general(cfg.field.p, cfg.k, f);
    if (out.c_zero && !out.fq_zero)
        throw std::logic_error("check_equivalence: complex vanishing without field vanishing");
    out.consistent = !out.premise.verdict || out.fq_zero == out.c_zero;
    return out;
}

// For f vanishing at g^e, the norm of f must be divisible by p^b with
// b the multiplicative order of p mod k.  This congruence needs no size
// premise at all.
inline bool norm_congruence_check(const CyclotomyConfig& cfg, const CycInt& f) {
    if (!eval_zero_in_fq(cfg, f))
        throw std::invalid_argument("norm_congruence_check: f does not vanish at g^e");
    const u64 b = mult_order(cfg.field.p, cfg.k);
    const mpz_class mod = mpz_pow(cfg.field.p, b);
    const mpz_class n = norm(f);
    return mpz_divisible_p(n.get_mpz_t(), mod.get_mpz_t()) != 0;
}

} // namespace cyclonum

#endif
