#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <mpfr.h>

#include <cyclonum/vanishing_sums.hpp>

using namespace cyclonum;

namespace {

// Numeric oracle: evaluate the sum at 512-bit precision.  A nonzero sum of
// at most 8 roots with numerators up to 3 and denominators up to 3 clears
// to an algebraic integer with conjugates bounded by 144, so its absolute
// value is at least 144^-57 / 6 for m <= 60.  The 1e-130 threshold sits
// far below that and far above the accumulated rounding error.
bool numeric_vanishes(const RootSum& s) {
    const mpfr_prec_t prec = 512;
    mpfr_t re, im, pi, angle, c, t, thresh;
    mpfr_inits2(prec, re, im, pi, angle, c, t, thresh, (mpfr_ptr)nullptr);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    mpfr_const_pi(pi, MPFR_RNDN);
    for (const auto& term : s.terms) {
        mpfr_mul_ui(angle, pi, 2 * term.exp, MPFR_RNDN);
        mpfr_div_ui(angle, angle, s.m, MPFR_RNDN);
        mpfr_set_q(c, term.coeff.get_mpq_t(), MPFR_RNDN);
        mpfr_cos(t, angle, MPFR_RNDN);
        mpfr_mul(t, t, c, MPFR_RNDN);
        mpfr_add(re, re, t, MPFR_RNDN);
        mpfr_sin(t, angle, MPFR_RNDN);
        mpfr_mul(t, t, c, MPFR_RNDN);
        mpfr_add(im, im, t, MPFR_RNDN);
    }
    mpfr_set_str(thresh, "1e-130", 10, MPFR_RNDN);
    const bool van = mpfr_cmpabs(re, thresh) < 0 && mpfr_cmpabs(im, thresh) < 0;
    mpfr_clears(re, im, pi, angle, c, t, thresh, (mpfr_ptr)nullptr);
    return van;
}

mpq_class random_coeff(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 6) - 3;
    if (num >= 0) ++num; // skip zero
    const long den = static_cast<long>(rng() % 3) + 1;
    mpq_class c(num, den);
    c.canonicalize();
    return c;
}

// c * zeta_m^a * (full sum of p-th roots), a guaranteed vanishing block.
std::vector<RootTerm> vanishing_block(u64 m, u64 p, u64 a, const mpq_class& c) {
    std::vector<RootTerm> out;
    for (u64 j = 0; j < p; ++j) out.push_back({c, (a + j * (m / p)) % m});
    return out;
}

} // namespace

TEST_CASE("root sum construction") {
    CHECK_THROWS_AS(make_root_sum(0, {{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_root_sum(4, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make_root_sum(4, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_root_sum(4, {{1, 2}, {2, 2}}), std::invalid_argument);

    const RootSum s = make_root_sum(6, {{1, 5}, {1, 2}});
    CHECK(s.terms[0].exp == 5); // insertion order is preserved
    CHECK(s.terms[1].exp == 2);

    RootSum r = make_root_sum(2, std::vector<RootTerm>{{mpq_class(2, 4), 0}});
    CHECK(r.terms[0].coeff == mpq_class(1, 2));
}

TEST_CASE("is_vanishing on known sums") {
    CHECK(is_vanishing(RootSum{1, {}}));
    CHECK(is_vanishing(pair_model_sum()));
    CHECK(is_vanishing(r3_model_sum()));
    CHECK(is_vanishing(r5_model_sum()));
    CHECK(is_vanishing(r3r5_model_sum()));
    CHECK_FALSE(is_vanishing(make_root_sum(3, {{1, 0}, {1, 1}})));
    CHECK_FALSE(is_vanishing(make_root_sum(4, {{1, 0}, {1, 1}})));
    CHECK(is_vanishing(make_root_sum(4, {{2, 0}, {2, 2}})));
    CHECK(is_vanishing(make_root_sum(4, {{1, 1}, {1, 3}})));

    // full m-th root sums
    for (u64 m = 2; m <= 12; ++m) {
        std::vector<RootTerm> terms;
        for (u64 e = 0; e < m; ++e) terms.push_back({1, e});
        CHECK(is_vanishing(make_root_sum(m, terms)));
    }

    // rational weights
    RootSum half = make_root_sum(2, std::vector<RootTerm>{{mpq_class(1, 2), 0}, {mpq_class(1, 2), 1}});
    CHECK(is_vanishing(half));
    RootSum uneven = make_root_sum(2, std::vector<RootTerm>{{mpq_class(1, 2), 0}, {mpq_class(1), 1}});
    CHECK_FALSE(is_vanishing(uneven));

    // flipping one sign of the six-term model breaks it
    RootSum broken = make_root_sum(15, {{-1, 5}, {1, 10}, {1, 3}, {1, 6}, {1, 9}, {1, 12}});
    CHECK_FALSE(is_vanishing(broken));
}

TEST_CASE("is_vanishing against the numeric oracle") {
    std::mt19937_64 rng(41);
    int vanished = 0;
    const int total = 12000;
    for (int iter = 0; iter < total; ++iter) {
        RootSum s;
        if (iter % 10 == 0) {
            const u64 ms[] = {4, 6, 8, 9, 10, 12, 15, 18, 20, 24, 30, 36, 40, 45, 60};
            const u64 m = ms[rng() % 15];
            const auto primes = distinct_prime_factors(m);
            const u64 p = primes[rng() % primes.size()];
            auto terms = vanishing_block(m, p, rng() % m, random_coeff(rng));
            // sometimes stack a second block when the supports stay disjoint
            if (rng() % 2 == 0) {
                const u64 p2 = primes[rng() % primes.size()];
                auto extra = vanishing_block(m, p2, rng() % m, random_coeff(rng));
                bool clash = false;
                for (const auto& a : extra)
                    for (const auto& b : terms)
                        if (a.exp == b.exp) clash = true;
                if (!clash) terms.insert(terms.end(), extra.begin(), extra.end());
            }
            s = make_root_sum(m, std::move(terms));
        } else {
            const u64 m = 2 + rng() % 59;
            std::size_t l = 1 + rng() % 8;
            if (l > m) l = m;
            std::vector<u64> exps(m);
            for (u64 e = 0; e < m; ++e) exps[e] = e;
            std::shuffle(exps.begin(), exps.end(), rng);
            std::vector<RootTerm> terms;
            for (std::size_t i = 0; i < l; ++i) terms.push_back({random_coeff(rng), exps[i]});
            s = make_root_sum(m, std::move(terms));
        }
        const bool v = is_vanishing(s);
        CHECK(v == numeric_vanishes(s));
        if (v) ++vanished;
    }
    CHECK(vanished >= total / 10); // the injected blocks all vanish
    CHECK(vanished < total / 2);
}

TEST_CASE("vanishing_subsums") {
    const RootSum s = make_root_sum(6, {{1, 0}, {1, 3}, {1, 2}, {1, 5}});
    const auto subs = vanishing_subsums(s);
    REQUIRE(subs.size() == 2);
    CHECK(subs[0] == std::vector<std::size_t>{0, 1});
    CHECK(subs[1] == std::vector<std::size_t>{2, 3});

    CHECK(vanishing_subsums(r5_model_sum()).empty());
    CHECK(vanishing_subsums(make_root_sum(5, {{1, 0}})).empty());

    std::vector<RootTerm> big;
    for (u64 e = 0; e < 13; ++e) big.push_back({1, e});
    CHECK_THROWS_AS(vanishing_subsums(make_root_sum(13, big)), resource_limit_error);
}

TEST_CASE("is_minimal") {
    CHECK(is_minimal(pair_model_sum()));
    CHECK(is_minimal(r3_model_sum()));
    CHECK(is_minimal(r5_model_sum()));
    CHECK(is_minimal(r3r5_model_sum()));
    CHECK_FALSE(is_minimal(make_root_sum(6, {{1, 0}, {1, 3}, {1, 2}, {1, 5}})));
    CHECK_THROWS_AS(is_minimal(make_root_sum(3, {{1, 0}, {1, 1}})), std::invalid_argument);
}

TEST_CASE("is_similar") {
    const RootSum r5 = r5_model_sum();
    CHECK(is_similar(r5, r5));

    // rotation by a fifth root
    CHECK(is_similar(r5, make_root_sum(5, {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 0}})));
    // positive scale
    CHECK(is_similar(r5, make_root_sum(5, {{3, 0}, {3, 1}, {3, 2}, {3, 3}, {3, 4}})));
    // global negation
    CHECK(is_similar(r5, make_root_sum(5, {{-1, 0}, {-1, 1}, {-1, 2}, {-1, 3}, {-1, 4}})));
    // rational scale
    RootSum scaled;
    scaled.m = 5;
    for (u64 e = 0; e < 5; ++e) scaled.terms.push_back({mpq_class(2, 3), e});
    CHECK(is_similar(r5, scaled));
    // per-term flip of both weight and root: -zeta_10^9 = zeta_10^4
    const RootSum flipped =
        make_root_sum(10, {{1, 0}, {1, 2}, {-1, 9}, {1, 6}, {1, 8}});
    CHECK(is_vanishing(flipped));
    CHECK(is_similar(flipped, r5));
    // same order written over a larger lattice
    CHECK(is_similar(r5, make_root_sum(10, {{1, 0}, {1, 2}, {1, 4}, {1, 6}, {1, 8}})));

    CHECK_FALSE(is_similar(r5, r3_model_sum()));
    CHECK_FALSE(is_similar(pair_model_sum(), make_root_sum(2, {{1, 0}, {2, 1}})));
    CHECK_FALSE(is_similar(make_root_sum(5, {{1, 0}, {1, 1}}),
                           make_root_sum(5, {{1, 0}, {1, 2}})));

    // single terms are always similar
    CHECK(is_similar(make_root_sum(7, {{1, 3}}), make_root_sum(4, {{-5, 2}})));
    CHECK(is_similar(RootSum{1, {}}, RootSum{3, {}}));

    CHECK_THROWS_AS(is_similar(make_root_sum(10007, {{1, 0}}), make_root_sum(10007, {{1, 1}})),
                    resource_limit_error);
    std::vector<RootTerm> nine;
    for (u64 e = 0; e < 9; ++e) nine.push_back({1, e * 2});
    CHECK_THROWS_AS(is_similar(make_root_sum(20, nine), make_root_sum(20, nine)),
                    resource_limit_error);
}

TEST_CASE("classify_up_to_6") {
    CHECK(classify_up_to_6(pair_model_sum()) == SumClass::HasPairSubsum);
    CHECK(classify_up_to_6(make_root_sum(12, {{2, 3}, {2, 9}})) == SumClass::HasPairSubsum);
    CHECK(classify_up_to_6(r3_model_sum()) == SumClass::HasR3Subsum);
    CHECK(classify_up_to_6(make_root_sum(12, {{5, 1}, {5, 5}, {5, 9}})) == SumClass::HasR3Subsum);
    // two disjoint pairs
    CHECK(classify_up_to_6(make_root_sum(12, {{1, 0}, {1, 6}, {1, 1}, {1, 7}})) ==
          SumClass::HasPairSubsum);
    // three-root block next to a pair: the pair wins
    CHECK(classify_up_to_6(make_root_sum(12, {{1, 0}, {1, 4}, {1, 8}, {2, 1}, {2, 7}})) ==
          SumClass::HasPairSubsum);
    CHECK(classify_up_to_6(r5_model_sum()) == SumClass::SimilarR5);
    CHECK(classify_up_to_6(make_root_sum(10, {{1, 0}, {1, 2}, {-1, 9}, {1, 6}, {1, 8}})) ==
          SumClass::SimilarR5);
    CHECK(classify_up_to_6(r3r5_model_sum()) == SumClass::SimilarR3R5);
    CHECK(classify_up_to_6(make_root_sum(
              30, {{1, 5}, {1, 6}, {1, 12}, {1, 18}, {1, 24}, {1, 25}})) ==
          SumClass::SimilarR3R5);

    CHECK_THROWS_AS(classify_up_to_6(make_root_sum(3, {{1, 0}, {1, 1}})), std::invalid_argument);
    std::vector<RootTerm> seven;
    for (u64 e = 0; e < 7; ++e) seven.push_back({1, e});
    CHECK_THROWS_AS(classify_up_to_6(make_root_sum(7, seven)), std::invalid_argument);

    CHECK(std::string(to_string(SumClass::Violation)) == "violation");
    CHECK(std::string(to_string(SumClass::SimilarR3R5)) == "similar-R3R5");
}

TEST_CASE("cancels_in_pairs") {
    CHECK(cancels_in_pairs(pair_model_sum()));
    CHECK(cancels_in_pairs(make_root_sum(6, {{1, 0}, {1, 3}, {1, 1}, {1, 4}})));
    CHECK(cancels_in_pairs(make_root_sum(12, {{1, 0}, {2, 3}, {1, 6}, {2, 9}})));
    CHECK_FALSE(cancels_in_pairs(r3_model_sum()));
    CHECK_FALSE(cancels_in_pairs(r5_model_sum()));
    CHECK_FALSE(cancels_in_pairs(make_root_sum(3, {{1, 0}, {1, 1}})));
    CHECK_FALSE(cancels_in_pairs(make_root_sum(12, {{1, 0}, {2, 6}})));
    CHECK(cancels_in_pairs(RootSum{2, {}}));
}

TEST_CASE("squarefree_reduce") {
    const RootSum s = make_root_sum(4, {{1, 1}, {1, 3}});
    const auto red = squarefree_reduce(s);
    REQUIRE(red.has_value());
    CHECK(red->rotation == 1);
    CHECK(red->reduced.m == 2);
    REQUIRE(red->reduced.terms.size() == 2);
    CHECK(red->reduced.terms[0].exp == 1);
    CHECK(red->reduced.terms[1].exp == 0);
    CHECK(is_vanishing(red->reduced));

    // already squarefree: the identity rotation works
    const auto triv = squarefree_reduce(r3r5_model_sum());
    REQUIRE(triv.has_value());
    CHECK(triv->rotation == 0);
    CHECK(triv->reduced.m == 15);

    // scaled cube-root sum pushed into order 12
    const auto lifted = squarefree_reduce(make_root_sum(12, {{2, 1}, {2, 5}, {2, 9}}));
    REQUIRE(lifted.has_value());
    CHECK(lifted->rotation == 1);
    CHECK(lifted->reduced.m == 6);
    CHECK(is_vanishing(lifted->reduced));
    CHECK(is_minimal(lifted->reduced));

    CHECK_THROWS_AS(squarefree_reduce(make_root_sum(3, {{1, 0}, {1, 1}})), std::invalid_argument);
    CHECK_THROWS_AS(squarefree_reduce(make_root_sum(6, {{1, 0}, {1, 3}, {1, 2}, {1, 5}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(squarefree_reduce(make_root_sum(20000, {{1, 0}})), resource_limit_error);
}
