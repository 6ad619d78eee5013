#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cyclonum/cyclo_integers.hpp>

using namespace cyclonum;

namespace {

// Independent norm oracle: determinant of the multiplication-by-f map on
// the power basis of Z[x]/(order-k factor).
mpz_class norm_oracle(const CycInt& f) {
    const IntPoly phi = cyclotomic_poly(f.k);
    const std::size_t d = phi.size() - 1;
    const IntPoly fb = poly_mod_monic(IntPoly(f.coeffs.begin(), f.coeffs.end()), phi);
    IntMatrix M(d);
    for (std::size_t j = 0; j < d; ++j) {
        IntPoly xj(j + 1, mpz_class(0));
        xj[j] = 1;
        const IntPoly col = poly_mod_monic(poly_mul(fb, xj), phi);
        for (std::size_t i = 0; i < col.size(); ++i) M.at(i, j) = col[i];
    }
    return det_exact(M);
}

// Cofactor expansion, the textbook O(n!) determinant.
mpz_class det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.dim;
    if (n == 1) return m.at(0, 0);
    mpz_class acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m.at(0, c) == 0) continue;
        IntMatrix sub(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                sub.at(i - 1, jj++) = m.at(i, j);
            }
        }
        mpz_class term = m.at(0, c) * det_cofactor(sub);
        if (c % 2 == 0) acc += term; else acc -= term;
    }
    return acc;
}

CycInt random_cycint(u64 k, int lo, int hi, std::mt19937_64& rng) {
    std::vector<i64> c(k);
    for (auto& v : c) v = lo + static_cast<i64>(rng() % (hi - lo + 1));
    return make_cycint(k, c);
}

} // namespace

TEST_CASE("CycInt validation") {
    CHECK_THROWS_AS(make_cycint(1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(make_cycint(3, {1, 2}), std::invalid_argument);
    CHECK_NOTHROW(make_cycint(2, {0, 0}));
}

TEST_CASE("hand-checked norms") {
    CHECK(norm(make_cycint(3, {1, -1, 0})) == 3);
    CHECK(norm(make_cycint(3, {1, 1, 0})) == 1);
    CHECK(norm(make_cycint(3, {1, -1, 2})) == 7);
    CHECK(norm(make_cycint(2, {1, -1})) == 2);
    CHECK(norm(make_cycint(2, {3, 5})) == -2);
    CHECK(norm(make_cycint(4, {1, 1, 0, 0})) == 2);
    CHECK(norm(make_cycint(6, {1, 1, 0, 0, 0, 0})) == 3);
    CHECK(norm(make_cycint(12, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})) == 1);
    CHECK(norm(make_cycint(5, {0, 0, 0, 0, 0})) == 0);
    CHECK(norm(make_cycint(3, {7, 0, 0})) == 49); // constants: c^phi(k)
}

TEST_CASE("norm of 1 - x and 1 + x via cyclotomic evaluations") {
    for (u64 k = 2; k <= 20; ++k) {
        std::vector<i64> minus(k, 0), plus(k, 0);
        minus[0] = 1; minus[1] = -1;
        plus[0] = 1; plus[1] = 1;
        const IntPoly phi = cyclotomic_poly(k);
        CHECK(norm(make_cycint(k, minus)) == poly_eval(phi, mpz_class(1)));
        CHECK(norm(make_cycint(k, plus)) == poly_eval(phi, mpz_class(-1)));
    }
}

TEST_CASE("norm agrees with the multiplication-matrix oracle") {
    std::mt19937_64 rng(31);
    for (u64 k = 2; k <= 13; ++k)
        for (int i = 0; i < 200; ++i) {
            const CycInt f = random_cycint(k, -4, 4, rng);
            CHECK(norm(f) == norm_oracle(f));
        }
    // larger coefficients force several CRT primes
    for (int i = 0; i < 50; ++i) {
        CycInt f = random_cycint(11, -1000000, 1000000, rng);
        CHECK(norm(f) == norm_oracle(f));
    }
}

TEST_CASE("norm is multiplicative modulo the order-k factor") {
    // (1 - x)(1 - x^2) reduces to the constant 3 for k = 3
    const CycInt prod = mul_mod_phi(make_cycint(3, {1, -1, 0}), make_cycint(3, {1, 0, -1}));
    CHECK(prod.coeffs == std::vector<mpz_class>{3, 0, 0});
    CHECK(norm(prod) == 9);

    std::mt19937_64 rng(32);
    for (u64 k : {2, 3, 5, 7, 11}) {
        for (int i = 0; i < 100; ++i) {
            const CycInt f = random_cycint(k, -3, 3, rng);
            const CycInt g = random_cycint(k, -3, 3, rng);
            CHECK(norm(mul_mod_phi(f, g)) == norm(f) * norm(g));
        }
    }
    CHECK_THROWS_AS(mul_mod_phi(make_cycint(3, {1, 0, 0}), make_cycint(4, {1, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("circulant layout") {
    const IntMatrix m = circulant(make_cycint(3, {1, 1, 0}));
    CHECK(m.at(0, 0) == 1); CHECK(m.at(0, 1) == 1); CHECK(m.at(0, 2) == 0);
    CHECK(m.at(1, 0) == 0); CHECK(m.at(1, 1) == 1); CHECK(m.at(1, 2) == 1);
    CHECK(m.at(2, 0) == 1); CHECK(m.at(2, 1) == 0); CHECK(m.at(2, 2) == 1);
    CHECK(det_exact(m) == 2);
    CHECK_THROWS_AS(circulant(std::vector<mpz_class>{}), std::invalid_argument);
}

TEST_CASE("det_exact against cofactor expansion") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = rng() % 5 + 1;
        IntMatrix m(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m.at(r, c) = static_cast<long>(rng() % 21) - 10;
        CHECK(det_exact(m) == det_cofactor(m));
    }
    // permutation matrix with odd sign
    IntMatrix p(3);
    p.at(0, 1) = 1; p.at(1, 0) = 1; p.at(2, 2) = 1;
    CHECK(det_exact(p) == -1);
    // singular
    IntMatrix s(3);
    for (std::size_t c = 0; c < 3; ++c) { s.at(0, c) = 1; s.at(1, c) = 1; }
    s.at(2, 0) = 4; s.at(2, 1) = 5; s.at(2, 2) = 6;
    CHECK(det_exact(s) == 0);
}

TEST_CASE("norm_via_circulant matches norm on prime orders") {
    std::mt19937_64 rng(34);
    for (u64 k : {2, 3, 5, 7, 11, 13}) {
        for (int i = 0; i < 100; ++i) {
            const CycInt f = random_cycint(k, -3, 3, rng);
            CHECK(norm_via_circulant(f) == norm(f));
        }
        // forced zero-sum vectors exercise the minor branch
        for (int i = 0; i < 50; ++i) {
            std::vector<i64> c(k);
            i64 sum = 0;
            for (std::size_t j = 0; j + 1 < k; ++j) {
                c[j] = static_cast<i64>(rng() % 7) - 3;
                sum += c[j];
            }
            c[k - 1] = -sum;
            const CycInt f = make_cycint(k, c);
            CHECK(norm_via_circulant(f) == norm(f));
        }
    }
    CHECK_THROWS_AS(norm_via_circulant(make_cycint(4, {1, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("schinzel_bound") {
    IntMatrix m(2);
    m.at(0, 0) = 1; m.at(0, 1) = -1;
    m.at(1, 0) = 2; m.at(1, 1) = 1;
    CHECK(schinzel_bound(m) == 3);
    CHECK(det_exact(m) == 3); // the bound is tight here

    std::mt19937_64 rng(35);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = rng() % 6 + 1;
        IntMatrix a(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                a.at(r, c) = static_cast<long>(rng() % 19) - 9;
        CHECK(abs(det_exact(a)) <= schinzel_bound(a));
    }
}

TEST_CASE("general norm bound, exact comparisons") {
    const auto tight = norm_bound_general(make_cycint(3, {1, -1, 0}));
    CHECK(tight.norm_value == 3);
    CHECK(tight.square_sum == 2);
    CHECK(tight.lhs == 36);
    CHECK(tight.rhs == 36);
    CHECK(tight.holds);
    CHECK_FALSE(tight.holds_power_form.has_value()); // S < 3

    const auto g = norm_bound_general(make_cycint(3, {1, -1, 2}));
    CHECK(g.norm_value == 7);
    CHECK(g.square_sum == 6);
    CHECK(g.lhs == 196);
    CHECK(g.rhs == 324);
    CHECK(g.holds);
    REQUIRE(g.holds_power_form.has_value());
    CHECK(*g.holds_power_form); // 49 <= 216

    std::mt19937_64 rng(36);
    for (u64 k = 2; k <= 14; ++k)
        for (int i = 0; i < 100; ++i)
            CHECK(norm_bound_general(random_cycint(k, -5, 5, rng)).holds);
}

TEST_CASE("prime-order norm bound, both branches") {
    const auto zs = norm_bound_prime(make_cycint(3, {1, -1, 0}));
    CHECK(zs.zero_sum_case);
    CHECK(zs.one_sided_max == 1);
    CHECK(zs.bound == mpq_class(3));
    CHECK(zs.holds);
    CHECK(abs(zs.norm_value) == 3); // equality case

    const auto nz = norm_bound_prime(make_cycint(3, {1, 1, 0}));
    CHECK_FALSE(nz.zero_sum_case);
    CHECK(nz.one_sided_max == 2);
    CHECK(nz.bound == mpq_class(4)); // 2^3 / 2
    CHECK(nz.holds);

    CHECK_THROWS_AS(norm_bound_prime(make_cycint(6, {1, 0, 0, 0, 0, 0})), std::invalid_argument);

    std::mt19937_64 rng(37);
    for (u64 k : {2, 3, 5, 7, 11, 13})
        for (int i = 0; i < 200; ++i)
            CHECK(norm_bound_prime(random_cycint(k, -5, 5, rng)).holds);
}
