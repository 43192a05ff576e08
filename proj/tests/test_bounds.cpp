#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "japprox/bounds.hpp"
#include "japprox/kernel.hpp"

using namespace japprox;

namespace {

constexpr double kPi = std::numbers::pi;

// Alternating definition sum_j ((-1)^j / (2j+1))^(m+1), averaged partial sums.
double favard_direct(int m, int terms)
{
    double s = 0.0;
    double prev = 0.0;
    for (int j = 0; j < terms; ++j) {
        prev = s;
        s += std::pow((j % 2 ? -1.0 : 1.0) / (2 * j + 1), m + 1);
    }
    // for odd m the series has positive terms; averaging is harmless there
    return 4.0 / kPi * (m % 2 == 0 ? 0.5 * (s + prev) : s);
}

} // namespace

TEST_CASE("Favard constants: closed forms")
{
    CHECK(favard(1, 1000000) == doctest::Approx(kPi / 2).epsilon(1e-6));
    CHECK(std::abs(favard(2, 10000) - kPi * kPi / 8) < 1e-8);
    CHECK(std::abs(favard(8, 100) - 277.0 * std::pow(kPi, 8) / 2064384.0) < 1e-12);
    for (int m = 0; m <= 8; ++m) {
        CHECK(std::abs(favard(m, 20000) - favard_closed_form(m)) < 1e-8);
    }
    CHECK(favard_closed_form(0) == 1.0);
    CHECK_THROWS_AS(favard_closed_form(9), std::invalid_argument);
    CHECK_THROWS_AS(favard(-1, 10), std::invalid_argument);
    CHECK_THROWS_AS(favard_partial_sum(2, 0), std::invalid_argument);
}

TEST_CASE("Favard constants against independent oracles")
{
    const auto even = oracle::favard_even(20);
    for (int j = 0; j <= 20; ++j) {
        CHECK(favard(2 * j, 4096) == doctest::Approx(even[j]).epsilon(1e-12));
    }
    // m = 1 converges too slowly for a plain partial sum
    for (int m = 2; m <= 12; ++m) {
        CHECK(favard(m, 4096) == doctest::Approx(favard_direct(m, 200000)).epsilon(1e-9));
    }
    // K_0 < K_2 < K_4 < ... < 4/pi < ... < K_3 < K_1
    for (int j = 0; j < 10; ++j) {
        CHECK(favard(2 * j, 4096) < favard(2 * j + 2, 4096));
        CHECK(favard(2 * j + 1, 4096) > favard(2 * j + 3, 4096));
        CHECK(favard(2 * j + 2, 4096) < 4.0 / kPi);
        CHECK(favard(2 * j + 1, 4096) > 4.0 / kPi);
    }
    const FavardTable t = favard_table(6, 512);
    CHECK(t.terms_used == 512);
    CHECK(t.values.size() == 7);
    CHECK(t.values.at(3) == favard(3, 512));
}

TEST_CASE("secant series")
{
    for (double rho : {1.5, 2.0, 4.0, 10.0}) {
        const SeriesValue v = sec_series(rho, 40);
        CHECK(std::abs(v.value - 1.0 / std::cos(kPi / (2 * rho))) < 1e-9);
        CHECK(v.tail_bound >= 0.0);
    }
    CHECK(std::abs(sec_series(2.0, 40).value - std::sqrt(2.0)) < 1e-10);
    CHECK(std::abs(sec_series(1e6, 5).value - 1.0) < 1e-10);
    // truncation error is within the reported tail bound
    for (int jmax : {2, 5, 10}) {
        const SeriesValue v = sec_series(1.5, jmax);
        CHECK(1.0 / std::cos(kPi / 3.0) - v.value <= v.tail_bound);
    }
    CHECK_THROWS_AS(sec_series(1.0, 10), std::domain_error);
    CHECK_THROWS_AS(sec_series(2.0, -1), std::invalid_argument);
}

TEST_CASE("printed Jackson bounds")
{
    CHECK(theorem2_bound(1, 1) == 0.9375);
    CHECK(theorem2_bound(1, 2) == 0.796875);
    const double printed1[] = {0.94, 4.38, 6.71, 8.9};
    const double printed2[] = {0.8, 2.59, 2.84, 2.97};
    for (int k = 1; k <= 4; ++k) {
        CHECK(theorem2_bound(k, 1.0) <= printed1[k - 1]);
        CHECK(theorem2_bound(k, 2.0) <= printed2[k - 1]);
        // printed values are rounded up to two digits
        CHECK(theorem2_bound(k, 1.0) >= printed1[k - 1] - 0.01);
        CHECK(theorem2_bound(k, 2.0) >= printed2[k - 1] - 0.01);
    }
    const double t1 = theorem1_bound(5, 2.0);
    CHECK(t1 <= 9.74);
    CHECK(t1 == doctest::Approx(9.737).epsilon(1e-3));
    CHECK(theorem1_bound(100, 2.0) == t1);
    CHECK(theorem1_bound(5, 1.01) > t1);
    CHECK(std::isfinite(theorem1_bound(5, 1.01)));
    // K_2 beta_2 = 1/6 at alpha = 2
    CHECK(favard_closed_form(2) * 4.0 * to_double(gamma(2)) / (kPi * kPi * 4.0) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-15));
}

TEST_CASE("bound argument validation")
{
    CHECK_THROWS_AS(theorem1_bound(4, 2.0), std::domain_error);
    CHECK_THROWS_AS(theorem1_bound(5, 1.0), std::domain_error);
    CHECK_THROWS_AS(theorem1_bound(5, 3.0), std::domain_error);
    CHECK_NOTHROW(theorem1_bound(5, 9.0 / kPi));
    CHECK_THROWS_AS(theorem2_bound(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(theorem2_bound(5, 1.0), std::domain_error);
    CHECK_THROWS_AS(theorem2_bound(2, 0.0), std::domain_error);
    CHECK_THROWS_AS(jackson_n_threshold(0), std::invalid_argument);
    CHECK_THROWS_AS(make_bound_params(2, -1.0, 12), std::invalid_argument);
    CHECK_THROWS_AS(check_in2(3, 100), std::domain_error);
    CHECK_THROWS_AS(check_in2(4, 11), std::domain_error);
    CHECK_THROWS_AS(sigma(0), std::invalid_argument);
    CHECK_THROWS_AS(c_constant(0), std::invalid_argument);
    CHECK_THROWS_AS(whitney_constant(0), std::invalid_argument);
}

TEST_CASE("property: closed forms agree with the general chain")
{
    for (int trial = 0; trial < 200; ++trial) {
        const int k = gen::int_in(1, 4);
        const double alpha = gen::real_in(0.3, 6.0);
        CHECK(theorem2_bound_chain(k, alpha) ==
              doctest::Approx(theorem2_bound(k, alpha)).epsilon(1e-12));
    }
}

TEST_CASE("property: bounds decrease in alpha and stay above 1/2")
{
    for (int trial = 0; trial < 200; ++trial) {
        const int k = gen::int_in(1, 4);
        const double a1 = gen::real_in(0.5, 5.0);
        const double a2 = gen::real_in(a1, 6.0);
        CHECK(theorem2_bound(k, a2) <= theorem2_bound(k, a1));
        CHECK(theorem2_bound(k, a2) >= 0.5);
        const int kk = gen::int_in(5, 40);
        const double amax = (2.0 * kk - 1.0) / kPi;
        const double b1 = gen::real_in(1.01, amax);
        const double b2 = gen::real_in(b1, amax);
        CHECK(theorem1_bound(kk, b2) <= theorem1_bound(kk, b1));
        CHECK(theorem1_bound_rho(kk, b1) <= theorem1_bound(kk, b1) + 1e-12);
    }
    CHECK(jackson_bound(2, 2.0) == theorem2_bound(2, 2.0));
    CHECK(jackson_bound(7, 2.0) == theorem1_bound(7, 2.0));
}

TEST_CASE("n thresholds and bound parameters")
{
    CHECK(jackson_n_threshold(1) == 2);
    CHECK(jackson_n_threshold(2) == 12);
    CHECK(jackson_n_threshold(3) == 30);
    CHECK(jackson_n_threshold(4) == 56);
    CHECK(jackson_n_threshold(5) == 90);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = gen::int_in(1, 10);
        const double alpha = gen::real_in(0.5, 4.0);
        const int n = gen::int_in(1, 500);
        const BoundParams p = make_bound_params(k, alpha, n);
        CHECK(p.h == doctest::Approx(alpha * kPi / n));
        CHECK(p.delta_k == doctest::Approx(p.beta_k).epsilon(1e-12));
        CHECK(p.rho * p.rho * p.delta_k == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("falling factorial inequality")
{
    const In2Check c = check_in2(4, 12);
    CHECK(c.ratio == Rational(20736, 11880));
    CHECK(c.below_two);
    const In2Check big = check_in2(4, 1000000);
    CHECK(big.ratio > 1);
    CHECK(to_double(big.ratio) == doctest::Approx(1.0).epsilon(1e-5));
    for (int m = 4; m <= 12; ++m) {
        for (long n = static_cast<long>(m) * (m - 1); n <= 2000; ++n) {
            const In2Check r = check_in2(m, n);
            if (!r.below_two) {
                FAIL("inequality fails at m=" << m << " n=" << n);
            }
        }
    }
}

TEST_CASE("sigma parity")
{
    CHECK(sigma(1) == 1);
    CHECK(sigma(2) == 0);
    for (long j = 1; j <= 10000; ++j) {
        if (sigma(j) != (j % 2)) {
            FAIL("sigma(" << j << ") = " << sigma(j));
        }
    }
}

TEST_CASE("constant tables")
{
    const ConstantTables t = constant_tables();
    CHECK(t.c(3) == 2.26);
    CHECK(t.w(5) == 1.0);
    CHECK(t.d_star(1) == 1.5);
    CHECK(t.c(1) == 2.0);
    CHECK(t.c(9) == 3.0);
    CHECK(t.d(1) == 1.0);
    CHECK(t.d(3) == 2.26);
    CHECK(t.d(5) == 6.0);
    CHECK(t.d(41000) == 6.0);
    CHECK(t.d(41001) == doctest::Approx(3.0 * (2.0 + std::exp(-2.0))));
    CHECK(t.d_star(2) == 16.0);
    CHECK(t.d_star(5) == 2048.0);
    CHECK(t.w(1) == 0.5);
    CHECK(t.w(2) == 0.5);
    CHECK(t.w(8) == 1.0);
    CHECK(t.w(9) == 2.0);
    CHECK(t.w(82001) == doctest::Approx(2.0 + std::exp(-2.0)));
    // c_k = 1 + bound on the L1 norm of Lambda_2k
    for (int k = 2; k <= 4; ++k) {
        CHECK(1.0 + to_double(l1_norm_exact(lambda_hat(k))) <= t.c(k));
    }
    for (int k = 5; k <= 12; ++k) {
        CHECK(1.0 + to_double(l1_norm_exact(lambda_hat(k))) <= t.c(k));
    }
}
