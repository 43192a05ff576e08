#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "generators.hpp"
#include "japprox/corpus.hpp"
#include "japprox/polynomial.hpp"
#include "japprox/remez.hpp"
#include "lp_oracle.hpp"

using namespace japprox;

namespace {

TestFunction fn(std::string id, RealFn f, std::vector<double> kinks = {})
{
    TestFunction t;
    t.id = std::move(id);
    t.evaluator = std::move(f);
    t.kinks = std::move(kinks);
    return t;
}

double cheb_t(int n, double x)
{
    return std::cos(n * std::acos(std::clamp(x, -1.0, 1.0)));
}

std::vector<double> random_coeffs(int d, double scale = 1.0)
{
    std::vector<double> c(d + 1);
    for (auto& v : c) {
        v = gen::real_in(-scale, scale);
    }
    return c;
}

// Residual check: the bracket is consistent with an independent sup estimate.
void check_bracket(const RealFn& f, const Interval& iv, const RemezResult& r)
{
    CHECK(r.error_lo >= 0.0);
    CHECK(r.error_lo <= r.error_hi);
    double sup = 0.0;
    for (int i = 0; i <= 20000; ++i) {
        const double x = iv.lo() + iv.length() * i / 20000.0;
        sup = std::max(sup, std::abs(f(x) - r.poly(x)));
    }
    CHECK(sup <= r.error_hi * (1 + 1e-9) + 1e-14);
}

} // namespace

TEST_CASE("polynomial evaluation and conversion")
{
    CHECK_THROWS_AS(Polynomial(unit_interval(), {}), std::invalid_argument);
    CHECK_THROWS_AS(Polynomial(unit_interval(), {1.0, NAN}), std::invalid_argument);
    for (int trial = 0; trial < 50; ++trial) {
        const int d = gen::int_in(0, 15);
        const auto c = random_coeffs(d);
        const double lo = gen::real_in(-3.0, 1.0);
        const Interval iv(lo, lo + gen::real_in(0.2, 4.0));
        const Polynomial p(iv, c);
        CHECK(p.degree() == d);
        const auto mono = p.monomial_coeffs();
        REQUIRE(mono.size() == c.size());
        for (int i = 0; i < 10; ++i) {
            const double x = gen::real_in(iv.lo(), iv.hi());
            const double t = (2.0 * x - iv.lo() - iv.hi()) / iv.length();
            double direct = 0.0;
            for (int j = 0; j <= d; ++j) {
                direct += c[j] * cheb_t(j, t);
            }
            CHECK(p(x) == doctest::Approx(direct).epsilon(1e-12).scale(1.0));
            CHECK(chebyshev_sum(c, t) == doctest::Approx(direct).epsilon(1e-12).scale(1.0));
            if (d <= 6 && std::abs(iv.mid()) < 1.0) {
                double horner = 0.0;
                for (auto it = mono.rbegin(); it != mono.rend(); ++it) {
                    horner = horner * x + *it;
                }
                CHECK(horner == doctest::Approx(direct).epsilon(1e-8).scale(1.0));
            }
        }
    }
}

TEST_CASE("classical best approximation values")
{
    const TestFunction sq = fn("sq", [](double x) { return x * x; });
    const RemezResult r = remez(sq, unit_interval(), 1, 1e-10);
    CHECK(r.certified);
    CHECK(r.error() == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.poly(0.3) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(r.poly(-0.9) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(best_error(sq, unit_interval(), 2) == doctest::Approx(0.5).epsilon(1e-9));

    const TestFunction t4 = fn("t4", [](double x) { return cheb_t(4, x); });
    CHECK(remez(t4, unit_interval(), 3, 1e-10).error() == doctest::Approx(1.0).epsilon(1e-10));

    // monic Chebyshev: E_{n-1}(x^n) = 2^(1-n), on any interval scaled by (len/2)^n
    for (int n = 1; n <= 14; ++n) {
        const TestFunction p = fn("xn", [n](double x) { return std::pow(x, n); });
        CHECK(best_error(p, unit_interval(), n) == doctest::Approx(std::ldexp(1.0, 1 - n)).epsilon(1e-9));
        const Interval iv(0.5, 2.5);
        CHECK(best_error(p, iv, n) == doctest::Approx(std::ldexp(1.0, 1 - n)).epsilon(1e-8));
    }

    CHECK(best_error(fn("c", [](double) { return 3.0; }), unit_interval(), 1) == 0.0);
    // best affine fit of |x| on [-1, 1] is the constant 1/2
    const TestFunction a = builtin_corpus().find("abs");
    CHECK(best_error(a, unit_interval(), 2) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(best_error(a, unit_interval(), 1) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(best_error(a, unit_interval(), 3) == doctest::Approx(0.125).epsilon(1e-9));
}

TEST_CASE("reproduction of polynomials")
{
    for (int trial = 0; trial < 20; ++trial) {
        const int d = gen::int_in(0, 12);
        const Polynomial q(unit_interval(), random_coeffs(d));
        const RemezResult r = remez([&](double x) { return q(x); }, unit_interval(), d);
        CHECK(r.certified);
        CHECK(r.error_hi <= 1e-12);
    }
}

TEST_CASE("remez argument validation")
{
    const RealFn sq = [](double x) { return x * x; };
    CHECK_THROWS_AS(remez(sq, unit_interval(), -1), std::invalid_argument);
    RemezOptions bad;
    bad.certify_tol = 0.5;
    CHECK_THROWS_AS(remez(sq, unit_interval(), 2, bad), std::invalid_argument);
    bad = {};
    bad.grid_factor = 1;
    CHECK_THROWS_AS(remez(sq, unit_interval(), 2, bad), std::invalid_argument);
    CHECK_THROWS_AS(remez(spike_f0(), unit_interval(), 2), std::invalid_argument);
    const TestFunction a = builtin_corpus().find("abs");
    CHECK_THROWS_AS(best_error(a, unit_interval(), 0), std::invalid_argument);
    CHECK_THROWS_AS(whitney_poly(a, unit_interval(), 0), std::invalid_argument);
    CHECK_THROWS_AS(restrict_to(a, Interval(-2.0, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(whitney_check(a, unit_interval(), 0), std::invalid_argument);
}

TEST_CASE("remez matches the grid LP oracle")
{
    const Corpus c = builtin_corpus();
    const auto grid = lp::oracle_grid(-1.0, 1.0);
    for (const auto& f : c.entries()) {
        for (int d : {1, 4, 9}) {
            const RemezResult r = remez(f, unit_interval(), d);
            CHECK(r.certified);
            const double lp = lp::discrete_minimax(f.evaluator, grid, d, -1.0, 1.0);
            INFO(f.id << " degree " << d << " lo " << r.error_lo << " hi " << r.error_hi << " lp " << lp);
            // grid value never exceeds the true minimax error
            CHECK(lp <= r.error_hi * (1 + 1e-9) + 1e-13);
            CHECK(lp >= r.error_lo * (1 - 1e-4) - 1e-13);
            check_bracket(f.evaluator, unit_interval(), r);
        }
    }
}

TEST_CASE("equioscillation on the final reference")
{
    const Corpus c = builtin_corpus();
    for (const char* id : {"runge", "abs", "sin16", "trunc_0.3_2"}) {
        const TestFunction& f = c.find(id);
        for (int d : {2, 7, 12}) {
            const RemezResult r = remez(f, unit_interval(), d);
            REQUIRE(r.reference.size() == static_cast<std::size_t>(d + 2));
            double prev = 0.0;
            for (std::size_t i = 0; i < r.reference.size(); ++i) {
                const double x = r.reference[i];
                const double e = f(x) - r.poly(x);
                CHECK(std::abs(e) == doctest::Approx(r.error()).epsilon(1e-6));
                if (i > 0) {
                    CHECK(e * prev < 0.0);
                    CHECK(x > r.reference[i - 1]);
                }
                prev = e;
            }
        }
    }
}

TEST_CASE("property: best error is monotone, homogeneous and translation invariant")
{
    const Corpus c = builtin_corpus();
    for (int trial = 0; trial < 25; ++trial) {
        const TestFunction& f = c.entries()[gen::int_in(0, static_cast<int>(c.size()) - 1)];
        const int d = gen::int_in(0, 10);
        const double e0 = remez(f, unit_interval(), d).error();
        const double e1 = remez(f, unit_interval(), d + 1).error();
        CHECK(e1 <= e0 * (1 + 1e-8) + 1e-14);

        const double lam = gen::real_in(-4.0, 4.0);
        const Polynomial q(unit_interval(), random_coeffs(d));
        TestFunction g = f;
        g.evaluator = [f, lam, q](double x) { return lam * f(x) + q(x); };
        const double eg = remez(g, unit_interval(), d).error();
        CHECK(gen::near(eg, std::abs(lam) * e0, 1e-7, 1e-13));
    }
}

TEST_CASE("property: affine change of variable")
{
    const Corpus c = builtin_corpus();
    for (int trial = 0; trial < 15; ++trial) {
        const TestFunction& f = c.entries()[gen::int_in(0, static_cast<int>(c.size()) - 1)];
        const int d = gen::int_in(0, 8);
        const double lo = gen::real_in(-5.0, 5.0);
        const double len = gen::real_in(0.01, 10.0);
        const Interval iv(lo, lo + len);
        TestFunction g = f;
        g.domain = iv;
        g.evaluator = [f, lo, len](double y) { return f(-1.0 + 2.0 * (y - lo) / len); };
        g.kinks.clear();
        for (double b : f.kinks) {
            g.kinks.push_back(lo + 0.5 * len * (b + 1.0));
        }
        CHECK(gen::near(remez(g, iv, d).error(), remez(f, unit_interval(), d).error(), 1e-7, 1e-13));
    }
}

TEST_CASE("Whitney polynomials")
{
    const TestFunction x3 = fn("x3", [](double x) { return x * x * x; });
    const Interval iv(-0.3, 0.8);
    const Polynomial p = whitney_poly(x3, iv, 2);
    for (double x : {-0.3, 0.1, 0.8}) {
        CHECK(p(x) == doctest::Approx(x * x * x).epsilon(1e-12).scale(1e-12));
    }
    const TestFunction a = builtin_corpus().find("abs");
    const Interval small(-0.2, 0.2);
    const TestFunction ar = restrict_to(a, small);
    CHECK(remez(ar, small, 1).error() == doctest::Approx(0.1).epsilon(1e-8));
    const TestFunction s = builtin_corpus().find("sin4");
    const Interval right(0.6, 1.0);
    const Polynomial w = whitney_poly(s, right, 2);
    const double e = best_error(s, right, 4);
    double sup = 0.0;
    for (int i = 0; i <= 4000; ++i) {
        const double x = 0.6 + 0.4 * i / 4000;
        sup = std::max(sup, std::abs(s(x) - w(x)));
    }
    CHECK(sup == doctest::Approx(e).epsilon(1e-7));
}

TEST_CASE("Whitney checks")
{
    const TestFunction sq = fn("sq", [](double x) { return x * x; });
    const WhitneyCheck w = whitney_check(sq, Interval(0.0, 1.0), 2, {512, 128});
    CHECK(w.E == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(w.omega == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(w.ratio == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(w.bound_wk == 0.5);
    CHECK(w.pass);

    const TestFunction a = builtin_corpus().find("abs");
    const WhitneyCheck wa = whitney_check(a, unit_interval(), 2, {512, 128});
    CHECK(wa.ratio == doctest::Approx(0.25).epsilon(1e-8));
    CHECK(wa.pass);

    const TestFunction lin = fn("lin", [](double x) { return 2.0 * x - 1.0; });
    const WhitneyCheck wl = whitney_check(lin, Interval(-0.5, 0.5), 2, {512, 128});
    CHECK(wl.degenerate);
    CHECK(wl.pass);

    const TestFunction r = restrict_to(a, Interval(0.1, 0.9));
    CHECK(r.kinks.empty());
    CHECK(r.domain.lo() == 0.1);
}

TEST_CASE("property: Whitney ratios stay below w_k")
{
    const Corpus c = builtin_corpus();
    for (int trial = 0; trial < 40; ++trial) {
        const TestFunction& f = c.entries()[gen::int_in(0, static_cast<int>(c.size()) - 1)];
        const int k = gen::int_in(1, 8);
        const double a = gen::real_in(-1.0, 0.8);
        const double b = gen::real_in(a + 0.1, 1.0);
        const WhitneyCheck w = whitney_check(f, Interval(a, b), k, {512, 128});
        INFO(f.id << " k=" << k << " [" << a << ", " << b << "] ratio " << w.ratio);
        CHECK(w.pass);
        CHECK(w.E >= 0.0);
    }
}
