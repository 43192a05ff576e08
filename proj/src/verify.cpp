#include "japprox/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "japprox/bounds.hpp"
#include "japprox/corpus.hpp"
#include "japprox/extension.hpp"
#include "japprox/jackson.hpp"
#include "japprox/kernel.hpp"
#include "japprox/remez.hpp"

namespace japprox {

namespace {

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& what)
    {
        if (pass) {
            detail << "first failure: " << what;
        }
        pass = false;
    }
};

std::vector<std::string> continuous_ids(bool quick)
{
    if (quick) {
        return {"abs", "runge", "sin4", "x3"};
    }
    std::vector<std::string> ids;
    const Corpus corpus = builtin_corpus();
    for (const auto& f : corpus.entries()) {
        ids.push_back(f.id);
    }
    return ids;
}

Outcome check_exact_identities()
{
    Outcome o;
    if (gamma(2) != Rational(4, 3) || gamma(3) != Rational(68, 45) ||
        gamma(4) != Rational(512, 315)) {
        o.fail("gamma_2..4 differ from 4/3, 68/45, 512/315");
    }
    for (int k = 1; k <= 12; ++k) {
        const SplineKernel lam = lambda_hat(k);
        if (lam.mass() != 1) {
            o.fail("mass of Lambda_" + std::to_string(2 * k));
        }
        for (int l = -(k - 1); l <= k - 1; ++l) {
            const Rational a = alpha_coeff(l, k);
            if (lam.coeff_at(l) != a) {
                o.fail("hat coefficient mismatch at k=" + std::to_string(k));
            }
            if (k >= 2 && (a > 0) != (l % 2 == 0)) {
                o.fail("sign pattern at k=" + std::to_string(k));
            }
        }
        if (static_cast<int>(lam.terms().size()) != 2 * k - 1) {
            o.fail("term count of Lambda_" + std::to_string(2 * k));
        }
        if (lam.abs_coeff_sum() != gamma(k) || gamma(k) != gamma_odd_sum(k)) {
            o.fail("gamma routes disagree at k=" + std::to_string(k));
        }
    }
    for (int j = 1; j <= 10; ++j) {
        const SplineKernel d = decompose_chi_square(j);
        for (int l = -(j - 1); l <= j - 1; ++l) {
            if (d.coeff_at(l) != Rational(j - std::abs(l), j * j)) {
                o.fail("chi_jh^2 decomposition at j=" + std::to_string(j));
            }
        }
    }
    for (long j = 1; j <= 10000; ++j) {
        if (sigma(j) != (j % 2)) {
            o.fail("sigma parity at j=" + std::to_string(j));
            break;
        }
    }
    if (o.pass) {
        o.detail << "k <= 12, j <= 10 decompositions, sigma_j for j <= 10^4";
    }
    return o;
}

Outcome check_l1()
{
    Outcome o;
    const Rational printed[] = {Rational(118, 100), Rational(126, 100), Rational(131, 100)};
    for (int k = 2; k <= 12; ++k) {
        const Rational v = l1_norm_exact(lambda_hat(k));
        const bool ok = (k <= 4) ? v <= printed[k - 2] : v < 2;
        if (!ok) {
            o.fail("L1 norm of Lambda_" + std::to_string(2 * k));
        }
        if (k <= 4) {
            o.detail << "k=" << k << ": " << to_double(v) << " ";
        }
    }
    return o;
}

Outcome check_favard()
{
    Outcome o;
    for (int m = 1; m <= 8; ++m) {
        const double v = favard(m, 100000);
        if (std::abs(v - favard_closed_form(m)) > 1e-8) {
            o.fail("K_" + std::to_string(m));
        }
    }
    for (double rho : {1.5, 2.0, 4.0}) {
        const double s = sec_series(rho, 40).value;
        if (std::abs(s - 1.0 / std::cos(std::numbers::pi / (2.0 * rho))) > 1e-9) {
            o.fail("sec series at rho=" + std::to_string(rho));
        }
    }
    return o;
}

Outcome check_theorem_bounds()
{
    Outcome o;
    struct Row
    {
        int k;
        double alpha;
        double printed;
    };
    const Row rows[] = {{1, 1, 0.94}, {2, 1, 4.38}, {3, 1, 6.71}, {4, 1, 8.9},
                        {1, 2, 0.8},  {2, 2, 2.59}, {3, 2, 2.84}, {4, 2, 2.97}};
    for (const auto& r : rows) {
        const double v = theorem2_bound(r.k, r.alpha);
        o.detail << "J(" << 2 * r.k << "," << r.alpha << ")=" << v << " ";
        if (v > r.printed + kBoundSlack) {
            o.fail("small-k bound value at k=" + std::to_string(r.k));
        }
        if (std::abs(v - theorem2_bound_chain(r.k, r.alpha)) > 1e-12) {
            o.fail("closed form vs chain at k=" + std::to_string(r.k));
        }
    }
    for (int k = 5; k <= 12; ++k) {
        if (theorem1_bound(k, 2.0) > 9.74 + kBoundSlack) {
            o.fail("large-k bound value at k=" + std::to_string(k));
        }
    }
    return o;
}

Outcome check_remez_classics()
{
    Outcome o;
    TestFunction sq{"x2", unit_interval(), [](double x) { return x * x; }, std::nullopt, {}};
    if (std::abs(best_error(sq, unit_interval(), 2) - 0.5) > 1e-9) {
        o.fail("E_1(x^2) != 1/2");
    }
    for (int n = 2; n <= 12; ++n) {
        TestFunction p{"xn", unit_interval(), [n](double x) { return std::pow(x, n); }, std::nullopt, {}};
        if (std::abs(best_error(p, unit_interval(), n) - std::ldexp(1.0, 1 - n)) > 1e-9) {
            o.fail("E_{n-1}(x^n) != 2^(1-n) at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome check_whitney(bool quick, unsigned seed)
{
    Outcome o;
    const Corpus corpus = builtin_corpus();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const int intervals = quick ? 2 : 10;
    const int kmax = quick ? 4 : 8;
    const ModulusGrid grid = quick ? ModulusGrid{256, 128} : ModulusGrid{1024, 256};
    double worst = 0.0;
    int count = 0;
    for (const auto& id : continuous_ids(quick)) {
        const TestFunction& f = corpus.find(id);
        for (int k = 1; k <= kmax; ++k) {
            for (int i = 0; i < intervals; ++i) {
                const double a = -1.0 + 1.9 * u(rng);
                const double b = a + 0.1 + (1.0 - a - 0.1) * u(rng);
                const WhitneyCheck w = whitney_check(f, Interval(a, b), k, grid);
                ++count;
                if (!w.degenerate) {
                    worst = std::max(worst, w.ratio / w.bound_wk);
                }
                if (!w.pass) {
                    std::ostringstream what;
                    what << id << " k=" << k << " on [" << a << ", " << b << "] ratio " << w.ratio;
                    o.fail(what.str());
                }
            }
        }
    }
    o.detail << " checks=" << count << " max ratio/w_k=" << worst;
    return o;
}

Outcome check_extension(bool quick)
{
    Outcome o;
    const Corpus corpus = builtin_corpus();
    ExtensionOptions opt;
    if (quick) {
        opt.sup_grid = 512;
        opt.modulus_grid = {512, 128};
    }
    double worst_w = 0.0;
    double worst_d = 0.0;
    for (const auto& id : continuous_ids(quick)) {
        const TestFunction& f = corpus.find(id);
        for (int k = 1; k <= 4; ++k) {
            for (double h : {0.02, 0.05, 0.1}) {
                const ExtensionReport r = extension_report(f, k, h, opt);
                if (!r.degenerate) {
                    worst_w = std::max(worst_w, r.W_ratio / r.d_k_bound);
                    worst_d = std::max(worst_d, r.D_ratio / r.d_k_star_bound);
                }
                if (!r.W_pass || !r.D_pass) {
                    o.fail(id + " k=" + std::to_string(k) + " h=" + std::to_string(h));
                }
                const ExtendedFunction g = extend(f, k, h);
                const auto wts = difference_weights(2 * k);
                for (int m = 1; m <= 5; ++m) {
                    for (double sgn : {-1.0, 1.0}) {
                        const double x = sgn * (1.0 + k * h + m * h);
                        double s = 0.0;
                        double scale = 0.0;
                        for (int j = 0; j <= 2 * k; ++j) {
                            const double t = wts[j] * g(x + (j - k) * h);
                            s += t;
                            scale += std::abs(t);
                        }
                        // g is a polynomial of degree 2k - 1 there; only rounding remains
                        if (std::abs(s) > 1e-12 * std::max(scale, 1.0)) {
                            o.fail("difference beyond reach of [-1,1] for " + id);
                        }
                    }
                }
            }
        }
    }
    o.detail << " max W_ratio/d_k=" << worst_w << " max D_ratio/d*_k=" << worst_d;
    return o;
}

Outcome check_jackson(bool quick)
{
    Outcome o;
    SuiteConfig cfg;
    cfg.function_ids = continuous_ids(quick);
    if (quick) {
        cfg.ns = {8, 16};
        cfg.options.grid = {512, 128};
    }
    const Report rep = run_suite(cfg);
    for (const auto& r : rep.records) {
        if (!r.pass) {
            o.fail(r.function_id + " k=" + std::to_string(r.k) + " n=" + std::to_string(r.n));
        }
    }
    for (const auto& s : rep.summary) {
        o.detail << " J(" << 2 * s.k << "," << s.alpha << ")>=" << s.max_ratio;
    }
    const int n1 = 8;
    const auto lb1 = lower_bound_experiment(1, n1, {1e-2, 1e-3, 1e-4});
    if (!(lb1[1].ratio >= 0.45) || !(lb1[2].ratio >= lb1[0].ratio)) {
        o.fail("lower bound k=1");
    }
    if (!quick) {
        const auto lb2 = lower_bound_experiment(2, 12, {1e-2, 1e-3, 1e-4});
        if (!(lb2[1].ratio >= 0.45) || !(lb2[2].ratio >= lb2[0].ratio)) {
            o.fail("lower bound k=2");
        }
    }
    return o;
}

Outcome check_neumann(bool quick)
{
    Outcome o;
    const Corpus corpus = builtin_corpus();
    const std::vector<std::string> ids =
            quick ? std::vector<std::string>{"sin4", "abs32"}
                  : std::vector<std::string>{"sin4", "abs32", "runge", "abs", "trunc_0.3_2"};
    for (const auto& id : ids) {
        for (int n : {16, 24}) {
            const double h = std::numbers::pi / n;
            const NeumannDiagnostic d = neumann_diagnostic(corpus.find(id), 2, n, h);
            if (!d.pass) {
                o.fail(id + " n=" + std::to_string(n));
            }
        }
    }
    return o;
}

Outcome check_in2_exhaustive()
{
    Outcome o;
    for (int m = 4; m <= 12; ++m) {
        for (long n = static_cast<long>(m) * (m - 1); n <= 2000; ++n) {
            if (!check_in2(m, n).below_two) {
                o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
        }
    }
    return o;
}

} // namespace

std::vector<VerifyCheck> run_verify(const VerifyOptions& options,
                                    const std::function<void(const VerifyCheck&)>& progress)
{
    using Clock = std::chrono::steady_clock;
    std::vector<VerifyCheck> out;
    auto run = [&](const std::string& name, auto&& fn) {
        const auto t0 = Clock::now();
        VerifyCheck c;
        c.name = name;
        try {
            Outcome o = fn();
            c.pass = o.pass;
            c.detail = o.detail.str();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("exception: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        out.push_back(c);
        if (progress) {
            progress(c);
        }
    };
    const bool q = options.quick;
    run("exact kernel identities", [] { return check_exact_identities(); });
    run("L1 norm of Lambda_2k", [] { return check_l1(); });
    run("Favard constants and sec series", [] { return check_favard(); });
    run("theorem bound values", [] { return check_theorem_bounds(); });
    run("Remez classical values", [] { return check_remez_classics(); });
    run("Whitney ratios", [&] { return check_whitney(q, options.seed); });
    run("extension bounds", [&] { return check_extension(q); });
    run("Jackson ratios and lower bound", [&] { return check_jackson(q); });
    run("Neumann majorant", [&] { return check_neumann(q); });
    run("inequality n^m / falling factorial < 2", [] { return check_in2_exhaustive(); });
    return out;
}

} // namespace japprox
