#include "japprox/remez.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include "japprox/bounds.hpp"

namespace japprox {

namespace {

struct Extremum
{
    double t;
    double r;
};

class Residual
{
public:
    Residual(const RealFn& f, const Interval& iv, const std::vector<double>& coeffs)
        : m_f(f), m_iv(iv), m_coeffs(coeffs)
    {
    }

    double x_of(double t) const
    {
        return std::clamp(m_iv.mid() + 0.5 * m_iv.length() * t, m_iv.lo(), m_iv.hi());
    }

    double operator()(double t) const { return m_f(x_of(t)) - chebyshev_sum(m_coeffs, t); }

private:
    const RealFn& m_f;
    const Interval& m_iv;
    const std::vector<double>& m_coeffs;
};

// Solve sum_j c_j T_j(t_i) + (-1)^i E = f(x_i) on the reference.
std::vector<double> solve_reference(const RealFn& f, const Interval& iv,
                                    const std::vector<double>& ref, double& levelled)
{
    const int n = static_cast<int>(ref.size());
    const int degree = n - 2;
    Eigen::MatrixXd A(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
        const double t = ref[i];
        double tm1 = 1.0;
        double tj = t;
        A(i, 0) = 1.0;
        for (int j = 1; j <= degree; ++j) {
            A(i, j) = tj;
            double next = 2.0 * t * tj - tm1;
            tm1 = tj;
            tj = next;
        }
        A(i, n - 1) = (i % 2 == 0) ? 1.0 : -1.0;
        rhs(i) = f(std::clamp(iv.mid() + 0.5 * iv.length() * t, iv.lo(), iv.hi()));
    }
    Eigen::VectorXd sol = A.partialPivLu().solve(rhs);
    levelled = std::abs(sol(n - 1));
    std::vector<double> coeffs(degree + 1);
    for (int j = 0; j <= degree; ++j) {
        coeffs[j] = sol(j);
    }
    return coeffs;
}

// Signed local extrema of the residual: one per maximal same-sign run of the
// sampled residual, refined by Brent's method between the neighbouring samples.
std::vector<Extremum> find_extrema(const Residual& res, const std::vector<double>& grid)
{
    const std::size_t m = grid.size();
    std::vector<double> vals(m);
    for (std::size_t i = 0; i < m; ++i) {
        vals[i] = res(grid[i]);
    }
    std::vector<Extremum> out;
    std::size_t i = 0;
    while (i < m) {
        const bool positive = vals[i] >= 0.0;
        std::size_t best = i;
        std::size_t j = i;
        while (j < m && (vals[j] >= 0.0) == positive) {
            if (std::abs(vals[j]) > std::abs(vals[best])) {
                best = j;
            }
            ++j;
        }
        const double a = grid[best > 0 ? best - 1 : 0];
        const double b = grid[std::min(best + 1, m - 1)];
        Extremum e{grid[best], vals[best]};
        if (b > a) {
            const double sgn = positive ? 1.0 : -1.0;
            std::uintmax_t iters = 60;
            auto [t, neg] = boost::math::tools::brent_find_minima(
                    [&](double t) { return -sgn * res(t); }, a, b, 40, iters);
            double r = -sgn * neg;
            if (std::abs(r) > std::abs(e.r) && (r >= 0.0) == positive) {
                e = {t, r};
            }
        }
        out.push_back(e);
        i = j;
    }
    return out;
}

std::vector<double> chebyshev_extrema(int count)
{
    std::vector<double> t(count);
    for (int i = 0; i < count; ++i) {
        t[i] = -std::cos(std::numbers::pi * i / (count - 1));
    }
    t.front() = -1.0;
    t.back() = 1.0;
    return t;
}

} // namespace

RemezResult remez(const RealFn& f, const Interval& iv, int degree, const RemezOptions& opt)
{
    if (degree < 0) {
        throw std::invalid_argument("remez degree must be nonnegative");
    }
    if (!(opt.certify_tol > 1e-14) || !(opt.certify_tol < 1e-2)) {
        throw std::invalid_argument("certify_tol must lie in (1e-14, 1e-2)");
    }
    if (opt.grid_factor < 2 || opt.max_iter < 1) {
        throw std::invalid_argument("remez grid_factor >= 2 and max_iter >= 1 required");
    }
    const int npts = degree + 2;
    std::vector<double> grid = chebyshev_extrema(opt.grid_factor * npts);
    for (double k : opt.kinks) {
        if (k > iv.lo() && k < iv.hi()) {
            grid.push_back((2.0 * k - iv.lo() - iv.hi()) / iv.length());
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    double fscale = 0.0;
    for (double t : grid) {
        fscale = std::max(fscale, std::abs(f(std::clamp(iv.mid() + 0.5 * iv.length() * t,
                                                        iv.lo(), iv.hi()))));
    }
    // residuals below this are rounding noise of the solve and Clenshaw sum
    const double noise_floor = 1e-14 * (degree + 1) * std::max(fscale, 1e-300);

    auto run = [&](std::vector<double> ref) {
        std::vector<double> coeffs;
        double lo = 0.0;
        double hi = 0.0;
        bool certified = false;
        int it = 0;
        for (it = 1; it <= opt.max_iter; ++it) {
            coeffs = solve_reference(f, iv, ref, lo);
            const Residual res(f, iv, coeffs);
            std::vector<double> samples = grid;
            samples.insert(samples.end(), ref.begin(), ref.end());
            std::sort(samples.begin(), samples.end());
            samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
            std::vector<Extremum> ext = find_extrema(res, samples);
            hi = 0.0;
            for (const auto& e : ext) {
                hi = std::max(hi, std::abs(e.r));
            }
            hi = std::max(hi, lo);
            if (hi - lo <= opt.certify_tol * hi || hi <= noise_floor) {
                certified = true;
                break;
            }
            if (static_cast<int>(ext.size()) < npts) {
                break;
            }
            // drop the weaker end until npts alternating extrema remain; the
            // global maximum always survives
            std::size_t first = 0;
            std::size_t last = ext.size() - 1;
            while (last - first + 1 > static_cast<std::size_t>(npts)) {
                if (std::abs(ext[first].r) < std::abs(ext[last].r)) {
                    ++first;
                } else {
                    --last;
                }
            }
            std::vector<double> next;
            for (std::size_t i = first; i <= last; ++i) {
                next.push_back(ext[i].t);
            }
            if (next == ref) {
                break;
            }
            ref = std::move(next);
        }
        it = std::min(it, opt.max_iter);
        RemezResult r{Polynomial(iv, coeffs), lo, hi, {}, it, certified};
        for (double t : ref) {
            r.reference.push_back(iv.mid() + 0.5 * iv.length() * t);
        }
        return r;
    };

    // A symmetric start can level to zero error against an even or odd f and
    // stall the exchange; warped starts break the parity.
    std::optional<RemezResult> best;
    int total_iter = 0;
    for (double warp : {0.0, 0.15, -0.23, 0.31}) {
        std::vector<double> ref = chebyshev_extrema(npts);
        for (double& t : ref) {
            t += warp * (1.0 - t * t);
        }
        RemezResult r = run(std::move(ref));
        total_iter += r.iterations;
        const bool better = !best || (r.certified && !best->certified) ||
                            (r.certified == best->certified &&
                             r.error_hi - r.error_lo < best->error_hi - best->error_lo);
        if (better) {
            best = std::move(r);
        }
        if (best->certified) {
            break;
        }
    }
    best->iterations = total_iter;
    return *best;
}

RemezResult remez(const TestFunction& f, const Interval& interval, int degree, double certify_tol)
{
    if (!f.continuous) {
        throw std::invalid_argument("remez requires a continuous function; got " + f.id);
    }
    RemezOptions opt;
    opt.certify_tol = certify_tol;
    opt.kinks = f.kinks;
    return remez(f.evaluator, interval, degree, opt);
}

double best_error(const TestFunction& f, const Interval& interval, int n)
{
    if (n < 1) {
        throw std::invalid_argument("best_error requires n >= 1");
    }
    return remez(f, interval, n - 1).error();
}

Polynomial whitney_poly(const TestFunction& f, const Interval& interval, int k)
{
    if (k < 1) {
        throw std::invalid_argument("whitney_poly requires k >= 1");
    }
    return remez(f, interval, 2 * k - 1).poly;
}

TestFunction restrict_to(const TestFunction& f, const Interval& interval)
{
    if (interval.lo() < f.domain.lo() || interval.hi() > f.domain.hi()) {
        throw std::invalid_argument("restriction interval leaves the domain of " + f.id);
    }
    TestFunction g = f;
    g.domain = interval;
    g.kinks.clear();
    for (double k : f.kinks) {
        if (interval.contains(k)) {
            g.kinks.push_back(k);
        }
    }
    return g;
}

WhitneyCheck whitney_check(const TestFunction& f, const Interval& interval, int k, ModulusGrid grid,
                           double slack)
{
    if (k < 1) {
        throw std::invalid_argument("whitney_check requires k >= 1");
    }
    const TestFunction g = restrict_to(f, interval);
    WhitneyCheck w;
    w.interval = interval;
    w.k = k;
    w.bound_wk = whitney_constant(k);
    w.E = best_error(g, interval, k);
    w.omega = modulus(g, k, interval.length() / k, grid).value;
    if (w.omega <= 1e-13) {
        w.degenerate = true;
        w.pass = true;
        return w;
    }
    w.ratio = w.E / w.omega;
    w.pass = w.ratio <= w.bound_wk + slack;
    return w;
}

} // namespace japprox
