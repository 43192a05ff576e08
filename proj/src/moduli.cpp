#include "japprox/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

namespace japprox {

std::vector<double> difference_weights(int k)
{
    if (k < 1) {
        throw std::invalid_argument("difference order must be positive");
    }
    std::vector<double> w(k + 1);
    for (int j = 0; j <= k; ++j) {
        double c = binomial(k, j).convert_to<double>();
        w[j] = ((k - j) % 2 == 0) ? c : -c;
    }
    return w;
}

namespace {

constexpr int kRefineSteps = 16;

double diff_with(const RealFn& f, std::span<const double> w, double h, double x, double lo,
                 double hi)
{
    const int k = static_cast<int>(w.size()) - 1;
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
        double node = std::clamp(x + (j - 0.5 * k) * h, lo, hi);
        s += w[j] * f(node);
    }
    return s;
}

struct Candidate
{
    double value = -1.0;
    double x = 0.0;
    double h = 0.0;
};

// Larger value wins; exact ties go to the smallest x, then the smallest h.
bool better(const Candidate& a, const Candidate& b)
{
    if (a.value != b.value) {
        return a.value > b.value;
    }
    if (a.x != b.x) {
        return a.x < b.x;
    }
    return a.h < b.h;
}

void validate_modulus_args(const TestFunction& f, int k, double delta, ModulusGrid grid)
{
    if (k < 1) {
        throw std::invalid_argument("modulus order must be positive");
    }
    if (grid.nx < 64 || grid.nh < 64) {
        throw std::invalid_argument("modulus grid sizes must be >= 64");
    }
    if (!(delta > 0.0)) {
        throw std::invalid_argument("modulus step bound delta must be positive");
    }
    if (delta > f.domain.length() / k * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "delta = " << delta << " too large: need delta <= (hi - lo)/k = "
            << f.domain.length() / k;
        throw std::domain_error(msg.str());
    }
}

// Admissible x-range for step h, collapsed to a point when rounding makes it empty.
std::pair<double, double> x_range(const Interval& dom, int k, double h)
{
    double a = dom.lo() + 0.5 * k * h;
    double b = dom.hi() - 0.5 * k * h;
    if (b < a) {
        a = b = dom.mid();
    }
    return {a, b};
}

// Best candidate in one h row: nx grid points plus placements that put a node on a kink.
Candidate search_row(const TestFunction& f, std::span<const double> w, double h, int nx)
{
    const int k = static_cast<int>(w.size()) - 1;
    const double lo = f.domain.lo();
    const double hi = f.domain.hi();
    auto [xa, xb] = x_range(f.domain, k, h);
    Candidate best;
    auto consider = [&](double x) {
        Candidate c{std::abs(diff_with(f.evaluator, w, h, x, lo, hi)), x, h};
        if (better(c, best)) {
            best = c;
        }
    };
    for (int i = 0; i < nx; ++i) {
        consider(xa + (xb - xa) * i / (nx - 1));
    }
    for (double b : f.kinks) {
        for (int j = 0; j <= k; ++j) {
            double x = b - (j - 0.5 * k) * h;
            if (x >= xa && x <= xb) {
                consider(x);
            }
        }
    }
    return best;
}

// Steps that let one difference span two breakpoints (kinks or endpoints) exactly.
std::vector<double> breakpoint_steps(const TestFunction& f, int k, double delta)
{
    std::vector<double> pts{f.domain.lo(), f.domain.hi()};
    for (double b : f.kinks) {
        if (b > f.domain.lo() && b < f.domain.hi()) {
            pts.push_back(b);
        }
    }
    std::vector<double> hs;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            const double gap = pts[j] - pts[i];
            for (int m = 1; m <= k && gap > 0.0; ++m) {
                if (gap / m <= delta) {
                    hs.push_back(gap / m);
                }
            }
        }
    }
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    return hs;
}

std::vector<double> search_steps(const TestFunction& f, int k, double delta, int nh)
{
    std::vector<double> hs;
    hs.reserve(nh);
    for (int i = 0; i < nh; ++i) {
        hs.push_back(delta * (i + 1) / nh);
    }
    const auto extra = breakpoint_steps(f, k, delta);
    hs.insert(hs.end(), extra.begin(), extra.end());
    return hs;
}

Candidate refine(const TestFunction& f, std::span<const double> w, double delta, int nx, int nh,
                 Candidate best)
{
    const int k = static_cast<int>(w.size()) - 1;
    const double dh = delta / nh;
    const double h0 = std::max(best.h - dh, dh / kRefineSteps);
    const double h1 = std::min(best.h + dh, delta);
    auto [xa0, xb0] = x_range(f.domain, k, best.h);
    const double dx = (xb0 - xa0) / (nx - 1);
    const double cx = best.x;
    for (int i = 0; i <= 2 * kRefineSteps; ++i) {
        double h = h0 + (h1 - h0) * i / (2 * kRefineSteps);
        auto [xa, xb] = x_range(f.domain, k, h);
        double x0 = std::max(cx - dx, xa);
        double x1 = std::min(cx + dx, xb);
        if (x1 < x0) {
            continue;
        }
        for (int j = 0; j <= 2 * kRefineSteps; ++j) {
            double x = x0 + (x1 - x0) * j / (2 * kRefineSteps);
            Candidate c{std::abs(diff_with(f.evaluator, w, h, x, f.domain.lo(), f.domain.hi())),
                        x, h};
            if (better(c, best)) {
                best = c;
            }
        }
        for (double b : f.kinks) {
            for (int m = 0; m <= k; ++m) {
                double x = b - (m - 0.5 * k) * h;
                if (x >= x0 && x <= x1) {
                    Candidate c{std::abs(diff_with(f.evaluator, w, h, x, f.domain.lo(),
                                                   f.domain.hi())),
                                x, h};
                    if (better(c, best)) {
                        best = c;
                    }
                }
            }
        }
    }
    return best;
}

ModulusResult to_result(const Candidate& c, ModulusGrid grid)
{
    ModulusResult r;
    r.value = c.value;
    r.argmax_x = c.x;
    r.argmax_h = c.h;
    r.grid_nx = grid.nx;
    r.grid_nh = grid.nh;
    r.refined = true;
    return r;
}

} // namespace

double central_diff(const RealFn& f, int k, double h, double x)
{
    const auto w = difference_weights(k);
    double s = 0.0;
    for (int j = 0; j <= k; ++j) {
        s += w[j] * f(x + (j - 0.5 * k) * h);
    }
    return s;
}

double central_diff(const TestFunction& f, int k, double h, double x)
{
    const double tol = 1e-12 * std::max(1.0, f.domain.length());
    const double first = x - 0.5 * k * h;
    const double last = x + 0.5 * k * h;
    if (first < f.domain.lo() - tol || last > f.domain.hi() + tol) {
        std::ostringstream msg;
        msg << "difference nodes [" << first << ", " << last << "] leave the domain of "
            << f.id;
        throw std::domain_error(msg.str());
    }
    const auto w = difference_weights(k);
    return diff_with(f.evaluator, w, h, x, f.domain.lo(), f.domain.hi());
}

ModulusResult modulus(const TestFunction& f, int k, double delta, ModulusGrid grid)
{
    validate_modulus_args(f, k, delta, grid);
    delta = std::min(delta, f.domain.length() / k);
    const auto w = difference_weights(k);
    const auto hs = search_steps(f, k, delta, grid.nh);
    const int rows_n = static_cast<int>(hs.size());
    std::vector<Candidate> rows(rows_n);
#pragma omp parallel for schedule(dynamic, 4)
    for (int i = 0; i < rows_n; ++i) {
        rows[i] = search_row(f, w, hs[i], grid.nx);
    }
    Candidate best;
    for (const auto& c : rows) {
        if (better(c, best)) {
            best = c;
        }
    }
    return to_result(refine(f, w, delta, grid.nx, grid.nh, best), grid);
}

ModulusResult modulus_serial(const TestFunction& f, int k, double delta, ModulusGrid grid)
{
    validate_modulus_args(f, k, delta, grid);
    delta = std::min(delta, f.domain.length() / k);
    const auto w = difference_weights(k);
    Candidate best;
    for (double h : search_steps(f, k, delta, grid.nh)) {
        Candidate c = search_row(f, w, h, grid.nx);
        if (better(c, best)) {
            best = c;
        }
    }
    return to_result(refine(f, w, delta, grid.nx, grid.nh, best), grid);
}

double w2k_diff(const RealFn& f, int k, double h, double x, int quad_n)
{
    if (k < 1 || !(h > 0.0)) {
        throw std::invalid_argument("w2k_diff requires k >= 1 and h > 0");
    }
    if (quad_n < 2 || quad_n % 2 != 0) {
        throw std::invalid_argument("Simpson rule needs an even positive panel count");
    }
    const auto w = difference_weights(2 * k);
    auto integrand = [&](double t) {
        double d = 0.0;
        for (int j = 0; j <= 2 * k; ++j) {
            d += w[j] * f(x + (j - k) * t);
        }
        return d * (1.0 - std::abs(t) / h) / h;
    };
    const double step = 2.0 * h / quad_n;
    double s = integrand(-h) + integrand(h);
    for (int i = 1; i < quad_n; ++i) {
        s += (i % 2 == 1 ? 4.0 : 2.0) * integrand(-h + i * step);
    }
    const double integral = s * step / 3.0;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * integral / binomial(2 * k, k).convert_to<double>();
}

double w2k_diff(const TestFunction& f, int k, double h, double x, int quad_n)
{
    const double tol = 1e-12 * std::max(1.0, f.domain.length());
    if (x - k * h < f.domain.lo() - tol || x + k * h > f.domain.hi() + tol) {
        throw std::domain_error("w2k_diff nodes leave the domain of " + f.id);
    }
    return w2k_diff(f.evaluator, k, h, x, quad_n);
}

double convolve_at(const RealFn& f, const NumericKernel& kernel, double x,
                   std::span<const double> f_breaks)
{
    std::vector<double> pts(kernel.breakpoints().begin(), kernel.breakpoints().end());
    const double r = kernel.radius();
    for (double b : f_breaks) {
        double t = x - b;
        if (t > -r && t < r) {
            pts.push_back(t);
        }
    }
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        if (pts[i + 1] - pts[i] <= 1e-15 * r) {
            continue;
        }
        total += boost::math::quadrature::gauss<double, 20>::integrate(
                [&](double t) { return f(x - t) * kernel(t); }, pts[i], pts[i + 1]);
    }
    return total;
}

W2kOperator::W2kOperator(int k, double h) : m_k(k), m_h(h), m_kernel(lambda_hat(k), h) {}

double W2kOperator::operator()(const RealFn& f, double x, std::span<const double> f_breaks) const
{
    return f(x) - convolve_at(f, m_kernel, x, f_breaks);
}

double w2k_via_kernel(const RealFn& f, int k, double h, double x, std::span<const double> f_breaks)
{
    return W2kOperator(k, h)(f, x, f_breaks);
}

namespace {

void validate_sup_args(int n)
{
    if (n < 256) {
        throw std::invalid_argument("grid_sup requires n >= 256");
    }
}

GridNorm refine_sup(const RealFn& f, const Interval& iv, int n, double value, double argmax)
{
    const double dx = iv.length() / n;
    const double a = std::max(iv.lo(), argmax - dx);
    const double b = std::min(iv.hi(), argmax + dx);
    for (int i = 0; i <= 2 * kRefineSteps; ++i) {
        double x = a + (b - a) * i / (2 * kRefineSteps);
        double v = std::abs(f(x));
        if (v > value || (v == value && x < argmax)) {
            value = v;
            argmax = x;
        }
    }
    GridNorm g;
    g.value = value;
    g.argmax = argmax;
    g.grid_n = n;
    g.interval = iv;
    return g;
}

} // namespace

GridNorm grid_sup(const RealFn& f, const Interval& iv, int n, std::span<const double> extra)
{
    validate_sup_args(n);
    std::vector<double> xs;
    xs.reserve(n + 1 + extra.size());
    for (int i = 0; i <= n; ++i) {
        xs.push_back(iv.lo() + iv.length() * i / n);
    }
    for (double e : extra) {
        if (iv.contains(e)) {
            xs.push_back(e);
        }
    }
    std::vector<double> vals(xs.size());
    const int m = static_cast<int>(xs.size());
#pragma omp parallel for schedule(static)
    for (int i = 0; i < m; ++i) {
        vals[i] = std::abs(f(xs[i]));
    }
    double value = -1.0;
    double argmax = iv.lo();
    for (int i = 0; i < m; ++i) {
        if (vals[i] > value || (vals[i] == value && xs[i] < argmax)) {
            value = vals[i];
            argmax = xs[i];
        }
    }
    return refine_sup(f, iv, n, value, argmax);
}

GridNorm grid_sup_serial(const RealFn& f, const Interval& iv, int n, std::span<const double> extra)
{
    validate_sup_args(n);
    double value = -1.0;
    double argmax = iv.lo();
    auto consider = [&](double x) {
        double v = std::abs(f(x));
        if (v > value || (v == value && x < argmax)) {
            value = v;
            argmax = x;
        }
    };
    for (int i = 0; i <= n; ++i) {
        consider(iv.lo() + iv.length() * i / n);
    }
    for (double e : extra) {
        if (iv.contains(e)) {
            consider(e);
        }
    }
    return refine_sup(f, iv, n, value, argmax);
}

} // namespace japprox
