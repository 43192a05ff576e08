#include "japprox/extension.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "japprox/bounds.hpp"
#include "japprox/remez.hpp"

namespace japprox {

ExtendedFunction::ExtendedFunction(TestFunction core, Polynomial p_minus, Polynomial p_plus, int k,
                                   double h)
    : m_core(std::move(core)), m_minus(std::move(p_minus)), m_plus(std::move(p_plus)), m_k(k), m_h(h)
{
}

double ExtendedFunction::operator()(double x) const
{
    if (x < -1.0) {
        return m_minus(x);
    }
    if (x > 1.0) {
        return m_plus(x);
    }
    return m_core(x);
}

RealFn ExtendedFunction::as_function() const
{
    return [this](double x) { return (*this)(x); };
}

double ExtendedFunction::jump_minus() const
{
    return m_minus(-1.0) - m_core(-1.0);
}

double ExtendedFunction::jump_plus() const
{
    return m_plus(1.0) - m_core(1.0);
}

std::vector<double> ExtendedFunction::breakpoints() const
{
    std::vector<double> b = m_core.kinks;
    b.push_back(-1.0);
    b.push_back(1.0);
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
}

Interval ExtendedFunction::effective_support() const
{
    return Interval(-1.0 - 2.0 * m_k * m_h, 1.0 + 2.0 * m_k * m_h);
}

ExtendedFunction extend(const TestFunction& f, int k, double h)
{
    if (k < 1) {
        throw std::invalid_argument("extend requires k >= 1");
    }
    if (!(h > 0.0) || !(h < 1.0 / (2.0 * k))) {
        std::ostringstream msg;
        msg << "extend requires 0 < h < 1/(2k) = " << 1.0 / (2.0 * k) << ", got h = " << h;
        throw std::domain_error(msg.str());
    }
    if (f.domain != unit_interval()) {
        throw std::invalid_argument("extend expects a function on [-1, 1]");
    }
    const double w = 2.0 * k * h;
    Polynomial minus = whitney_poly(f, Interval(-1.0, -1.0 + w), k);
    Polynomial plus = whitney_poly(f, Interval(1.0 - w, 1.0), k);
    return ExtendedFunction(f, std::move(minus), std::move(plus), k, h);
}

ExtensionNorms extension_norms(const ExtendedFunction& g, int sup_grid)
{
    const int k = g.k();
    const double h = g.h();
    const Interval support = g.effective_support();
    const std::vector<double> breaks = g.breakpoints();
    const RealFn gf = g.as_function();

    // candidate points: where a difference node or a kernel knot meets a breakpoint
    std::vector<double> extra;
    for (double b : breaks) {
        for (int j = -2 * k; j <= 2 * k; ++j) {
            extra.push_back(b + j * h);
        }
    }

    const W2kOperator W(k, h);
    auto w_fn = [&](double x) { return W(gf, x, breaks); };
    const auto weights = difference_weights(2 * k);
    auto d_fn = [&](double x) {
        double s = 0.0;
        for (int j = 0; j <= 2 * k; ++j) {
            s += weights[j] * gf(x + (j - k) * h);
        }
        return s;
    };
    ExtensionNorms n;
    n.W_norm = grid_sup(w_fn, support, sup_grid, extra).value;
    n.D_norm = grid_sup(d_fn, support, sup_grid, extra).value;
    return n;
}

ExtensionReport extension_report(const TestFunction& f, int k, double h,
                                 const ExtensionOptions& options)
{
    const ExtendedFunction g = extend(f, k, h);
    const ExtensionNorms norms = extension_norms(g, options.sup_grid);
    ExtensionReport r;
    r.function_id = f.id;
    r.k = k;
    r.h = h;
    r.W_norm = norms.W_norm;
    r.D_norm = norms.D_norm;
    r.omega = modulus(f, 2 * k, h, options.modulus_grid).value;
    r.d_k_bound = d_constant(k);
    r.d_k_star_bound = d_star_constant(k);
    if (r.omega <= 1e-13) {
        r.degenerate = true;
        r.W_pass = true;
        r.D_pass = true;
        return r;
    }
    r.W_ratio = r.W_norm / r.omega;
    r.D_ratio = r.D_norm / r.omega;
    r.W_pass = r.W_ratio <= r.d_k_bound;
    r.D_pass = r.D_ratio <= r.d_k_star_bound;
    return r;
}

} // namespace japprox
