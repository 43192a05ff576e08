#include "japprox/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace japprox {

BigInt binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

namespace {

std::vector<SplineKernel::Term> normalize(std::vector<SplineKernel::Term> terms)
{
    std::map<Rational, Rational> merged;
    for (auto& t : terms) {
        merged[t.shift] += t.coeff;
    }
    std::vector<SplineKernel::Term> out;
    out.reserve(merged.size());
    for (auto& [shift, coeff] : merged) {
        if (coeff != 0) {
            out.push_back({shift, coeff});
        }
    }
    return out;
}

} // namespace

SplineKernel::SplineKernel(int order, std::vector<Term> terms)
    : m_order(order), m_terms(normalize(std::move(terms)))
{
    if (order < 1) {
        throw std::invalid_argument("kernel order must be positive");
    }
}

Rational SplineKernel::mass() const
{
    Rational s = 0;
    for (const auto& t : m_terms) {
        s += t.coeff;
    }
    return s;
}

Rational SplineKernel::abs_coeff_sum() const
{
    Rational s = 0;
    for (const auto& t : m_terms) {
        s += abs(t.coeff);
    }
    return s;
}

Rational SplineKernel::coeff_at(const Rational& shift) const
{
    auto it = std::lower_bound(m_terms.begin(), m_terms.end(), shift,
                               [](const Term& t, const Rational& s) { return t.shift < s; });
    if (it != m_terms.end() && it->shift == shift) {
        return it->coeff;
    }
    return 0;
}

Rational SplineKernel::support_radius() const
{
    Rational r = 0;
    for (const auto& t : m_terms) {
        r = std::max(r, Rational(abs(t.shift)));
    }
    return r + Rational(m_order, 2);
}

SplineKernel SplineKernel::scaled(const Rational& factor) const
{
    std::vector<Term> terms = m_terms;
    for (auto& t : terms) {
        t.coeff *= factor;
    }
    return SplineKernel(m_order, std::move(terms));
}

SplineKernel operator+(const SplineKernel& a, const SplineKernel& b)
{
    if (a.order() != b.order()) {
        throw std::invalid_argument("cannot add kernels of different order");
    }
    std::vector<SplineKernel::Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return SplineKernel(a.order(), std::move(terms));
}

SplineKernel box_kernel(const Rational& shift)
{
    return SplineKernel(1, {{shift, 1}});
}

Rational a_coeff(int j, int k)
{
    if (k < 1 || j < 0 || j > k) {
        throw std::invalid_argument("a_coeff requires 0 <= j <= k, k >= 1");
    }
    return Rational(binomial(2 * k, k + j), binomial(2 * k, k));
}

SplineKernel decompose_chi_square(int j)
{
    if (j < 1) {
        throw std::invalid_argument("decompose_chi_square requires j >= 1");
    }
    // chi_{jh} = (1/j) sum_{i<j} chi_h( . - (-(j-1)/2 + i) h )
    std::vector<SplineKernel::Term> boxes;
    for (int i = 0; i < j; ++i) {
        boxes.push_back({Rational(-(j - 1), 2) + i, Rational(1, j)});
    }
    SplineKernel chi_jh(1, std::move(boxes));
    return convolve(chi_jh, chi_jh);
}

SplineKernel lambda_hat(int k)
{
    if (k < 1) {
        throw std::invalid_argument("lambda_hat requires k >= 1");
    }
    SplineKernel sum(2, {});
    for (int j = 1; j <= k; ++j) {
        Rational w = 2 * a_coeff(j, k);
        if (j % 2 == 0) {
            w = -w;
        }
        sum = sum + decompose_chi_square(j).scaled(w);
    }
    return sum;
}

Rational alpha_coeff(int l, int k)
{
    const int al = std::abs(l);
    if (k < 1 || al > k - 1) {
        throw std::invalid_argument("alpha_coeff requires |l| <= k - 1");
    }
    Rational s = 0;
    for (int j = al + 1; j <= k; ++j) {
        Rational term = Rational(j - al, j * j) * a_coeff(j, k);
        s += (j % 2 == 1) ? term : Rational(-term);
    }
    return 2 * s;
}

Rational gamma(int k)
{
    if (k < 1) {
        throw std::invalid_argument("gamma requires k >= 1");
    }
    Rational s = 0;
    for (int l = -(k - 1); l <= k - 1; ++l) {
        s += abs(alpha_coeff(l, k));
    }
    return s;
}

Rational gamma_odd_sum(int k)
{
    if (k < 1) {
        throw std::invalid_argument("gamma_odd_sum requires k >= 1");
    }
    Rational s = 0;
    for (int j = 1; j <= k; j += 2) {
        s += a_coeff(j, k) / (j * j);
    }
    return 2 * s;
}

SplineKernel convolve(const SplineKernel& a, const SplineKernel& b)
{
    std::vector<SplineKernel::Term> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            terms.push_back({ta.shift + tb.shift, ta.coeff * tb.coeff});
        }
    }
    return SplineKernel(a.order() + b.order(), std::move(terms));
}

SplineKernel lambda_power(int k, int j)
{
    if (j < 1) {
        throw std::invalid_argument("lambda_power requires j >= 1");
    }
    const SplineKernel base = lambda_hat(k);
    SplineKernel p = base;
    for (int i = 1; i < j; ++i) {
        p = convolve(p, base);
    }
    return p;
}

double cardinal_bspline(int order, double x)
{
    if (order < 1) {
        throw std::invalid_argument("B-spline order must be positive");
    }
    if (order == 1) {
        return std::abs(x) <= 0.5 ? 1.0 : 0.0;
    }
    const double t = x + 0.5 * order;
    if (!(t > 0.0) || !(t < order)) {
        return 0.0;
    }
    const int cell = static_cast<int>(std::floor(t));
    const double u = t - cell;
    // b[j] = M_r(u + j), the order-r spline on knots 0..r
    std::vector<double> b(order, 0.0);
    b[0] = 1.0;
    for (int r = 2; r <= order; ++r) {
        for (int j = r - 1; j >= 0; --j) {
            double left = (j < r - 1) ? (u + j) * b[j] : 0.0;
            double right = (j > 0) ? (r - u - j) * b[j - 1] : 0.0;
            b[j] = (left + right) / (r - 1);
        }
    }
    return b[cell];
}

double eval_kernel(const SplineKernel& kernel, double h, double x)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("kernel scale h must be positive");
    }
    double s = 0.0;
    for (const auto& t : kernel.terms()) {
        s += to_double(t.coeff) * cardinal_bspline(kernel.order(), x / h - to_double(t.shift));
    }
    return s / h;
}

NumericKernel::NumericKernel(const SplineKernel& kernel, double h)
    : m_order(kernel.order()), m_h(h), m_radius(to_double(kernel.support_radius()) * h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("kernel scale h must be positive");
    }
    for (const auto& t : kernel.terms()) {
        m_shifts.push_back(to_double(t.shift));
        m_coeffs.push_back(to_double(t.coeff));
        for (int i = 0; i <= m_order; ++i) {
            m_breaks.push_back((to_double(t.shift) - 0.5 * m_order + i) * h);
        }
    }
    std::sort(m_breaks.begin(), m_breaks.end());
    m_breaks.erase(std::unique(m_breaks.begin(), m_breaks.end(),
                               [h](double a, double b) { return std::abs(a - b) < 1e-14 * h; }),
                   m_breaks.end());
}

double NumericKernel::operator()(double x) const
{
    if (std::abs(x) >= m_radius) {
        return 0.0;
    }
    const double u = x / m_h;
    double s = 0.0;
    for (std::size_t i = 0; i < m_shifts.size(); ++i) {
        s += m_coeffs[i] * cardinal_bspline(m_order, u - m_shifts[i]);
    }
    return s / m_h;
}

namespace {

std::vector<Rational> exact_knots(const SplineKernel& kernel)
{
    std::vector<Rational> knots;
    for (const auto& t : kernel.terms()) {
        for (int i = 0; i <= kernel.order(); ++i) {
            knots.push_back(t.shift - Rational(kernel.order(), 2) + i);
        }
    }
    std::sort(knots.begin(), knots.end());
    knots.erase(std::unique(knots.begin(), knots.end()), knots.end());
    return knots;
}

Rational hat_value(const SplineKernel& kernel, const Rational& x)
{
    Rational v = 0;
    for (const auto& t : kernel.terms()) {
        Rational d = abs(Rational(x - t.shift));
        if (d < 1) {
            v += t.coeff * (1 - d);
        }
    }
    return v;
}

} // namespace

Rational l1_norm_exact(const SplineKernel& kernel)
{
    if (kernel.order() != 2) {
        throw std::invalid_argument("exact L1 norm is only available for order-2 kernels");
    }
    const auto knots = exact_knots(kernel);
    Rational total = 0;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const Rational len = knots[i + 1] - knots[i];
        const Rational a = hat_value(kernel, knots[i]);
        const Rational b = hat_value(kernel, knots[i + 1]);
        if (a * b >= 0) {
            total += (abs(a) + abs(b)) / 2 * len;
        } else {
            // linear piece crosses zero: two triangles
            total += (a * a + b * b) / (2 * (abs(a) + abs(b))) * len;
        }
    }
    return total;
}

double l1_norm(const SplineKernel& kernel, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("kernel scale h must be positive");
    }
    if (kernel.order() == 2) {
        return to_double(l1_norm_exact(kernel));
    }
    const NumericKernel nk(kernel, h);
    const auto& br = nk.breakpoints();
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < br.size(); ++i) {
        double err = 0.0;
        total += boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                [&](double x) { return std::abs(nk(x)); }, br[i], br[i + 1], 20, 1e-13, &err);
    }
    return total;
}

} // namespace japprox
