#include "japprox/polynomial.hpp"

#include <cmath>
#include <stdexcept>

namespace japprox {

Polynomial::Polynomial(Interval interval, std::vector<double> cheb_coeffs)
    : m_interval(interval), m_coeffs(std::move(cheb_coeffs))
{
    if (m_coeffs.empty()) {
        throw std::invalid_argument("polynomial needs at least one coefficient");
    }
    for (double c : m_coeffs) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("polynomial coefficients must be finite");
        }
    }
}

double chebyshev_sum(const std::vector<double>& coeffs, double t)
{
    double b1 = 0.0;
    double b2 = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 1;) {
        double b0 = coeffs[j] + 2.0 * t * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    return coeffs[0] + t * b1 - b2;
}

double Polynomial::operator()(double x) const
{
    const double t = (2.0 * x - m_interval.lo() - m_interval.hi()) / m_interval.length();
    return chebyshev_sum(m_coeffs, t);
}

std::vector<double> Polynomial::monomial_coeffs() const
{
    const std::size_t n = m_coeffs.size();
    // t = a x + b
    const double a = 2.0 / m_interval.length();
    const double b = -(m_interval.lo() + m_interval.hi()) / m_interval.length();
    std::vector<double> prev(n, 0.0); // T_{j-1}(t(x)) in powers of x
    std::vector<double> cur(n, 0.0);  // T_j(t(x))
    std::vector<double> out(n, 0.0);
    prev[0] = 1.0;
    out[0] = m_coeffs[0];
    if (n == 1) {
        return out;
    }
    cur[0] = b;
    cur[1] = a;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] += m_coeffs[1] * cur[i];
    }
    for (std::size_t j = 2; j < n; ++j) {
        std::vector<double> next(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double v = 2.0 * b * cur[i] - prev[i];
            if (i > 0) {
                v += 2.0 * a * cur[i - 1];
            }
            next[i] = v;
        }
        prev = std::move(cur);
        cur = std::move(next);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] += m_coeffs[j] * cur[i];
        }
    }
    return out;
}

} // namespace japprox
