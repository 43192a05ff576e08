#pragma once

#include <vector>

#include "japprox/corpus.hpp"

namespace japprox {

/// Polynomial in the Chebyshev basis of its interval: sum c_j T_j(t) with
/// t = (2x - lo - hi) / (hi - lo).
class Polynomial
{
public:
    Polynomial(Interval interval, std::vector<double> cheb_coeffs);

    const Interval& interval() const { return m_interval; }
    const std::vector<double>& cheb_coeffs() const { return m_coeffs; }
    int degree() const { return static_cast<int>(m_coeffs.size()) - 1; }

    /// Clenshaw evaluation; valid (as a polynomial) for x outside the interval too.
    double operator()(double x) const;

    /// Coefficients a_j of sum a_j x^j. For display only; ill-conditioned at
    /// high degree.
    std::vector<double> monomial_coeffs() const;

private:
    Interval m_interval;
    std::vector<double> m_coeffs;
};

/// Clenshaw sum of sum c_j T_j(t).
double chebyshev_sum(const std::vector<double>& coeffs, double t);

} // namespace japprox
