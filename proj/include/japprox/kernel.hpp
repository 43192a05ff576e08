#pragma once

#include <vector>

#include "japprox/rational.hpp"

namespace japprox {

/// Exact linear combination of shifted m-fold self-convolutions of the
/// unit-mass box of width h.
///
/// The scale h stays symbolic: shifts are rational multiples of h and h is
/// bound only when the kernel is evaluated. Order 1 is the box chi_h, order 2
/// the hat chi_h^2, order m the centered cardinal B-spline B_m(x/h)/h.
///
/// Terms are kept sorted by shift with distinct shifts and no zero
/// coefficients.
class SplineKernel
{
public:
    struct Term
    {
        Rational shift;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    SplineKernel(int order, std::vector<Term> terms);

    int order() const { return m_order; }
    const std::vector<Term>& terms() const { return m_terms; }

    /// Integral of the kernel; every basis spline has unit mass.
    Rational mass() const;
    Rational abs_coeff_sum() const;
    /// Zero when no term sits at `shift`.
    Rational coeff_at(const Rational& shift) const;
    /// Half-width of the support in units of h: max |shift| + order / 2.
    Rational support_radius() const;

    SplineKernel scaled(const Rational& factor) const;

    friend SplineKernel operator+(const SplineKernel& a, const SplineKernel& b);
    friend bool operator==(const SplineKernel&, const SplineKernel&) = default;

private:
    int m_order;
    std::vector<Term> m_terms;
};

/// chi_h as an order-1 kernel.
SplineKernel box_kernel(const Rational& shift = 0);

/// C(2k, k+j) / C(2k, k).
Rational a_coeff(int j, int k);

/// chi_{jh}^2 written as a combination of shifted chi_h^2, built by convolving
/// the box decomposition of chi_{jh} with itself.
SplineKernel decompose_chi_square(int j);

/// The smoothing kernel Lambda_{2k} = 2 sum_{j=1..k} (-1)^(j+1) a_{j,k} chi_{jh}^2
/// as a combination of equal-width shifted hats.
SplineKernel lambda_hat(int k);

/// Closed-form hat coefficient of Lambda_{2k} at shift l*h, |l| <= k-1.
Rational alpha_coeff(int l, int k);

/// Sum of |alpha_coeff(l, k)| over l. gamma(1) = 1 (the single coefficient).
Rational gamma(int k);

/// 2 * sum over odd j <= k of a_{j,k} / j^2.
Rational gamma_odd_sum(int k);

SplineKernel convolve(const SplineKernel& a, const SplineKernel& b);

/// j-fold convolution power of lambda_hat(k).
SplineKernel lambda_power(int k, int j);

/// Centered cardinal B-spline of order m (support [-m/2, m/2]), evaluated by
/// the order-raising recurrence.
double cardinal_bspline(int order, double x);

double eval_kernel(const SplineKernel& kernel, double h, double x);

/// Double-precision copy of a kernel for repeated evaluation.
class NumericKernel
{
public:
    NumericKernel(const SplineKernel& kernel, double h);

    double operator()(double x) const;
    double h() const { return m_h; }
    int order() const { return m_order; }
    /// Support is [-radius, radius].
    double radius() const { return m_radius; }
    /// Sorted points where the kernel is not smooth, i.e. the knots.
    const std::vector<double>& breakpoints() const { return m_breaks; }

private:
    int m_order;
    double m_h;
    double m_radius;
    std::vector<double> m_shifts;
    std::vector<double> m_coeffs;
    std::vector<double> m_breaks;
};

/// Exact integral of |K| (scale-free) for order-2 kernels, where K is
/// piecewise linear with rational knots. Throws for other orders.
Rational l1_norm_exact(const SplineKernel& kernel);

/// Integral of |K| over the real line at scale h. Exact for order 2,
/// adaptive Gauss-Kronrod on each knot interval otherwise.
double l1_norm(const SplineKernel& kernel, double h);

} // namespace japprox
