#pragma once

#include <span>
#include <vector>

#include "japprox/corpus.hpp"
#include "japprox/kernel.hpp"

namespace japprox {

/// Search grid for moduli of smoothness. Both sizes must be >= 64.
struct ModulusGrid
{
    int nx = 2048;
    int nh = 512;
};

struct ModulusResult
{
    double value = 0.0;
    double argmax_x = 0.0;
    double argmax_h = 0.0;
    int grid_nx = 0;
    int grid_nh = 0;
    bool refined = false;
};

struct GridNorm
{
    double value = 0.0;
    double argmax = 0.0;
    int grid_n = 0;
    Interval interval = unit_interval();
};

/// Signed binomial weights (-1)^(k-j) C(k, j), j = 0..k.
std::vector<double> difference_weights(int k);

/// Central difference sum_j (-1)^(k-j) C(k,j) f(x + j h - k h / 2) for a
/// function defined on the whole line.
double central_diff(const RealFn& f, int k, double h, double x);

/// As above, but every node must lie in the domain of `f` (up to rounding).
/// Throws std::domain_error otherwise.
double central_diff(const TestFunction& f, int k, double h, double x);

/// omega_k(f, delta): sup of |central difference| over 0 < h <= delta and all
/// x whose nodes stay in the domain. Coarse (x, h) grid search followed by one
/// factor-16 refinement around the coarse argmax. OpenMP-parallel over h rows;
/// the result does not depend on the number of threads.
ModulusResult modulus(const TestFunction& f, int k, double delta, ModulusGrid grid = {});

/// Single-threaded reference for `modulus`; returns identical results.
ModulusResult modulus_serial(const TestFunction& f, int k, double delta, ModulusGrid grid = {});

/// W_{2k}(f, x, chi_h^2) from its defining integral of central differences
/// against the hat weight, by composite Simpson on [-h, h].
double w2k_diff(const RealFn& f, int k, double h, double x, int quad_n = 256);
double w2k_diff(const TestFunction& f, int k, double h, double x, int quad_n = 256);

/// (K * f)(x) = integral of f(x - t) K(t) dt. Gauss-Legendre on every piece
/// between kernel knots and the points where x - t crosses `f_breaks`.
double convolve_at(const RealFn& f, const NumericKernel& kernel, double x,
                   std::span<const double> f_breaks = {});

/// W_{2k}(f, x, chi_h^2) = f(x) - (Lambda_{2k} * f)(x), with the kernel
/// built once for a fixed (k, h).
class W2kOperator
{
public:
    W2kOperator(int k, double h);

    double operator()(const RealFn& f, double x, std::span<const double> f_breaks = {}) const;

    int k() const { return m_k; }
    double h() const { return m_h; }

private:
    int m_k;
    double m_h;
    NumericKernel m_kernel;
};

double w2k_via_kernel(const RealFn& f, int k, double h, double x,
                      std::span<const double> f_breaks = {});

/// max |f| over n + 1 equispaced points of the interval plus `extra` points
/// inside it, then one refinement pass around the argmax. n >= 256.
GridNorm grid_sup(const RealFn& f, const Interval& interval, int n,
                  std::span<const double> extra = {});

/// Single-threaded reference for `grid_sup`.
GridNorm grid_sup_serial(const RealFn& f, const Interval& interval, int n,
                         std::span<const double> extra = {});

} // namespace japprox
