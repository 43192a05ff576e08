#pragma once

#include <vector>

#include "japprox/corpus.hpp"
#include "japprox/moduli.hpp"
#include "japprox/polynomial.hpp"

namespace japprox {

struct RemezOptions
{
    /// Stop once error_hi - error_lo <= certify_tol * error_hi.
    double certify_tol = 1e-9;
    /// Dense residual grid has grid_factor * (degree + 2) Chebyshev points.
    int grid_factor = 32;
    int max_iter = 100;
    /// Extra residual sample points (non-smooth points of f).
    std::vector<double> kinks;
};

/// Minimax polynomial with a de la Vallee Poussin bracket on the error.
///
/// error_lo is the levelled error on the final reference (a rigorous lower
/// bound on the minimax error); error_hi is the sup of the residual over the
/// refined dense grid. `certified` is false when the bracket did not close
/// within max_iter, or the exchange stalled.
struct RemezResult
{
    Polynomial poly;
    double error_lo = 0.0;
    double error_hi = 0.0;
    std::vector<double> reference;
    int iterations = 0;
    bool certified = false;

    double error() const { return 0.5 * (error_lo + error_hi); }
};

RemezResult remez(const RealFn& f, const Interval& interval, int degree,
                  const RemezOptions& options = {});

/// Uses the kinks of `f` that fall inside `interval`.
RemezResult remez(const TestFunction& f, const Interval& interval, int degree,
                  double certify_tol = 1e-9);

/// E_{n-1}(f) on the interval: best uniform error by polynomials of degree n - 1.
double best_error(const TestFunction& f, const Interval& interval, int n);

/// Degree 2k - 1 minimax polynomial of f on `interval`.
Polynomial whitney_poly(const TestFunction& f, const Interval& interval, int k);

struct WhitneyCheck
{
    Interval interval = unit_interval();
    int k = 1;
    double E = 0.0;
    double omega = 0.0;
    double ratio = 0.0;
    double bound_wk = 0.0;
    bool degenerate = false;
    bool pass = false;
};

/// Compares E_{k-1}(f) on the interval with w_k * omega_k(f, (b - a)/k).
/// `pass` means ratio <= w_k + slack; degenerate (omega <= 1e-13) cases pass
/// vacuously and are flagged.
WhitneyCheck whitney_check(const TestFunction& f, const Interval& interval, int k,
                           ModulusGrid grid = {}, double slack = 5e-3);

/// f with its domain replaced by `interval` (which must lie inside the
/// original domain) and kinks filtered to it.
TestFunction restrict_to(const TestFunction& f, const Interval& interval);

} // namespace japprox
