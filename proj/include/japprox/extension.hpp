#pragma once

#include <vector>

#include "japprox/corpus.hpp"
#include "japprox/moduli.hpp"
#include "japprox/polynomial.hpp"

namespace japprox {

/// Continuation g_f of a function on [-1, 1] to the whole line: the degree
/// 2k - 1 minimax polynomials of f on [-1, -1 + 2kh] and [1 - 2kh, 1] are used
/// to the left and right of the interval. g_f may jump at +-1 by the boundary
/// approximation error.
class ExtendedFunction
{
public:
    ExtendedFunction(TestFunction core, Polynomial p_minus, Polynomial p_plus, int k, double h);

    double operator()(double x) const;
    /// Refers to *this, which must outlive the returned function.
    RealFn as_function() const;

    const TestFunction& core() const { return m_core; }
    const Polynomial& p_minus() const { return m_minus; }
    const Polynomial& p_plus() const { return m_plus; }
    int k() const { return m_k; }
    double h() const { return m_h; }

    /// p_minus(-1) - f(-1) and p_plus(1) - f(1).
    double jump_minus() const;
    double jump_plus() const;

    /// Kinks of f, the points +-1, and nothing else.
    std::vector<double> breakpoints() const;

    /// [-1 - 2kh, 1 + 2kh], outside of which every measured quantity vanishes.
    Interval effective_support() const;

private:
    TestFunction m_core;
    Polynomial m_minus;
    Polynomial m_plus;
    int m_k;
    double m_h;
};

/// Requires 0 < h < 1/(2k) and a continuous f on [-1, 1].
ExtendedFunction extend(const TestFunction& f, int k, double h);

struct ExtensionOptions
{
    int sup_grid = 2048;
    ModulusGrid modulus_grid{};
};

struct ExtensionReport
{
    std::string function_id;
    int k = 1;
    double h = 0.0;
    double W_norm = 0.0;      // sup |W_{2k}(g_f, x, chi_h^2)|
    double D_norm = 0.0;      // sup |central 2k-th difference of g_f|
    double omega = 0.0;       // omega_{2k}(f, h) on [-1, 1]
    double W_ratio = 0.0;
    double D_ratio = 0.0;
    double d_k_bound = 0.0;
    double d_k_star_bound = 0.0;
    bool degenerate = false;  // omega <= 1e-13
    bool W_pass = false;
    bool D_pass = false;
};

ExtensionReport extension_report(const TestFunction& f, int k, double h,
                                 const ExtensionOptions& options = {});

/// Norms of W_{2k}(g, ., chi_h^2) and of the 2k-th central difference of g
/// over the effective support, shared with the Neumann diagnostic.
struct ExtensionNorms
{
    double W_norm = 0.0;
    double D_norm = 0.0;
};

ExtensionNorms extension_norms(const ExtendedFunction& g, int sup_grid = 2048);

} // namespace japprox
