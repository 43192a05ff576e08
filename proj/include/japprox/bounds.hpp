#pragma once

#include <map>

#include "japprox/rational.hpp"

namespace japprox {

/// Symmetric partial sum (4/pi) sum_{|j| <= terms} (4j+1)^(-m-1).
double favard_partial_sum(int m, long terms);

/// Favard constant K_m: the partial sum plus a midpoint-integral estimate
/// of the remaining tail, which makes K_0 usable at all.
double favard(int m, long terms);

/// Closed forms K_0..K_8.
double favard_closed_form(int m);

struct FavardTable
{
    std::map<int, double> values;
    long terms_used = 0;
};

FavardTable favard_table(int max_m, long terms);

struct SeriesValue
{
    double value = 0.0;
    double tail_bound = 0.0;
};

/// sum_{j=0..jmax} K_{2j} rho^(-2j), which converges to sec(pi / (2 rho)).
/// tail_bound = 2 K_{2 jmax} rho^(-2 jmax) / (1 - rho^-2). Requires rho > 1.
SeriesValue sec_series(double rho, int jmax);

/// Upper bound for J_a(2k, alpha) with k >= 5, valid for 1 < alpha <= (2k-1)/pi:
/// 3 (2 + e^-2) (2 sec(pi / (2 alpha)) - 1 - K_2 / alpha^2).
double theorem1_bound(int k, double alpha);

/// The same expression with rho = alpha pi / (2 sqrt(gamma_k)) in place of alpha;
/// never larger than theorem1_bound.
double theorem1_bound_rho(int k, double alpha);

/// Upper bounds for J_a(2k, alpha), k = 1..4, alpha > 0, in closed form.
double theorem2_bound(int k, double alpha);

/// theorem2_bound rebuilt from the general estimate
/// d_k (1 + K_2 b + 2 sum_{2 <= j < k} K_{2j} b^j) + 2 d*_k K_{2k} 4^-k b^k
/// with b = beta_k, d_k = c_k and d*_k = 4^k (k = 2..4); for k = 1 it is
/// 0.75 + 1.5 K_2 / (alpha pi)^2.
double theorem2_bound_chain(int k, double alpha);

/// Whichever bound applies to modulus order 2k.
double jackson_bound(int k, double alpha);

/// Smallest n for which the bound for J_a(2k, .) is stated.
int jackson_n_threshold(int k);

struct BoundParams
{
    int k = 1;
    double alpha = 1.0;
    int n = 1;
    double h = 0.0;       // alpha pi / n
    double delta_k = 0.0; // 4 gamma_k / (h n)^2
    double rho = 0.0;     // delta_k^(-1/2)
    double beta_k = 0.0;  // 4 gamma_k / (pi alpha)^2
    double gamma_k = 0.0;
};

/// Builds the parameters and checks delta_k == beta_k and
/// rho == alpha pi / (2 sqrt(gamma_k)) to 1e-12 relative; throws
/// std::logic_error if either identity fails.
BoundParams make_bound_params(int k, double alpha, int n);

struct In2Check
{
    Rational ratio;
    bool below_two = false;
};

/// n^m / (n (n-1) ... (n-m+1)) exactly; requires m >= 4, n >= m (m - 1).
In2Check check_in2(int m, long n);

/// (-1)^(j+1) j + 2 sum_{l=1}^{j-1} (-1)^(l+1) l, evaluated term by term.
long sigma(long j);

/// c_k: 1 + bound on the L1 norm of Lambda_{2k}.
double c_constant(int k);
/// d_k: extension bound for the special difference.
double d_constant(int k);
/// d*_k: extension bound for the central difference.
double d_star_constant(int k);
/// w_k: Whitney constant.
double whitney_constant(int k);

struct ConstantTables
{
    double (*c)(int) = c_constant;
    double (*d)(int) = d_constant;
    double (*d_star)(int) = d_star_constant;
    double (*w)(int) = whitney_constant;
};

ConstantTables constant_tables();

} // namespace japprox
