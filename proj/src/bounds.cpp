#include "japprox/bounds.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "japprox/kernel.hpp"

namespace japprox {

namespace {

constexpr double kPi = std::numbers::pi;

double e2()
{
    return std::exp(-2.0);
}

// (4j+1)^-s + (-1)^s (4j-1)^-s: the j and -j terms together
double paired_term(int s, double j)
{
    double plus = std::pow(4.0 * j + 1.0, -s);
    double minus = std::pow(4.0 * j - 1.0, -s);
    return (s % 2 == 0) ? plus + minus : plus - minus;
}

double paired_tail(int s, double from)
{
    // integral of paired_term over [from, inf)
    if (s == 1) {
        return -0.25 * std::log1p(2.0 / (4.0 * from - 1.0));
    }
    double plus = std::pow(4.0 * from + 1.0, 1 - s);
    double minus = std::pow(4.0 * from - 1.0, 1 - s);
    double signed_minus = (s % 2 == 0) ? minus : -minus;
    return (plus + signed_minus) / (4.0 * (s - 1));
}

} // namespace

double favard_partial_sum(int m, long terms)
{
    if (m < 0 || terms < 1) {
        throw std::invalid_argument("favard requires m >= 0 and terms >= 1");
    }
    const int s = m + 1;
    double sum = 0.0;
    for (long j = terms; j >= 1; --j) {
        sum += paired_term(s, static_cast<double>(j));
    }
    return 4.0 / kPi * (1.0 + sum);
}

double favard(int m, long terms)
{
    const double tail = paired_tail(m + 1, static_cast<double>(terms) + 0.5);
    return favard_partial_sum(m, terms) + 4.0 / kPi * tail;
}

double favard_closed_form(int m)
{
    switch (m) {
    case 0: return 1.0;
    case 1: return kPi / 2.0;
    case 2: return std::pow(kPi, 2) / 8.0;
    case 3: return std::pow(kPi, 3) / 24.0;
    case 4: return 5.0 * std::pow(kPi, 4) / 384.0;
    case 5: return std::pow(kPi, 5) / 240.0;
    case 6: return 61.0 * std::pow(kPi, 6) / 46080.0;
    case 7: return 17.0 * std::pow(kPi, 7) / 40320.0;
    case 8: return 277.0 * std::pow(kPi, 8) / 2064384.0;
    default: throw std::invalid_argument("no closed form stored for this Favard constant");
    }
}

FavardTable favard_table(int max_m, long terms)
{
    FavardTable t;
    t.terms_used = terms;
    for (int m = 0; m <= max_m; ++m) {
        t.values[m] = favard(m, terms);
    }
    return t;
}

SeriesValue sec_series(double rho, int jmax)
{
    if (!(rho > 1.0)) {
        throw std::domain_error("sec_series requires rho > 1");
    }
    if (jmax < 0) {
        throw std::invalid_argument("sec_series requires jmax >= 0");
    }
    const double q = 1.0 / (rho * rho);
    double sum = 0.0;
    double pw = std::pow(q, jmax);
    for (int j = jmax; j >= 0; --j) {
        sum += favard(2 * j, 4096) * pw;
        pw /= q;
    }
    SeriesValue v;
    v.value = sum;
    v.tail_bound = 2.0 * favard(2 * jmax, 4096) * std::pow(q, jmax) / (1.0 - q);
    return v;
}

namespace {

double theorem1_expr(double x)
{
    return 3.0 * (2.0 + e2()) *
           (2.0 / std::cos(kPi / (2.0 * x)) - 1.0 - favard_closed_form(2) / (x * x));
}

void check_theorem1_window(int k, double alpha)
{
    if (k < 5) {
        throw std::domain_error("theorem1_bound applies to k >= 5");
    }
    const double amax = (2.0 * k - 1.0) / kPi;
    if (!(alpha > 1.0) || alpha > amax) {
        std::ostringstream msg;
        msg << "theorem1_bound requires 1 < alpha <= (2k - 1)/pi = " << amax << ", got alpha = "
            << alpha;
        throw std::domain_error(msg.str());
    }
}

} // namespace

double theorem1_bound(int k, double alpha)
{
    check_theorem1_window(k, alpha);
    return theorem1_expr(alpha);
}

double theorem1_bound_rho(int k, double alpha)
{
    check_theorem1_window(k, alpha);
    const double rho = alpha * kPi / (2.0 * std::sqrt(to_double(gamma(k))));
    return theorem1_expr(rho);
}

namespace {

double beta(int k, double alpha)
{
    return 4.0 * to_double(gamma(k)) / (kPi * kPi * alpha * alpha);
}

void check_theorem2_args(int k, double alpha)
{
    if (k < 1 || k > 4) {
        throw std::domain_error("theorem2_bound covers k = 1..4 only");
    }
    if (!(alpha > 0.0)) {
        throw std::domain_error("theorem2_bound requires alpha > 0");
    }
}

} // namespace

double theorem2_bound(int k, double alpha)
{
    check_theorem2_args(k, alpha);
    const double K2 = favard_closed_form(2);
    const double K4 = favard_closed_form(4);
    const double K6 = favard_closed_form(6);
    const double K8 = favard_closed_form(8);
    switch (k) {
    case 1: return 0.75 * (1.0 + 1.0 / (4.0 * alpha * alpha));
    case 2: {
        const double b = beta(2, alpha);
        return 2.18 * (1.0 + K2 * b) + 2.0 * K4 * b * b;
    }
    case 3: {
        const double b = beta(3, alpha);
        return 2.26 * (1.0 + K2 * b + 2.0 * K4 * b * b) + 2.0 * K6 * b * b * b;
    }
    default: {
        const double b = beta(4, alpha);
        return 2.31 * (1.0 + K2 * b + 2.0 * K4 * b * b + 2.0 * K6 * b * b * b) +
               2.0 * K8 * b * b * b * b;
    }
    }
}

double theorem2_bound_chain(int k, double alpha)
{
    check_theorem2_args(k, alpha);
    if (k == 1) {
        const double hn = alpha * kPi;
        return 0.75 + 1.5 * favard_closed_form(2) / (hn * hn);
    }
    const double b = beta(k, alpha);
    double series = 1.0 + favard_closed_form(2) * b;
    for (int j = 2; j < k; ++j) {
        series += 2.0 * favard_closed_form(2 * j) * std::pow(b, j);
    }
    return d_constant(k) * series +
           2.0 * d_star_constant(k) * favard_closed_form(2 * k) * std::pow(0.25, k) *
                   std::pow(b, k);
}

double jackson_bound(int k, double alpha)
{
    return k <= 4 ? theorem2_bound(k, alpha) : theorem1_bound(k, alpha);
}

int jackson_n_threshold(int k)
{
    if (k < 1) {
        throw std::invalid_argument("modulus half-order k must be positive");
    }
    return k == 1 ? 2 : 2 * k * (2 * k - 1);
}

BoundParams make_bound_params(int k, double alpha, int n)
{
    if (k < 1 || !(alpha > 0.0) || n < 1) {
        throw std::invalid_argument("bound parameters need k >= 1, alpha > 0, n >= 1");
    }
    BoundParams p;
    p.k = k;
    p.alpha = alpha;
    p.n = n;
    p.gamma_k = to_double(gamma(k));
    p.h = alpha * kPi / n;
    p.delta_k = 4.0 * p.gamma_k / (p.h * p.h * n * n);
    p.rho = 1.0 / std::sqrt(p.delta_k);
    p.beta_k = 4.0 * p.gamma_k / (kPi * kPi * alpha * alpha);
    const double rho_closed = alpha * kPi / (2.0 * std::sqrt(p.gamma_k));
    if (std::abs(p.delta_k - p.beta_k) > 1e-12 * p.beta_k ||
        std::abs(p.rho - rho_closed) > 1e-12 * rho_closed) {
        throw std::logic_error("delta_k / beta_k identity failed");
    }
    return p;
}

In2Check check_in2(int m, long n)
{
    if (m < 4) {
        throw std::domain_error("check_in2 requires m >= 4");
    }
    if (n < static_cast<long>(m) * (m - 1)) {
        throw std::domain_error("check_in2 requires n >= m (m - 1)");
    }
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < m; ++i) {
        num *= n;
        den *= n - i;
    }
    In2Check c;
    c.ratio = Rational(num, den);
    c.below_two = c.ratio < 2;
    return c;
}

long sigma(long j)
{
    if (j < 1) {
        throw std::invalid_argument("sigma requires j >= 1");
    }
    long s = (j % 2 == 1) ? j : -j;
    for (long l = 1; l < j; ++l) {
        s += (l % 2 == 1) ? 2 * l : -2 * l;
    }
    return s;
}

double c_constant(int k)
{
    switch (k) {
    case 1: return 2.0;
    case 2: return 2.18;
    case 3: return 2.26;
    case 4: return 2.31;
    default:
        if (k < 1) {
            throw std::invalid_argument("constant tables are indexed by k >= 1");
        }
        return 3.0;
    }
}

double d_constant(int k)
{
    if (k < 1) {
        throw std::invalid_argument("constant tables are indexed by k >= 1");
    }
    if (k == 1) {
        return 1.0;
    }
    if (k <= 4) {
        return c_constant(k);
    }
    if (k <= 41000) {
        return 6.0;
    }
    return 3.0 * (2.0 + e2());
}

double d_star_constant(int k)
{
    if (k < 1) {
        throw std::invalid_argument("constant tables are indexed by k >= 1");
    }
    if (k == 1) {
        return 1.5;
    }
    if (k <= 4) {
        return std::ldexp(1.0, 2 * k);
    }
    if (k <= 41000) {
        return std::ldexp(1.0, 2 * k + 1);
    }
    return (2.0 + e2()) * std::ldexp(1.0, 2 * k);
}

double whitney_constant(int k)
{
    if (k < 1) {
        throw std::invalid_argument("constant tables are indexed by k >= 1");
    }
    if (k <= 2) {
        return 0.5;
    }
    if (k <= 8) {
        return 1.0;
    }
    if (k <= 82000) {
        return 2.0;
    }
    return 2.0 + e2();
}

ConstantTables constant_tables()
{
    return {};
}

} // namespace japprox
