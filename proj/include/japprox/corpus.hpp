#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace japprox {

using RealFn = std::function<double(double)>;

/// Closed interval [lo, hi] with lo < hi, both finite.
class Interval
{
public:
    Interval(double lo, double hi);

    double lo() const { return m_lo; }
    double hi() const { return m_hi; }
    double length() const { return m_hi - m_lo; }
    double mid() const { return 0.5 * (m_lo + m_hi); }
    bool contains(double x) const { return x >= m_lo && x <= m_hi; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    double m_lo;
    double m_hi;
};

/// The reference interval [-1, 1].
Interval unit_interval();

/// An evaluable real function on an interval, the element of every experiment.
///
/// `kinks` lists points where the function (or one of its low derivatives)
/// is not smooth. Grid searches add them as candidate points so that
/// features of measure zero on a grid are still seen.
struct TestFunction
{
    std::string id;
    Interval domain = unit_interval();
    RealFn evaluator;
    std::optional<int> smoothness_hint;
    std::vector<double> kinks;
    bool continuous = true;

    double operator()(double x) const { return evaluator(x); }
};

class Corpus
{
public:
    explicit Corpus(std::vector<TestFunction> entries);

    const std::vector<TestFunction>& entries() const { return m_entries; }
    std::size_t size() const { return m_entries.size(); }

    /// Throws std::invalid_argument for unknown ids.
    const TestFunction& find(std::string_view id) const;
    bool contains(std::string_view id) const;

private:
    std::vector<TestFunction> m_entries;
};

Corpus builtin_corpus();

/// Regularized boundary spike: (-1)^(k-1) eps^-(k-1) (1 + x - eps)^(k-1) on
/// [-1, -1+eps], zero on the rest of [-1, 1]. Requires k >= 2, 0 < eps < 1/k.
TestFunction f_eps(int k, double eps);

/// Indicator of the left endpoint. Discontinuous; never fed to Remez.
TestFunction spike_f0();

} // namespace japprox
