#include "japprox/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace japprox {

Interval::Interval(double lo, double hi) : m_lo(lo), m_hi(hi)
{
    if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
        std::ostringstream msg;
        msg << "interval requires finite lo < hi, got [" << lo << ", " << hi << "]";
        throw std::invalid_argument(msg.str());
    }
}

Interval unit_interval()
{
    return Interval(-1.0, 1.0);
}

Corpus::Corpus(std::vector<TestFunction> entries) : m_entries(std::move(entries))
{
    if (m_entries.empty()) {
        throw std::invalid_argument("empty corpus");
    }
    std::unordered_set<std::string> seen;
    for (const auto& e : m_entries) {
        if (!seen.insert(e.id).second) {
            throw std::invalid_argument("duplicate corpus id: " + e.id);
        }
    }
}

const TestFunction& Corpus::find(std::string_view id) const
{
    auto it = std::find_if(m_entries.begin(), m_entries.end(), [&](const TestFunction& f) {
        return f.id == id;
    });
    if (it == m_entries.end()) {
        throw std::invalid_argument("unknown function id: " + std::string(id));
    }
    return *it;
}

bool Corpus::contains(std::string_view id) const
{
    return std::any_of(m_entries.begin(), m_entries.end(), [&](const TestFunction& f) {
        return f.id == id;
    });
}

namespace {

TestFunction make(std::string id, RealFn fn, std::optional<int> hint = std::nullopt,
                  std::vector<double> kinks = {})
{
    TestFunction f;
    f.id = std::move(id);
    f.evaluator = std::move(fn);
    f.smoothness_hint = hint;
    f.kinks = std::move(kinks);
    return f;
}

} // namespace

Corpus builtin_corpus()
{
    std::vector<TestFunction> fs;
    fs.push_back(make("abs", [](double x) { return std::abs(x); }, 1, {0.0}));
    fs.push_back(make("abs32", [](double x) { return std::pow(std::abs(x), 1.5); }, 2, {0.0}));
    fs.push_back(make("runge", [](double x) { return 1.0 / (1.0 + 25.0 * x * x); }));
    fs.push_back(make("sin4", [](double x) { return std::sin(4.0 * x); }));
    fs.push_back(make("sin16", [](double x) { return std::sin(16.0 * x); }));
    fs.push_back(make("trunc_0_1", [](double x) { return std::max(x, 0.0); }, 1, {0.0}));
    fs.push_back(make(
            "trunc_0.3_2",
            [](double x) {
                double t = std::max(x - 0.3, 0.0);
                return t * t;
            },
            2,
            {0.3}));
    for (int j = 0; j <= 6; ++j) {
        // x^j is annihilated by differences of order j + 1
        fs.push_back(make(
                "x" + std::to_string(j),
                [j](double x) {
                    double r = 1.0;
                    for (int i = 0; i < j; ++i) {
                        r *= x;
                    }
                    return r;
                },
                j));
    }
    return Corpus(std::move(fs));
}

TestFunction f_eps(int k, double eps)
{
    if (k < 2) {
        throw std::invalid_argument("f_eps requires k >= 2");
    }
    if (!(eps > 0.0) || !(eps < 1.0 / k)) {
        throw std::invalid_argument("f_eps requires 0 < eps < 1/k");
    }
    const double sign = (k % 2 == 0) ? -1.0 : 1.0; // (-1)^(k-1)
    auto fn = [k, eps, sign](double x) {
        if (x > -1.0 + eps) {
            return 0.0;
        }
        double base = (1.0 + x - eps) / eps;
        return sign * std::pow(base, k - 1);
    };
    std::ostringstream id;
    id << "f_eps_k" << k << "_e" << eps;
    TestFunction f = make(id.str(), fn, std::nullopt, {-1.0, -1.0 + eps});
    return f;
}

TestFunction spike_f0()
{
    TestFunction f = make("spike_f0", [](double x) { return x == -1.0 ? 1.0 : 0.0; }, 0, {-1.0});
    f.continuous = false;
    return f;
}

} // namespace japprox
