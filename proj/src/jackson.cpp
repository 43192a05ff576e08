#include "japprox/jackson.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "japprox/bounds.hpp"
#include "japprox/extension.hpp"
#include "japprox/kernel.hpp"
#include "japprox/remez.hpp"

namespace japprox {

namespace {

void check_threshold(int k, int n)
{
    if (k < 1) {
        throw std::invalid_argument("jackson experiments require k >= 1");
    }
    const int nmin = jackson_n_threshold(k);
    if (n < nmin) {
        std::ostringstream msg;
        msg << "n = " << n << " below the threshold n >= " << nmin << " for k = " << k;
        throw std::domain_error(msg.str());
    }
}

double capped_step(int k, int n, double alpha)
{
    // steps longer than 2/(2k) admit no difference nodes on [-1, 1]
    return std::min(alpha * std::numbers::pi / n, 1.0 / k);
}

JacksonRecord make_record(const TestFunction& f, int k, int n, double alpha, double E,
                          const JacksonOptions& options)
{
    JacksonRecord r;
    r.function_id = f.id;
    r.k = k;
    r.n = n;
    r.alpha = alpha;
    r.E = E;
    r.omega = modulus(f, 2 * k, capped_step(k, n, alpha), options.grid).value;
    r.bound = jackson_bound(k, alpha);
    if (r.omega <= kDegenerateOmega) {
        r.degenerate = true;
        r.ratio = 0.0;
        r.pass = r.E <= 1e-10;
        return r;
    }
    r.ratio = r.E / r.omega;
    r.pass = r.ratio <= r.bound + kBoundSlack;
    return r;
}

double measured_error(const TestFunction& f, int n, const JacksonOptions& options)
{
    return remez(f, unit_interval(), n - 1, options.certify_tol).error();
}

void check_jackson_function(const TestFunction& f)
{
    if (!f.continuous) {
        throw std::invalid_argument("jackson experiments need a continuous function; got " + f.id);
    }
    if (f.domain != unit_interval()) {
        throw std::invalid_argument("jackson experiments run on [-1, 1]");
    }
}

double favard_even(int m)
{
    return m <= 8 ? favard_closed_form(m) : favard(m, 4096);
}

} // namespace

JacksonRecord jackson_ratio(const TestFunction& f, int k, int n, double alpha,
                            const JacksonOptions& options)
{
    check_threshold(k, n);
    check_jackson_function(f);
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("alpha must be positive");
    }
    return make_record(f, k, n, alpha, measured_error(f, n, options), options);
}

std::vector<JacksonRecord> lower_bound_experiment(int k, int n, const std::vector<double>& eps_list,
                                                  double alpha, const JacksonOptions& options)
{
    check_threshold(k, n);
    std::vector<JacksonRecord> out;
    for (double eps : eps_list) {
        if (!(eps > 0.0) || !(eps < 1.0 / (2.0 * k))) {
            throw std::domain_error("lower-bound eps must lie in (0, 1/(2k))");
        }
        out.push_back(jackson_ratio(f_eps(2 * k, eps), k, n, alpha, options));
    }
    return out;
}

NeumannDiagnostic neumann_diagnostic(const TestFunction& f, int k, int n, double h,
                                     const JacksonOptions& options)
{
    if (k < 2) {
        throw std::domain_error("neumann_diagnostic requires k >= 2");
    }
    if (n < 2 * k * (2 * k - 1)) {
        throw std::domain_error("neumann_diagnostic requires n >= 2k(2k-1)");
    }
    check_jackson_function(f);
    const ExtendedFunction g = extend(f, k, h);
    const ExtensionNorms norms = extension_norms(g);

    NeumannDiagnostic d;
    d.function_id = f.id;
    d.k = k;
    d.n = n;
    d.h = h;
    d.E = measured_error(f, n, options);
    d.W_norm = norms.W_norm;
    d.D_norm = norms.D_norm;
    const double hn = h * n;
    d.delta_k = 4.0 * to_double(gamma(k)) / (hn * hn);
    for (int j = 0; j < k; ++j) {
        const double factor = (j <= 1) ? 1.0 : 2.0;
        d.terms.push_back(factor * favard_even(2 * j) * std::pow(d.delta_k, j) * d.W_norm);
    }
    d.last_term = 2.0 * favard_even(2 * k) * std::pow(0.25, k) * std::pow(d.delta_k, k) * d.D_norm;
    d.majorant = d.last_term;
    for (double t : d.terms) {
        d.majorant += t;
    }
    d.pass = d.E <= d.majorant;
    return d;
}

Report run_suite(const SuiteConfig& config)
{
    if (config.function_ids.empty()) {
        throw std::invalid_argument("empty corpus");
    }
    if (config.ks.empty() || config.ns.empty() || config.alphas.empty()) {
        throw std::invalid_argument("suite config needs non-empty k, n and alpha lists");
    }
    const Corpus corpus = builtin_corpus();
    std::vector<const TestFunction*> fs;
    for (const auto& id : config.function_ids) {
        fs.push_back(&corpus.find(id));
    }
    for (int k : config.ks) {
        if (k < 1) {
            throw std::invalid_argument("suite k values must be positive");
        }
    }

    // one remez run per (function, n), shared by every k and alpha
    struct ErrorTask
    {
        const TestFunction* f;
        int n;
    };
    struct RecordTask
    {
        const TestFunction* f;
        int k;
        int n;
        double alpha;
        std::size_t error_index;
    };
    std::vector<ErrorTask> error_tasks;
    std::vector<RecordTask> record_tasks;
    for (const TestFunction* f : fs) {
        check_jackson_function(*f);
        std::map<int, std::size_t> seen;
        for (int k : config.ks) {
            for (int n : config.ns) {
                if (n < jackson_n_threshold(k)) {
                    continue;
                }
                auto [it, fresh] = seen.try_emplace(n, error_tasks.size());
                if (fresh) {
                    error_tasks.push_back({f, n});
                }
                for (double alpha : config.alphas) {
                    record_tasks.push_back({f, k, n, alpha, it->second});
                }
            }
        }
    }

    std::exception_ptr failure;
    std::vector<double> errors(error_tasks.size());
    const long n_err = static_cast<long>(error_tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_err; ++i) {
        try {
            errors[i] = measured_error(*error_tasks[i].f, error_tasks[i].n, config.options);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    Report report;
    report.records.resize(record_tasks.size());
    const long n_rec = static_cast<long>(record_tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n_rec; ++i) {
        const RecordTask& t = record_tasks[i];
        try {
            report.records[i] = make_record(*t.f, t.k, t.n, t.alpha, errors[t.error_index], config.options);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::sort(report.records.begin(), report.records.end(),
              [](const JacksonRecord& a, const JacksonRecord& b) {
                  return std::tie(a.function_id, a.k, a.n, a.alpha) <
                         std::tie(b.function_id, b.k, b.n, b.alpha);
              });

    std::map<std::pair<int, double>, SummaryEntry> summary;
    for (const auto& r : report.records) {
        auto key = std::make_pair(r.k, r.alpha);
        auto [it, inserted] = summary.try_emplace(key);
        SummaryEntry& s = it->second;
        if (inserted) {
            s.k = r.k;
            s.alpha = r.alpha;
            s.bound = r.bound;
            s.max_ratio = -1.0;
        }
        if (r.ratio > s.max_ratio) {
            s.max_ratio = r.ratio;
            s.argmax_function = r.function_id;
        }
    }
    for (auto& [key, s] : summary) {
        report.summary.push_back(s);
    }

    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    report.metadata["grid_nx"] = std::to_string(config.options.grid.nx);
    report.metadata["grid_nh"] = std::to_string(config.options.grid.nh);
    report.metadata["certify_tol"] = num(config.options.certify_tol);
    report.metadata["bound_slack"] = num(kBoundSlack);
    report.metadata["max_ratio_meaning"] =
            "largest observed ratio: a lower estimate of the Jackson constant";
    report.metadata["timestamp"] = config.timestamp;
    return report;
}

namespace {

nlohmann::json to_json(const JacksonRecord& r)
{
    return {{"function_id", r.function_id}, {"k", r.k},         {"n", r.n},
            {"alpha", r.alpha},             {"E", r.E},         {"omega", r.omega},
            {"ratio", r.ratio},             {"bound", r.bound}, {"pass", r.pass},
            {"degenerate", r.degenerate}};
}

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

std::string emit_json(const Report& report)
{
    nlohmann::json j;
    j["records"] = nlohmann::json::array();
    for (const auto& r : report.records) {
        j["records"].push_back(to_json(r));
    }
    j["summary"] = nlohmann::json::array();
    for (const auto& s : report.summary) {
        j["summary"].push_back({{"k", s.k},
                                {"alpha", s.alpha},
                                {"max_ratio", s.max_ratio},
                                {"argmax_function", s.argmax_function},
                                {"bound", s.bound}});
    }
    j["metadata"] = report.metadata;
    return j.dump(2) + "\n";
}

std::string emit_csv(const Report& report)
{
    std::ostringstream out;
    out << "function_id,k,n,alpha,E,omega,ratio,bound,pass,degenerate\n";
    for (const auto& r : report.records) {
        out << r.function_id << ',' << r.k << ',' << r.n << ',' << fmt(r.alpha) << ','
            << fmt(r.E) << ',' << fmt(r.omega) << ',' << fmt(r.ratio) << ',' << fmt(r.bound)
            << ',' << (r.pass ? "true" : "false") << ',' << (r.degenerate ? "true" : "false")
            << '\n';
    }
    return out.str();
}

std::vector<JacksonRecord> parse_csv(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "function_id,k,n,alpha,E,omega,ratio,bound,pass,degenerate") {
        throw std::invalid_argument("unexpected CSV header");
    }
    auto parse_bool = [](const std::string& s) {
        if (s == "true") {
            return true;
        }
        if (s == "false") {
            return false;
        }
        throw std::invalid_argument("bad boolean field: " + s);
    };
    auto parse_num = [&line]<typename T>(const std::string& s, T& v) {
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || end != s.data() + s.size()) {
            throw std::invalid_argument("bad numeric field '" + s + "' in: " + line);
        }
    };
    std::vector<JacksonRecord> out;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 10) {
            throw std::invalid_argument("CSV row needs 10 fields: " + line);
        }
        JacksonRecord r;
        r.function_id = cells[0];
        parse_num(cells[1], r.k);
        parse_num(cells[2], r.n);
        parse_num(cells[3], r.alpha);
        parse_num(cells[4], r.E);
        parse_num(cells[5], r.omega);
        parse_num(cells[6], r.ratio);
        parse_num(cells[7], r.bound);
        r.pass = parse_bool(cells[8]);
        r.degenerate = parse_bool(cells[9]);
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace japprox
