#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "japprox/corpus.hpp"
#include "japprox/moduli.hpp"

namespace japprox {

/// One experiment E_{n-1}(f) <= J * omega_{2k}(f, alpha pi / n).
struct JacksonRecord
{
    std::string function_id;
    int k = 1; // modulus order is 2k
    int n = 1;
    double alpha = 1.0;
    double E = 0.0;
    double omega = 0.0;
    double ratio = 0.0;
    double bound = 0.0;
    bool pass = false;
    bool degenerate = false;

    friend bool operator==(const JacksonRecord&, const JacksonRecord&) = default;
};

/// Ratios within this much of a printed bound count as passing.
inline constexpr double kBoundSlack = 5e-3;
/// omega at or below this marks a degenerate (polynomial-like) record.
inline constexpr double kDegenerateOmega = 1e-13;

struct JacksonOptions
{
    ModulusGrid grid{};
    double certify_tol = 1e-9;
};

/// Requires n >= jackson_n_threshold(k) and a continuous f on [-1, 1]. The
/// step alpha pi / n is capped at 1/k, beyond which no step is admissible.
JacksonRecord jackson_ratio(const TestFunction& f, int k, int n, double alpha,
                            const JacksonOptions& options = {});

/// Records for the regularized spike f_eps(2k, eps) at each eps in eps_list
/// (each in (0, 1/(2k))).
std::vector<JacksonRecord> lower_bound_experiment(int k, int n, const std::vector<double>& eps_list,
                                                  double alpha = 2.0,
                                                  const JacksonOptions& options = {});

/// Terms of the Neumann-series estimate of E_{n-1}(f), each majorized with
/// the convolution-power bounds.
struct NeumannDiagnostic
{
    std::string function_id;
    int k = 2;
    int n = 1;
    double h = 0.0;
    double delta_k = 0.0;    // 4 gamma_k / (h n)^2
    double E = 0.0;          // measured E_{n-1}(f)
    double W_norm = 0.0;     // || W_{2k}(g_f, ., chi_h^2) ||
    double D_norm = 0.0;     // || central 2k-th difference of g_f ||
    std::vector<double> terms; // j = 0..k-1 contributions
    double last_term = 0.0;  // 2 K_{2k} 4^-k delta_k^k ||D||
    double majorant = 0.0;
    bool pass = false;
};

/// Requires k >= 2, n >= 2k(2k-1), 0 < h < 1/(2k).
NeumannDiagnostic neumann_diagnostic(const TestFunction& f, int k, int n, double h,
                                     const JacksonOptions& options = {});

struct SuiteConfig
{
    std::vector<std::string> function_ids;
    std::vector<int> ks{1, 2, 3, 4};
    std::vector<int> ns{8, 16, 32, 64};
    std::vector<double> alphas{1.0, 2.0};
    JacksonOptions options{};
    /// Copied into the report metadata as-is; run_suite never reads the clock.
    std::string timestamp;
};

struct SummaryEntry
{
    int k = 1;
    double alpha = 1.0;
    double max_ratio = 0.0;
    std::string argmax_function;
    double bound = 0.0;
};

struct Report
{
    std::vector<JacksonRecord> records;
    std::vector<SummaryEntry> summary;
    std::map<std::string, std::string> metadata;
};

/// Runs every admissible (function, k, n, alpha) combination of the config
/// against the built-in corpus; (k, n) pairs below the n threshold are skipped.
/// Records are ordered by (function_id, k, n, alpha).
Report run_suite(const SuiteConfig& config);

std::string emit_json(const Report& report);
std::string emit_csv(const Report& report);
std::vector<JacksonRecord> parse_csv(const std::string& csv);

} // namespace japprox
