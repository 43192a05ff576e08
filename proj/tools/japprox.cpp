#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "japprox/bounds.hpp"
#include "japprox/corpus.hpp"
#include "japprox/extension.hpp"
#include "japprox/jackson.hpp"
#include "japprox/kernel.hpp"
#include "japprox/moduli.hpp"
#include "japprox/remez.hpp"
#include "japprox/verify.hpp"

using namespace japprox;
using nlohmann::json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

// "1..4" or "1,2,3"
std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    if (auto pos = s.find(".."); pos != std::string::npos) {
        int a = std::stoi(s.substr(0, pos));
        int b = std::stoi(s.substr(pos + 2));
        if (b < a) {
            throw std::invalid_argument("empty range " + s);
        }
        for (int i = a; i <= b; ++i) {
            out.push_back(i);
        }
        return out;
    }
    for (const auto& t : split(s, ',')) {
        out.push_back(std::stoi(t));
    }
    return out;
}

std::vector<double> parse_real_list(const std::string& s)
{
    std::vector<double> out;
    for (const auto& t : split(s, ',')) {
        out.push_back(std::stod(t));
    }
    return out;
}

Interval parse_interval(const std::string& s)
{
    auto v = parse_real_list(s);
    if (v.size() != 2) {
        throw std::invalid_argument("--interval expects a,b");
    }
    return Interval(v[0], v[1]);
}

json poly_json(const Polynomial& p)
{
    return {{"interval", {p.interval().lo(), p.interval().hi()}},
            {"degree", p.degree()},
            {"cheb_coeffs", p.cheb_coeffs()},
            {"monomial_coeffs", p.monomial_coeffs()}};
}

std::string now_utc()
{
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

json record_json(const JacksonRecord& r)
{
    return {{"function_id", r.function_id}, {"k", r.k},         {"n", r.n},
            {"alpha", r.alpha},             {"E", r.E},         {"omega", r.omega},
            {"ratio", r.ratio},             {"bound", r.bound}, {"pass", r.pass},
            {"degenerate", r.degenerate}};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Jackson-constant experiments for algebraic polynomial approximation on [-1, 1]"};
    app.set_help_flag("--help", "print this help message and exit");
    app.require_subcommand(1);

    // kernel
    auto* kernel_cmd = app.add_subcommand("kernel", "exact hat coefficients of Lambda_2k");
    int kernel_k = 1;
    bool emit_coeffs = false;
    double kernel_h = 1.0;
    int sample_n = 0;
    kernel_cmd->add_option("--k", kernel_k, "kernel index k (modulus order 2k)")->required()->check(CLI::PositiveNumber);
    kernel_cmd->add_flag("--emit-coeffs", emit_coeffs, "print shift,coeff rows as p/q");
    kernel_cmd->add_option("--h", kernel_h, "scale for sampled values")->check(CLI::PositiveNumber);
    kernel_cmd->add_option("--sample", sample_n, "number of sampled x,value rows")->check(CLI::NonNegativeNumber);

    // modulus
    auto* mod_cmd = app.add_subcommand("modulus", "omega_k(f, delta) as JSON");
    std::string mod_fn;
    int mod_k = 1;
    double mod_delta = 0.1;
    ModulusGrid mod_grid;
    mod_cmd->add_option("--function", mod_fn, "corpus id")->required();
    mod_cmd->add_option("--k", mod_k, "difference order")->required()->check(CLI::PositiveNumber);
    mod_cmd->add_option("--delta", mod_delta, "largest step")->required()->check(CLI::PositiveNumber);
    mod_cmd->add_option("--nx", mod_grid.nx, "x grid size");
    mod_cmd->add_option("--nh", mod_grid.nh, "h grid size");

    // remez
    auto* remez_cmd = app.add_subcommand("remez", "minimax polynomial as JSON");
    std::string remez_fn;
    int remez_deg = 0;
    std::string remez_iv = "-1,1";
    double remez_tol = 1e-9;
    remez_cmd->add_option("--function", remez_fn, "corpus id")->required();
    remez_cmd->add_option("--degree", remez_deg, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
    remez_cmd->add_option("--interval", remez_iv, "a,b");
    remez_cmd->add_option("--tol", remez_tol, "certification tolerance");

    // extend
    auto* ext_cmd = app.add_subcommand("extend", "continuation of f beyond [-1, 1]");
    std::string ext_fn;
    int ext_k = 1;
    double ext_h = 0.05;
    bool ext_report = false;
    ext_cmd->add_option("--function", ext_fn, "corpus id")->required();
    ext_cmd->add_option("--k", ext_k, "modulus order 2k")->required()->check(CLI::PositiveNumber);
    ext_cmd->add_option("--h", ext_h, "step, 0 < h < 1/(2k)")->required();
    ext_cmd->add_flag("--report", ext_report, "measure the extension bounds");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "theorem bound for J_a(2k, alpha)");
    int bounds_k = 1;
    double bounds_alpha = 2.0;
    int bounds_n = 0;
    bounds_cmd->add_option("--k", bounds_k, "modulus order 2k")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--alpha", bounds_alpha, "step factor")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--n", bounds_n, "degree parameter (defaults to the threshold)");

    // jackson
    auto* jack_cmd = app.add_subcommand("jackson", "Jackson-ratio suite");
    std::string jack_k = "1..4";
    std::string jack_alpha = "1,2";
    std::string jack_n = "8,16,32,64";
    std::string jack_corpus;
    std::vector<std::string> jack_functions;
    std::string jack_out;
    std::string jack_format = "json";
    jack_cmd->add_option("--k", jack_k, "k list or range, e.g. 1..4");
    jack_cmd->add_option("--alpha", jack_alpha, "alpha list");
    jack_cmd->add_option("--n", jack_n, "n list");
    jack_cmd->add_option("--corpus", jack_corpus, "named corpus (default)");
    jack_cmd->add_option("--function", jack_functions, "corpus ids (repeatable)");
    jack_cmd->add_option("--out", jack_out, "output file (stdout when omitted)");
    jack_cmd->add_option("--format", jack_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "identity and inequality suite");
    bool verify_quick = false;
    verify_cmd->add_flag("--quick", verify_quick, "reduced scope smoke run");

    // lower-bound
    auto* lb_cmd = app.add_subcommand("lower-bound", "ratios for the regularized boundary spike");
    int lb_k = 1;
    int lb_n = 8;
    std::string lb_eps = "1e-2,1e-3,1e-4";
    double lb_alpha = 2.0;
    lb_cmd->add_option("--k", lb_k, "modulus order 2k")->check(CLI::PositiveNumber);
    lb_cmd->add_option("--n", lb_n, "n");
    lb_cmd->add_option("--eps", lb_eps, "eps list");
    lb_cmd->add_option("--alpha", lb_alpha, "alpha");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*kernel_cmd) {
            const SplineKernel lam = lambda_hat(kernel_k);
            if (emit_coeffs || sample_n == 0) {
                std::cout << "shift,coeff\n";
                for (const auto& t : lam.terms()) {
                    std::cout << to_string(t.shift) << ',' << to_string(t.coeff) << '\n';
                }
            }
            if (sample_n > 0) {
                if (emit_coeffs) {
                    std::cout << '\n';
                }
                const double r = to_double(lam.support_radius()) * kernel_h;
                std::cout << "x,value\n";
                for (int i = 0; i < sample_n; ++i) {
                    double x = sample_n == 1 ? 0.0 : -r + 2.0 * r * i / (sample_n - 1);
                    std::printf("%.17g,%.17g\n", x, eval_kernel(lam, kernel_h, x));
                }
            }
            return 0;
        }
        if (*mod_cmd) {
            const Corpus corpus = builtin_corpus();
            const ModulusResult m = modulus(corpus.find(mod_fn), mod_k, mod_delta, mod_grid);
            json j{{"function_id", mod_fn}, {"k", mod_k},
                   {"delta", mod_delta},    {"value", m.value},
                   {"argmax_x", m.argmax_x}, {"argmax_h", m.argmax_h},
                   {"grid_nx", m.grid_nx},  {"grid_nh", m.grid_nh},
                   {"refined", m.refined}};
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (*remez_cmd) {
            const Corpus corpus = builtin_corpus();
            const Interval iv = parse_interval(remez_iv);
            const TestFunction& f = corpus.find(remez_fn);
            const RemezResult r = remez(restrict_to(f, iv), iv, remez_deg, remez_tol);
            json j{{"function_id", remez_fn}, {"poly", poly_json(r.poly)},
                   {"error_lo", r.error_lo},  {"error_hi", r.error_hi},
                   {"error", r.error()},      {"reference", r.reference},
                   {"iterations", r.iterations}, {"certified", r.certified}};
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (*ext_cmd) {
            const Corpus corpus = builtin_corpus();
            const TestFunction& f = corpus.find(ext_fn);
            if (ext_report) {
                const ExtensionReport r = extension_report(f, ext_k, ext_h);
                json j{{"function_id", r.function_id}, {"k", r.k},
                       {"h", r.h},                     {"W_norm", r.W_norm},
                       {"D_norm", r.D_norm},           {"omega", r.omega},
                       {"W_ratio", r.W_ratio},         {"D_ratio", r.D_ratio},
                       {"d_k_bound", r.d_k_bound},     {"d_k_star_bound", r.d_k_star_bound},
                       {"degenerate", r.degenerate},   {"W_pass", r.W_pass},
                       {"D_pass", r.D_pass}};
                std::cout << j.dump(2) << '\n';
            } else {
                const ExtendedFunction g = extend(f, ext_k, ext_h);
                json j{{"function_id", ext_fn},          {"k", ext_k},
                       {"h", ext_h},                     {"p_minus", poly_json(g.p_minus())},
                       {"p_plus", poly_json(g.p_plus())}, {"jump_minus", g.jump_minus()},
                       {"jump_plus", g.jump_plus()}};
                std::cout << j.dump(2) << '\n';
            }
            return 0;
        }
        if (*bounds_cmd) {
            const int n = bounds_n > 0 ? bounds_n : jackson_n_threshold(bounds_k);
            const BoundParams p = make_bound_params(bounds_k, bounds_alpha, n);
            json j{{"k", p.k},
                   {"alpha", p.alpha},
                   {"n", p.n},
                   {"n_threshold", jackson_n_threshold(bounds_k)},
                   {"gamma_k", to_string(gamma(bounds_k))},
                   {"gamma_k_value", p.gamma_k},
                   {"h", p.h},
                   {"delta_k", p.delta_k},
                   {"beta_k", p.beta_k},
                   {"rho", p.rho},
                   {"c_k", c_constant(p.k)},
                   {"d_k", d_constant(p.k)},
                   {"d_k_star", d_star_constant(p.k)},
                   {"w_2k", whitney_constant(2 * p.k)}};
            if (p.k <= 4) {
                j["bound_kind"] = "small-k closed form";
                j["bound"] = theorem2_bound(p.k, p.alpha);
            } else {
                j["bound_kind"] = "secant form";
                j["bound"] = theorem1_bound(p.k, p.alpha);
                j["bound_at_rho"] = theorem1_bound_rho(p.k, p.alpha);
            }
            std::cout << j.dump(2) << '\n';
            return 0;
        }
        if (*jack_cmd) {
            SuiteConfig cfg;
            cfg.ks = parse_int_list(jack_k);
            cfg.ns = parse_int_list(jack_n);
            cfg.alphas = parse_real_list(jack_alpha);
            cfg.timestamp = now_utc();
            if (!jack_corpus.empty()) {
                if (jack_corpus != "default") {
                    throw std::invalid_argument("unknown corpus: " + jack_corpus);
                }
                const Corpus corpus = builtin_corpus();
                for (const auto& f : corpus.entries()) {
                    cfg.function_ids.push_back(f.id);
                }
            }
            cfg.function_ids.insert(cfg.function_ids.end(), jack_functions.begin(),
                                    jack_functions.end());
            const Report rep = run_suite(cfg);
            const std::string text = jack_format == "csv" ? emit_csv(rep) : emit_json(rep);
            if (jack_out.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(jack_out);
                if (!out) {
                    throw std::runtime_error("cannot write " + jack_out);
                }
                out << text;
            }
            bool all = true;
            for (const auto& r : rep.records) {
                all = all && r.pass;
            }
            return all ? 0 : kExitViolation;
        }
        if (*verify_cmd) {
            VerifyOptions opt;
            opt.quick = verify_quick;
            bool all = true;
            run_verify(opt, [&](const VerifyCheck& c) {
                all = all && c.pass;
                std::printf("[%s] %-40s %7.2fs  %s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                            c.seconds, c.detail.c_str());
                std::fflush(stdout);
            });
            return all ? 0 : kExitViolation;
        }
        if (*lb_cmd) {
            const auto recs = lower_bound_experiment(lb_k, lb_n, parse_real_list(lb_eps), lb_alpha);
            json j = json::array();
            for (const auto& r : recs) {
                j.push_back(record_json(r));
            }
            std::cout << j.dump(2) << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return 0;
}
