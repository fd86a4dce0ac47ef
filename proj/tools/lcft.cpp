// Command-line interface: evaluate structure constants and special functions,
// run the identity verification suite, and scan parameter grids to CSV.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcft/verify.hpp"

namespace {

using lcft::Complex;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitEval = 2;      // math-domain / pole errors
constexpr int kExitUsage = 64;    // sysexits EX_USAGE
constexpr int kExitIo = 74;       // sysexits EX_IOERR

// Complex literals are written re or re+imj (shell friendly, no parentheses).
Complex parse_complex(const std::string& text) {
    const std::string s = text;
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            split = i;  // last top-level sign belongs to the imaginary part
    }
    try {
        if (!s.empty() && s.back() == 'j') {
            if (split == std::string::npos)
                return {0.0, std::stod(s.substr(0, s.size() - 1))};
            const double re = std::stod(s.substr(0, split));
            std::string im = s.substr(split, s.size() - split - 1);
            if (im == "+" || im == "-") im += "1";
            return {re, std::stod(im)};
        }
        std::size_t used = 0;
        const double re = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return {re, 0.0};
    } catch (const std::exception&) {
        throw CLI::ValidationError("complex", "cannot parse complex literal '" + text +
                                                  "' (expected re or re+imj)");
    }
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_complex(item));
    return out;
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json report_json(const lcft::IdentityReport& r, bool timings) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = complex_json(v);
    json out{{"identity_name", r.identity_name},
             {"params", params},
             {"lhs", complex_json(r.lhs)},
             {"rhs", complex_json(r.rhs)},
             {"abs_err", r.abs_err},
             {"rel_err", r.rel_err},
             {"pass", r.pass},
             {"elapsed_s", timings ? r.elapsed_s : 0.0}};
    if (!r.error.empty()) out["error"] = r.error;
    return out;
}

struct EvalRequest {
    std::string target;
    double gamma = 1.2;
    std::vector<Complex> beta;
    std::vector<Complex> sigma;
    std::vector<Complex> alphas;
    std::optional<Complex> alpha, alphap, x, z, P, Pprime;
    double s1 = 0.0, s2 = 1.0;
    std::string s3 = "inf";
    double s0 = 0.0;
    double tol = 1e-11;
};

struct EvalOutcome {
    Complex value;
    double err_est = 0.0;
};

lcft::ThreePointArgs threepoint_of(const EvalRequest& rq) {
    if (rq.beta.size() != 3 || rq.sigma.size() != 3)
        throw CLI::ValidationError("args", "target needs --beta b1,b2,b3 and --sigma s1,s2,s3");
    return {rq.beta[0], rq.beta[1], rq.beta[2], rq.sigma[0], rq.sigma[1], rq.sigma[2]};
}

lcft::BulkBoundaryArgs bulkboundary_of(const EvalRequest& rq) {
    if (!rq.alpha || rq.beta.size() != 1 || rq.sigma.size() != 1)
        throw CLI::ValidationError("args", "target needs --alpha, --beta b and --sigma s");
    return {*rq.alpha, rq.beta[0], rq.sigma[0]};
}

EvalOutcome evaluate(const EvalRequest& rq) {
    lcft::LiouvilleParams p(rq.gamma);
    lcft::QuadSettings qs;
    qs.rel_tol = rq.tol;
    qs.abs_tol = std::min(1e-14, rq.tol);
    lcft::EvalInfo info;
    EvalOutcome out;

    if (rq.target == "dgamma" || rq.target == "dsine") {
        if (!rq.x) throw CLI::ValidationError("args", "target needs --x");
        out.value = (rq.target == "dgamma") ? lcft::double_gamma(*rq.x, p)
                                            : lcft::double_sine(*rq.x, p);
        return out;
    }
    if (rq.target == "rfzz") {
        if (rq.beta.size() != 1 || rq.sigma.size() != 2)
            throw CLI::ValidationError("args", "rfzz needs --beta b and --sigma s1,s2");
        out.value = lcft::r_fzz({rq.beta[0], rq.sigma[0], rq.sigma[1]}, p);
        return out;
    }
    if (rq.target == "hpt" || rq.target == "jpt") {
        const auto a = threepoint_of(rq);
        out.value = (rq.target == "hpt") ? lcft::h_pt(a, p, qs, &info)
                                         : lcft::j_pt(a, p, qs, &info);
        out.err_est = info.err_est;
        return out;
    }
    if (rq.target == "ghos" || rq.target == "jhos") {
        const auto a = bulkboundary_of(rq);
        out.value = (rq.target == "ghos") ? lcft::g_hos(a, p, qs, &info)
                                          : lcft::j_hos(a, p, qs, &info);
        out.err_est = info.err_est;
        return out;
    }
    if (rq.target == "fusion") {
        if (rq.alphas.size() != 4 || !rq.P || !rq.Pprime)
            throw CLI::ValidationError("args",
                                       "fusion needs --alphas a1,a2,a3,a4 --P --Pprime");
        lcft::FusionKernelArgs k{rq.alphas[0], rq.alphas[1], rq.alphas[2],
                                 rq.alphas[3], *rq.P, *rq.Pprime};
        out.value = lcft::fusion_kernel(k, p, qs, &info);
        out.err_est = info.err_est;
        return out;
    }
    if (rq.target == "modular") {
        if (!rq.alphap || !rq.P || !rq.Pprime)
            throw CLI::ValidationError("args", "modular needs --alphap --P --Pprime");
        lcft::ModularKernelArgs k{*rq.alphap, *rq.P, *rq.Pprime};
        out.value = lcft::modular_kernel(k, p, qs, &info);
        out.err_est = info.err_est;
        return out;
    }
    if (rq.target == "corr3") {
        const auto a = threepoint_of(rq);
        if (rq.s3 == "inf") {
            out.value = lcft::boundary_3pt_inf(rq.s1, rq.s2, a, p, qs, &info);
        } else {
            out.value = lcft::boundary_3pt(rq.s1, rq.s2, std::stod(rq.s3), a, p, qs, &info);
        }
        out.err_est = info.err_est;
        return out;
    }
    if (rq.target == "corrbb") {
        const auto a = bulkboundary_of(rq);
        if (!rq.z) throw CLI::ValidationError("args", "corrbb needs --z");
        out.value = lcft::bulk_boundary(*rq.z, rq.s0, a, p, qs, &info);
        out.err_est = info.err_est;
        return out;
    }
    throw CLI::ValidationError("target", "unknown target " + rq.target);
}

json eval_params_json(const EvalRequest& rq) {
    json params = json::object();
    params["gamma"] = rq.gamma;
    auto put_list = [&](const char* key, const std::vector<Complex>& v) {
        if (v.empty()) return;
        json arr = json::array();
        for (Complex z : v) arr.push_back(complex_json(z));
        params[key] = arr;
    };
    put_list("beta", rq.beta);
    put_list("sigma", rq.sigma);
    put_list("alphas", rq.alphas);
    if (rq.alpha) params["alpha"] = complex_json(*rq.alpha);
    if (rq.alphap) params["alphap"] = complex_json(*rq.alphap);
    if (rq.x) params["x"] = complex_json(*rq.x);
    if (rq.z) params["z"] = complex_json(*rq.z);
    if (rq.P) params["P"] = complex_json(*rq.P);
    if (rq.Pprime) params["Pprime"] = complex_json(*rq.Pprime);
    return params;
}

int cmd_eval(const EvalRequest& rq, const std::string& format) {
    try {
        const EvalOutcome out = evaluate(rq);
        if (!lcft::is_finite(out.value)) {
            throw lcft::Error(lcft::ErrorKind::DomainError,
                              "evaluation produced a non-finite value");
        }
        if (format == "json") {
            json j{{"target", rq.target},
                   {"params", eval_params_json(rq)},
                   {"value", complex_json(out.value)},
                   {"err_est", out.err_est}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("%s = %.15g %+.15gj   (err_est %.3g)\n", rq.target.c_str(),
                        out.value.real(), out.value.imag(), out.err_est);
        }
        return kExitOk;
    } catch (const lcft::Error& e) {
        if (format == "json") {
            json err{{"error", lcft::error_kind_name(e.kind())}, {"message", e.what()}};
            if (e.has_witness()) {
                err["witness"] = complex_json(e.where());
                if (e.witness_n() >= 0) err["n"] = e.witness_n();
                if (e.witness_m() >= 0) err["m"] = e.witness_m();
            }
            std::cerr << err.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kExitEval;
    }
}

int cmd_verify(const std::vector<double>& gammas, int cases, uint64_t seed,
               std::optional<double> tol, const std::string& report_path, int jobs,
               bool timings) {
    lcft::SuiteSettings st;
    st.jobs = jobs;
    st.tol_map = lcft::default_tol_map();
    if (tol) {
        for (auto& [k, v] : st.tol_map) v = *tol;
    }
    std::vector<lcft::IdentityReport> reports;
    try {
        reports = lcft::run_suite(gammas, cases, seed, st);
    } catch (const lcft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }

    json arr = json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        arr.push_back(report_json(r, timings));
        all_pass = all_pass && r.pass;
    }
    const std::string text = arr.dump(2) + "\n";
    if (report_path.empty() || report_path == "-") {
        std::cout << text;
    } else {
        std::ofstream f(report_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << report_path << "\n";
            return kExitIo;
        }
        f << text;
        if (!f.good()) return kExitIo;
    }
    std::fprintf(stderr, "%zu checks, %s\n", reports.size(),
                 all_pass ? "all pass" : "FAILURES present");
    return all_pass ? kExitOk : 1;
}

struct ScanRow {
    double param;
    bool ok = false;
    bool pole = false;
    Complex value{0.0, 0.0};
    double err = 0.0;
};

int cmd_scan(EvalRequest base, const std::string& vary, double start, double stop,
             int count, const std::string& out_path, int jobs) {
    if (count < 2) {
        std::cerr << "error: --count must be at least 2\n";
        return kExitUsage;
    }
    const std::vector<std::string> known = {"beta",   "beta1",  "beta2",  "beta3",
                                            "sigma",  "sigma1", "sigma2", "sigma3",
                                            "alpha",  "x",      "gamma",  "P",
                                            "Pprime"};
    if (std::find(known.begin(), known.end(), vary) == known.end()) {
        std::cerr << "error: unknown --vary parameter " << vary << "\n";
        return kExitUsage;
    }

    std::vector<ScanRow> rows(count);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) return;
            const double t = start + (stop - start) * i / (count - 1);
            EvalRequest rq = base;
            const Complex tv(t, 0.0);
            if (vary == "beta" || vary == "beta1") {
                if (rq.beta.empty()) rq.beta.resize(1);
                rq.beta[0] = tv;
            } else if (vary == "beta2" && rq.beta.size() >= 2) {
                rq.beta[1] = tv;
            } else if (vary == "beta3" && rq.beta.size() >= 3) {
                rq.beta[2] = tv;
            } else if (vary == "sigma" || vary == "sigma1") {
                if (rq.sigma.empty()) rq.sigma.resize(1);
                rq.sigma[0] = tv;
            } else if (vary == "sigma2" && rq.sigma.size() >= 2) {
                rq.sigma[1] = tv;
            } else if (vary == "sigma3" && rq.sigma.size() >= 3) {
                rq.sigma[2] = tv;
            } else if (vary == "alpha") {
                rq.alpha = tv;
            } else if (vary == "x") {
                rq.x = tv;
            } else if (vary == "gamma") {
                rq.gamma = t;
            } else if (vary == "P") {
                rq.P = tv;
            } else if (vary == "Pprime") {
                rq.Pprime = tv;
            }
            rows[i].param = t;
            try {
                const EvalOutcome out = evaluate(rq);
                if (!lcft::is_finite(out.value))
                    throw lcft::Error(lcft::ErrorKind::DomainError, "non-finite");
                rows[i].ok = true;
                rows[i].value = out.value;
                rows[i].err = out.err_est;
            } catch (const lcft::Error& e) {
                rows[i].pole = (e.kind() == lcft::ErrorKind::PoleEncountered ||
                                e.kind() == lcft::ErrorKind::PoleCollision ||
                                e.kind() == lcft::ErrorKind::PoleTooClose);
            } catch (const CLI::Error&) {
                // missing argument combinations surface as plain error rows
            }
        }
    };

    std::vector<std::thread> pool;
    const int n_jobs = std::max(1, jobs);
    for (int j = 0; j < n_jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "param,value_re,value_im,err_est,status\n";
    char buf[256];
    for (const auto& r : rows) {
        if (r.ok) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,ok\n", r.param,
                          r.value.real(), r.value.imag(), r.err);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g,,,,%s\n", r.param,
                          r.pole ? "pole" : "error");
        }
        csv << buf;
    }
    if (out_path.empty() || out_path == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot open " << out_path << "\n";
            return kExitIo;
        }
        f << csv.str();
        if (!f.good()) return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary Liouville structure constants"};
    app.require_subcommand(1);

    // ---- eval ----
    EvalRequest rq;
    std::string format = "text";
    std::string beta_str, sigma_str, alphas_str, alpha_str, alphap_str, x_str, z_str,
        P_str, Pp_str;
    auto* eval = app.add_subcommand("eval", "evaluate one quantity");
    eval->add_option("target", rq.target,
                     "hpt|ghos|rfzz|jpt|jhos|dgamma|dsine|fusion|modular|corr3|corrbb")
        ->required();
    eval->add_option("--gamma", rq.gamma, "coupling in (0,2)")->required();
    eval->add_option("--beta", beta_str, "beta or beta1,beta2,beta3 (re or re+imj)");
    eval->add_option("--sigma", sigma_str, "sigma list (re or re+imj)");
    eval->add_option("--alpha", alpha_str, "bulk weight alpha");
    eval->add_option("--alphap", alphap_str, "modular kernel alpha'");
    eval->add_option("--alphas", alphas_str, "fusion kernel alpha'1..4");
    eval->add_option("--x", x_str, "argument of dgamma/dsine");
    eval->add_option("--z", z_str, "bulk point (Im z > 0)");
    eval->add_option("--P", P_str, "kernel momentum P");
    eval->add_option("--Pprime", Pp_str, "kernel momentum P'");
    eval->add_option("--s1", rq.s1, "first boundary position");
    eval->add_option("--s2", rq.s2, "second boundary position");
    eval->add_option("--s3", rq.s3, "third boundary position or 'inf'");
    eval->add_option("--s0", rq.s0, "boundary position for corrbb");
    eval->add_option("--tol", rq.tol, "quadrature relative tolerance");
    eval->add_option("--format", format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    // ---- verify ----
    std::string gamma_list = "1.2";
    int cases = 5;
    uint64_t seed = 42;
    double tol_flag = -1.0;
    std::string report_path;
    int jobs = std::max(1u, std::thread::hardware_concurrency());
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run the identity suite");
    verify->add_option("--gamma-list", gamma_list, "comma separated gammas");
    verify->add_option("--cases", cases, "random cases per gamma");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--tol", tol_flag, "override every tolerance");
    verify->add_option("--report", report_path, "output path (default stdout)");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--timings", timings, "include real elapsed_s in the report");

    // ---- scan ----
    std::string vary, out_path;
    double start = 0.0, stop = 1.0;
    int count = 50;
    auto* scan = app.add_subcommand("scan", "scan a parameter grid to CSV");
    scan->add_option("target", rq.target, "same targets as eval")->required();
    scan->add_option("--gamma", rq.gamma, "coupling in (0,2)")->required();
    scan->add_option("--vary", vary, "parameter to vary")->required();
    scan->add_option("--start", start)->required();
    scan->add_option("--stop", stop)->required();
    scan->add_option("--count", count, "grid points (inclusive)")->required();
    scan->add_option("--beta", beta_str, "fixed beta value(s)");
    scan->add_option("--sigma", sigma_str, "fixed sigma value(s)");
    scan->add_option("--alpha", alpha_str, "fixed alpha");
    scan->add_option("--alphap", alphap_str, "fixed alpha'");
    scan->add_option("--alphas", alphas_str, "fixed alpha'1..4");
    scan->add_option("--x", x_str, "fixed x");
    scan->add_option("--z", z_str, "fixed z");
    scan->add_option("--P", P_str, "fixed P");
    scan->add_option("--Pprime", Pp_str, "fixed P'");
    scan->add_option("--tol", rq.tol, "quadrature relative tolerance");
    scan->add_option("--out", out_path, "CSV path (default stdout)");
    scan->add_option("--jobs", jobs, "worker threads");

    try {
        app.parse(argc, argv);
        if (!beta_str.empty()) rq.beta = parse_complex_list(beta_str);
        if (!sigma_str.empty()) rq.sigma = parse_complex_list(sigma_str);
        if (!alphas_str.empty()) rq.alphas = parse_complex_list(alphas_str);
        if (!alpha_str.empty()) rq.alpha = parse_complex(alpha_str);
        if (!alphap_str.empty()) rq.alphap = parse_complex(alphap_str);
        if (!x_str.empty()) rq.x = parse_complex(x_str);
        if (!z_str.empty()) rq.z = parse_complex(z_str);
        if (!P_str.empty()) rq.P = parse_complex(P_str);
        if (!Pp_str.empty()) rq.Pprime = parse_complex(Pp_str);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return (code == 0) ? 0 : kExitUsage;
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(rq, format);
        if (verify->parsed()) {
            std::vector<double> gammas;
            std::stringstream ss(gamma_list);
            std::string item;
            while (std::getline(ss, item, ',')) gammas.push_back(std::stod(item));
            std::optional<double> tol;
            if (tol_flag > 0.0) tol = tol_flag;
            return cmd_verify(gammas, cases, seed, tol, report_path, jobs, timings);
        }
        if (scan->parsed()) return cmd_scan(rq, vary, start, stop, count, out_path, jobs);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const lcft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEval;
    }
    return kExitUsage;
}
