// Command-line harness: problem registry runs, convergence studies,
// coefficient dumps, stability sweeps, and the coefficient audit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fracadi/study.hpp"

using json = nlohmann::json;
using namespace fracadi;

namespace {

struct RunConfig {
    std::string command;
    std::string problem;
    double alpha = 1.5;
    double beta = 1.5;
    bool beta_set = false;
    int n = 64;
    std::vector<int> h_list;           // as 1/h denominators
    std::string dt = "match";          // "match" or a number
    double t_final = 1.0;
    std::string out;                   // empty = stdout
    std::string format = "csv";        // csv | json | md
    double oracle_tol = 1e-10;
    int threads = 1;                   // accepted for config round-trips
    double xi = 1.0, eta = 1.0, gamma = 0.5;
};

const int kExitConfig = 2;
const int kExitDivergence = 3;
const int kExitOracle = 4;

std::vector<int> parse_h_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t slash = item.find('/');
        if (slash != std::string::npos) {
            if (std::stod(item.substr(0, slash)) != 1.0)
                throw std::invalid_argument("h entries must be of the form 1/N");
            out.push_back(std::stoi(item.substr(slash + 1)));
        } else {
            const double h = std::stod(item);
            out.push_back(static_cast<int>(std::llround(1.0 / h)));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty h list");
    return out;
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out);
    if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
    f << text;
}

std::string fmt5(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4e", v);
    return buf;
}

std::string render_report(const ConvergenceReport& r, const std::string& format) {
    std::ostringstream os;
    if (format == "json") {
        json j{{"problem", r.problem_id}, {"alpha", r.alpha}, {"dt_rule", r.dt_rule}};
        if (r.beta) j["beta"] = *r.beta;
        j["entries"] = json::array();
        for (const auto& e : r.entries) {
            json je{{"h", e.h}, {"error", e.error}};
            if (e.order) je["order"] = *e.order;
            if (!e.note.empty()) je["note"] = e.note;
            j["entries"].push_back(je);
        }
        os << j.dump(2) << "\n";
    } else if (format == "md") {
        os << "| h | error | order |\n|---|---|---|\n";
        for (const auto& e : r.entries)
            os << "| 1/" << std::llround(1.0 / e.h) << " | " << fmt5(e.error) << " | "
               << (e.order ? fmt5(*e.order) : std::string("-")) << " |\n";
    } else {
        os << "h,error,order\n";
        for (const auto& e : r.entries)
            os << e.h << "," << fmt5(e.error) << ","
               << (e.order ? fmt5(*e.order) : std::string("")) << "\n";
    }
    return os.str();
}

std::optional<double> dt_value(const RunConfig& cfg) {
    if (cfg.dt == "match") return std::nullopt;
    return std::stod(cfg.dt);
}

int run_coeffs(const RunConfig& cfg) {
    const OperatorRows rows(FractionalOrder(cfg.alpha), cfg.n);
    std::ostringstream os;
    if (cfg.format == "json") {
        json j{{"alpha", cfg.alpha}, {"n_cells", cfg.n}};
        for (int i = 1; i <= cfg.n - 1; ++i) {
            j["left"].push_back(rows.left(i));
            j["right"].push_back(rows.right(i));
        }
        os << j.dump(2) << "\n";
    } else {
        os << "kind,i,k,value\n";
        for (int i = 1; i <= cfg.n - 1; ++i) {
            for (int k = 0; k <= i + 1; ++k)
                os << "p," << i << "," << k << "," << rows.p(i, k) << "\n";
            for (int k = i - 1; k <= cfg.n; ++k)
                os << "q," << i << "," << k << "," << rows.q(i, k) << "\n";
        }
    }
    write_output(cfg, os.str());
    return 0;
}

int run_converge(const RunConfig& cfg) {
    const auto& entry = find_problem(cfg.problem);
    std::vector<int> ns = cfg.h_list;
    if (ns.empty()) ns = {50, 100, 200, 400};
    std::optional<double> beta;
    if (entry.dimension == 2) beta = cfg.beta_set ? cfg.beta : cfg.alpha;
    const ConvergenceReport report =
        convergence_study(entry, cfg.alpha, beta, ns, dt_value(cfg), cfg.oracle_tol);
    write_output(cfg, render_report(report, cfg.format));
    for (const auto& e : report.entries)
        if (!e.note.empty()) return kExitDivergence;
    return 0;
}

int run_solve1d(const RunConfig& cfg) {
    const auto& entry = find_problem(cfg.problem);
    const UniformGrid1D grid(0.0, 1.0, cfg.n);
    Problem1D p = build_problem_1d(entry, cfg.alpha, grid, cfg.oracle_tol);
    p.t_final = cfg.t_final;
    const Solve1DResult r = solve1d(p, cfg.n, dt_value(cfg).value_or(grid.spacing()));
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "x,u\n";
        for (int i = 0; i <= cfg.n; ++i)
            os << grid.node(i) << "," << r.field.values[i] << "\n";
    } else {
        json j{{"problem", cfg.problem}, {"alpha", cfg.alpha},
               {"steps", r.steps},       {"dt", r.dt_used}};
        if (p.exact) j["linf_error"] = linf_error(r.field, p.exact, p.t_final);
        if (cfg.format == "json") j["field"] = r.field.values;
        os << j.dump(2) << "\n";
    }
    write_output(cfg, os.str());
    return 0;
}

int run_solve2d(const RunConfig& cfg) {
    const auto& entry = find_problem(cfg.problem);
    const UniformGrid1D gx(0.0, 1.0, cfg.n), gy(0.0, 1.0, cfg.n);
    const double beta = cfg.beta_set ? cfg.beta : cfg.alpha;
    Problem2D p = build_problem_2d(entry, cfg.alpha, beta, gx, gy, cfg.oracle_tol);
    p.t_final = cfg.t_final;
    const Solve2DResult r = solve2d(p, cfg.n, cfg.n, dt_value(cfg).value_or(gx.spacing()));
    std::ostringstream os;
    if (cfg.format == "csv") {
        // one row per y index
        for (int j = 0; j <= cfg.n; ++j) {
            for (int i = 0; i <= cfg.n; ++i) os << (i ? "," : "") << r.field.at(i, j);
            os << "\n";
        }
    } else {
        json j{{"problem", cfg.problem}, {"alpha", cfg.alpha}, {"beta", beta},
               {"steps", r.steps},       {"dt", r.dt_used}};
        if (p.exact) j["linf_error"] = linf_error(r.field, p.exact, p.t_final);
        os << j.dump(2) << "\n";
    }
    write_output(cfg, os.str());
    return 0;
}

int run_stability(const RunConfig& cfg) {
    const int n = 512;
    const OperatorRows rows_x(FractionalOrder(cfg.alpha), n);
    json j{{"alpha", cfg.alpha},
           {"xi", cfg.xi},
           {"eta", cfg.eta},
           {"gamma", cfg.gamma},
           {"omega_samples", 1024},
           {"note", "constant-coefficient von Neumann sweep; variable-coefficient "
                    "stability is observed empirically, not certified here"}};
    const AmplificationSweep s1 =
        amplification_sweep_1d(rows_x, cfg.xi, cfg.eta, cfg.gamma);
    j["max_magnitude_1d"] = s1.max_magnitude;
    bool pass = s1.max_magnitude <= 1.0 + 1e-12;
    if (cfg.beta_set) {
        const OperatorRows rows_y(FractionalOrder(cfg.beta), n);
        const AmplificationSweep s2 = amplification_sweep_2d(
            rows_x, rows_y, cfg.xi, cfg.eta, cfg.gamma, cfg.xi, cfg.eta, cfg.gamma);
        j["beta"] = cfg.beta;
        j["max_magnitude_2d"] = s2.max_magnitude;
        pass = pass && s2.max_magnitude <= 1.0 + 1e-12;
    }
    j["pass"] = pass;
    write_output(cfg, j.dump(2) + "\n");
    return 0;
}

int run_audit(const RunConfig& cfg) {
    const AuditReport r = coefficient_audit(FractionalOrder(cfg.alpha), cfg.n);
    json j{{"alpha", cfg.alpha}, {"n_cells", cfg.n}, {"pass", r.pass}};
    if (!r.pass) j["detail"] = r.detail;
    write_output(cfg, j.dump(2) + "\n");
    return r.pass ? 0 : 1;
}

int run_operator_test(const RunConfig& cfg) {
    const auto& entry = find_problem(cfg.problem);
    std::vector<int> ns = cfg.h_list;
    if (ns.empty()) ns = {50, 100, 200, 400};
    const ConvergenceReport report =
        convergence_study(entry, cfg.alpha, std::nullopt, ns, std::nullopt, cfg.oracle_tol);
    write_output(cfg, render_report(report, cfg.format));
    return 0;
}

void apply_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot read config file: " + path);
    json j = json::parse(f);
    if (j.contains("problem")) cfg.problem = j["problem"];
    if (j.contains("alpha")) cfg.alpha = j["alpha"];
    if (j.contains("beta")) { cfg.beta = j["beta"]; cfg.beta_set = true; }
    if (j.contains("n")) cfg.n = j["n"];
    if (j.contains("h")) cfg.h_list = parse_h_list(j["h"].get<std::string>());
    if (j.contains("dt")) cfg.dt = j["dt"].is_string() ? j["dt"].get<std::string>()
                                                       : std::to_string(j["dt"].get<double>());
    if (j.contains("tfinal")) cfg.t_final = j["tfinal"];
    if (j.contains("out")) cfg.out = j["out"];
    if (j.contains("format")) cfg.format = j["format"];
    if (j.contains("oracle_tol")) cfg.oracle_tol = j["oracle_tol"];
    if (j.contains("threads")) cfg.threads = j["threads"];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fracadi: two-sided space-fractional convection-diffusion solver"};
    app.set_help_flag("--help", "print help and exit");  // frees -h/--h for step sizes
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path, h_text;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print help and exit");
        sub->add_option("--config", config_path, "JSON config file (flags win)");
        sub->add_option("--alpha", cfg.alpha, "fractional order alpha in (1,2)");
        sub->add_option("--beta", cfg.beta, "fractional order beta in (1,2)")
            ->each([&](const std::string&) { cfg.beta_set = true; });
        sub->add_option("--n", cfg.n, "cells per direction");
        sub->add_option("--h", h_text, "comma list of step sizes, e.g. 1/50,1/100");
        sub->add_option("--dt", cfg.dt, "time step, or 'match' for dt = h");
        sub->add_option("--tfinal", cfg.t_final, "final time");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--format", cfg.format, "csv | json | md")
            ->check(CLI::IsMember({"csv", "json", "md"}));
        sub->add_option("--oracle-tol", cfg.oracle_tol, "quadrature oracle tolerance");
        sub->add_option("--threads", cfg.threads, "reserved; runs are sequential");
        sub->add_option("--problem", cfg.problem, "problem id from the registry");
        return sub;
    };

    auto* c_coeffs = add_common(app.add_subcommand("coeffs", "dump p/q coefficient rows"));
    auto* c_optest =
        add_common(app.add_subcommand("operator-test", "truncation error study"));
    auto* c_s1 = add_common(app.add_subcommand("solve1d", "run a 1D problem"));
    auto* c_s2 = add_common(app.add_subcommand("solve2d", "run a 2D problem"));
    auto* c_conv = add_common(app.add_subcommand("converge", "convergence study"));
    auto* c_stab = add_common(app.add_subcommand("stability", "amplification sweep"));
    c_stab->add_option("--xi", cfg.xi, "left-diffusion scale");
    c_stab->add_option("--eta", cfg.eta, "right-diffusion scale");
    c_stab->add_option("--gamma", cfg.gamma, "convection scale");
    auto* c_audit = add_common(app.add_subcommand("audit", "coefficient property audit"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try {
        if (!config_path.empty()) {
            // re-parse so that explicit flags override config values
            RunConfig from_file;
            apply_config_file(config_path, from_file);
            from_file.beta_set = from_file.beta_set || cfg.beta_set;
            std::swap(cfg, from_file);
            app.clear();
            app.parse(argc, argv);
            cfg.beta_set = cfg.beta_set || from_file.beta_set;
        }
        if (!h_text.empty()) cfg.h_list = parse_h_list(h_text);
        if (!(cfg.alpha > 1.0 && cfg.alpha < 2.0) ||
            (cfg.beta_set && !(cfg.beta > 1.0 && cfg.beta < 2.0)))
            throw std::invalid_argument("alpha/beta must lie in (1,2)");
        if (cfg.n < 4) throw std::invalid_argument("n must be at least 4");
        if (!(cfg.t_final > 0.0)) throw std::invalid_argument("tfinal must be positive");

        if (c_coeffs->parsed()) return run_coeffs(cfg);
        if (c_optest->parsed()) return run_operator_test(cfg);
        if (c_s1->parsed()) return run_solve1d(cfg);
        if (c_s2->parsed()) return run_solve2d(cfg);
        if (c_conv->parsed()) return run_converge(cfg);
        if (c_stab->parsed()) return run_stability(cfg);
        if (c_audit->parsed()) return run_audit(cfg);
        return kExitConfig;
    } catch (const DivergenceError& e) {
        std::cerr << "solver divergence: " << e.what() << "\n";
        return kExitDivergence;
    } catch (const QuadratureError& e) {
        std::cerr << "oracle failure: " << e.what() << "\n";
        return kExitOracle;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
