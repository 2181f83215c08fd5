#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "fracadi/study.hpp"

namespace py = pybind11;
using namespace fracadi;

namespace {

py::dict report_to_dict(const ConvergenceReport& r) {
    py::dict d;
    d["problem"] = r.problem_id;
    d["alpha"] = r.alpha;
    if (r.beta) d["beta"] = *r.beta;
    d["dt_rule"] = r.dt_rule;
    py::list entries;
    for (const auto& e : r.entries) {
        py::dict je;
        je["h"] = e.h;
        je["error"] = e.error;
        if (e.order) je["order"] = *e.order;
        if (!e.note.empty()) je["note"] = e.note;
        entries.append(je);
    }
    d["entries"] = entries;
    return d;
}

}  // namespace

PYBIND11_MODULE(_fracadi, m) {
    m.doc() = "second-order solvers for two-sided space-fractional "
              "convection-diffusion equations";

    m.def("problems", []() {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& e : registry()) out.emplace_back(e.id, e.description);
        return out;
    });

    m.def(
        "left_row",
        [](int i, double alpha, int n) { return left_row(i, FractionalOrder(alpha), n); },
        py::arg("i"), py::arg("alpha"), py::arg("n"));
    m.def(
        "right_row",
        [](int i, double alpha, int n) { return right_row(i, FractionalOrder(alpha), n); },
        py::arg("i"), py::arg("alpha"), py::arg("n"));

    m.def(
        "apply_left",
        [](std::vector<double> values, double alpha) {
            const UniformGrid1D grid(0.0, 1.0, static_cast<int>(values.size()) - 1);
            return apply_left_spline(ScalarField1D(grid, std::move(values)),
                                     FractionalOrder(alpha));
        },
        py::arg("values"), py::arg("alpha"),
        "Left fractional derivative of nodal values on a uniform [0,1] grid; "
        "returns interior nodes 1..n-1.");
    m.def(
        "apply_right",
        [](std::vector<double> values, double alpha) {
            const UniformGrid1D grid(0.0, 1.0, static_cast<int>(values.size()) - 1);
            return apply_right_spline(ScalarField1D(grid, std::move(values)),
                                      FractionalOrder(alpha));
        },
        py::arg("values"), py::arg("alpha"));

    m.def(
        "rl_power_left",
        [](double p, double alpha, double x, double x_left) {
            return rl_power_left(p, FractionalOrder(alpha), x, x_left);
        },
        py::arg("p"), py::arg("alpha"), py::arg("x"), py::arg("x_left") = 0.0);
    m.def(
        "rl_power_right",
        [](double p, double alpha, double x, double x_right) {
            return rl_power_right(p, FractionalOrder(alpha), x, x_right);
        },
        py::arg("p"), py::arg("alpha"), py::arg("x"), py::arg("x_right") = 1.0);

    m.def(
        "audit",
        [](double alpha, int n) {
            const AuditReport r = coefficient_audit(FractionalOrder(alpha), n);
            return py::make_tuple(r.pass, r.detail);
        },
        py::arg("alpha"), py::arg("n") = 64);

    m.def(
        "amplification_max",
        [](double alpha, double xi, double eta, double gamma, int n) {
            const OperatorRows rows(FractionalOrder(alpha), n);
            return amplification_sweep_1d(rows, xi, eta, gamma).max_magnitude;
        },
        py::arg("alpha"), py::arg("xi") = 1.0, py::arg("eta") = 1.0,
        py::arg("gamma") = 0.5, py::arg("n") = 512);

    m.def(
        "solve1d",
        [](const std::string& id, double alpha, int n, std::optional<double> dt) {
            const auto& entry = find_problem(id);
            const UniformGrid1D grid(0.0, 1.0, n);
            const Problem1D p = build_problem_1d(entry, alpha, grid);
            const Solve1DResult r = solve1d(p, n, dt.value_or(grid.spacing()));
            py::dict d;
            d["u"] = r.field.values;
            d["steps"] = r.steps;
            d["dt"] = r.dt_used;
            if (p.exact) d["linf_error"] = linf_error(r.field, p.exact, p.t_final);
            return d;
        },
        py::arg("problem"), py::arg("alpha"), py::arg("n"),
        py::arg("dt") = std::nullopt);

    m.def(
        "solve2d",
        [](const std::string& id, double alpha, double beta, int n,
           std::optional<double> dt) {
            const auto& entry = find_problem(id);
            const UniformGrid1D g(0.0, 1.0, n);
            const Problem2D p = build_problem_2d(entry, alpha, beta, g, g);
            const Solve2DResult r = solve2d(p, n, n, dt.value_or(g.spacing()));
            py::dict d;
            d["u"] = r.field.values;
            d["shape"] = py::make_tuple(n + 1, n + 1);
            d["steps"] = r.steps;
            d["dt"] = r.dt_used;
            if (p.exact) d["linf_error"] = linf_error(r.field, p.exact, p.t_final);
            return d;
        },
        py::arg("problem"), py::arg("alpha"), py::arg("beta"), py::arg("n"),
        py::arg("dt") = std::nullopt);

    m.def(
        "convergence",
        [](const std::string& id, double alpha, std::optional<double> beta,
           const std::vector<int>& n_list) {
            return report_to_dict(
                convergence_study(find_problem(id), alpha, beta, n_list));
        },
        py::arg("problem"), py::arg("alpha"), py::arg("beta") = std::nullopt,
        py::arg("n_list") = std::vector<int>{50, 100, 200});
}
