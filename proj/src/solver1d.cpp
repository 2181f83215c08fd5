#include "fracadi/solver1d.hpp"

#include <cmath>

namespace fracadi {

CNSystem assemble(const Problem1D& problem, const UniformGrid1D& grid, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("assemble: dt must be positive");
    if (grid.n_cells < 3) throw std::invalid_argument("assemble: n_cells >= 3 required");

    const FractionalOrder alpha(problem.alpha);
    const OperatorRows rows(alpha, grid.n_cells);
    const int n = grid.n_cells;
    const double dx = grid.spacing();
    const double frac_scale = dt / (2.0 * std::tgamma(4.0 - problem.alpha) *
                                    std::pow(dx, problem.alpha));

    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 1; i <= n - 1; ++i) {
        const double x = grid.node(i);
        const double dp = problem.d_plus ? problem.d_plus(x) : 0.0;
        const double dm = problem.d_minus ? problem.d_minus(x) : 0.0;
        if (dp < 0.0 || dm < 0.0)
            throw std::invalid_argument("assemble: diffusion coefficients must be >= 0");
        const double xi = frac_scale * dp;
        const double eta = frac_scale * dm;
        const double gamma = problem.g ? dt * problem.g(x) / (4.0 * dx) : 0.0;

        const auto& pr = rows.left(i);
        for (int k = 0; k <= i + 1; ++k) A(i, k) += xi * pr[k];
        const auto& qr = rows.right(i);
        for (int k = i - 1; k <= n; ++k) A(i, k) += eta * qr[k - (i - 1)];
        // central convection per D''_{alpha,x}: +gamma at i+1, -gamma at i-1
        A(i, i + 1) += gamma;
        A(i, i - 1) -= gamma;
    }

    Eigen::MatrixXd minus = Eigen::MatrixXd::Identity(n + 1, n + 1) - A;
    Eigen::MatrixXd plus = Eigen::MatrixXd::Identity(n + 1, n + 1) + A;
    // Dirichlet rows: u^{n+1} at the boundary comes straight from the data.
    minus.row(0).setZero();
    minus(0, 0) = 1.0;
    minus.row(n).setZero();
    minus(n, n) = 1.0;
    plus.row(0).setZero();
    plus.row(n).setZero();

    CNSystem system{grid, dt, Eigen::PartialPivLU<Eigen::MatrixXd>(minus),
                    std::move(plus)};
    if (system.lu_minus.determinant() == 0.0)
        throw SolverError("assemble: singular Crank-Nicolson matrix");
    return system;
}

ScalarField1D cn_step(const CNSystem& system, const ScalarField1D& u, double t_n,
                      const Problem1D& problem) {
    const int n = system.grid.n_cells;
    const double dt = system.dt;
    const Eigen::Map<const Eigen::VectorXd> uv(u.values.data(), n + 1);

    Eigen::VectorXd rhs = system.matrix_plus * uv;
    if (problem.source) {
        const double tm = t_n + dt / 2.0;
        for (int i = 1; i <= n - 1; ++i)
            rhs(i) += dt * problem.source(system.grid.node(i), tm);
    }
    rhs(0) = problem.boundary_left ? problem.boundary_left(t_n + dt) : 0.0;
    rhs(n) = problem.boundary_right ? problem.boundary_right(t_n + dt) : 0.0;

    Eigen::VectorXd next = system.lu_minus.solve(rhs);
    if (!next.allFinite())
        throw DivergenceError("cn_step: non-finite values in solution",
                              static_cast<int>(std::lround(t_n / dt)));
    return ScalarField1D(system.grid,
                         std::vector<double>(next.data(), next.data() + n + 1));
}

Solve1DResult solve1d(const Problem1D& problem, int n_cells, double dt) {
    const UniformGrid1D grid(problem.x_left, problem.x_right, n_cells);
    const double ratio = problem.t_final / dt;
    int steps = static_cast<int>(std::llround(ratio));
    double dt_used = dt;
    if (steps < 1 || std::abs(ratio - steps) > 1e-9 * ratio) {
        steps = std::max(1, static_cast<int>(std::ceil(ratio)));
        dt_used = problem.t_final / steps;
    }

    const CNSystem system = assemble(problem, grid, dt_used);
    ScalarField1D u = ScalarField1D::sample(grid, problem.initial);
    double t = 0.0;
    for (int s = 0; s < steps; ++s) {
        u = cn_step(system, u, t, problem);
        t += dt_used;
    }
    return {std::move(u), steps, dt_used};
}

}  // namespace fracadi
