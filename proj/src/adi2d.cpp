#include "fracadi/adi2d.hpp"

#include <cmath>

#include "fracadi/coefficients.hpp"

namespace fracadi {

namespace {

// (dt/2) * delta matrix along one direction at a fixed transverse
// coordinate; interior rows only, boundary rows zero.
Eigen::MatrixXd half_operator(const OperatorRows& rows, const UniformGrid1D& grid,
                              double dt,
                              const std::function<double(double)>& diff_plus,
                              const std::function<double(double)>& diff_minus,
                              const std::function<double(double)>& conv) {
    const int n = grid.n_cells;
    const double dx = grid.spacing();
    const double sc = dt / (2.0 * std::tgamma(4.0 - rows.order().value()) *
                            std::pow(dx, rows.order().value()));
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int i = 1; i <= n - 1; ++i) {
        const double x = grid.node(i);
        const double dp = diff_plus ? diff_plus(x) : 0.0;
        const double dm = diff_minus ? diff_minus(x) : 0.0;
        if (dp < 0.0 || dm < 0.0)
            throw std::invalid_argument("diffusion coefficients must be >= 0");
        const double xi = sc * dp;
        const double eta = sc * dm;
        const double gamma = conv ? dt * conv(x) / (4.0 * dx) : 0.0;
        const auto& pr = rows.left(i);
        for (int k = 0; k <= i + 1; ++k) M(i, k) += xi * pr[k];
        const auto& qr = rows.right(i);
        for (int k = i - 1; k <= n; ++k) M(i, k) += eta * qr[k - (i - 1)];
        M(i, i + 1) += gamma;
        M(i, i - 1) -= gamma;
    }
    return M;
}

}  // namespace

DirectionOperators build_direction_operators(const Problem2D& problem,
                                             const UniformGrid1D& grid_x,
                                             const UniformGrid1D& grid_y, double dt) {
    if (grid_x.n_cells < 3 || grid_y.n_cells < 3)
        throw std::invalid_argument("build_direction_operators: N_x, N_y >= 3 required");

    const OperatorRows rows_x(FractionalOrder(problem.alpha), grid_x.n_cells);
    const OperatorRows rows_y(FractionalOrder(problem.beta), grid_y.n_cells);

    DirectionOperators ops{grid_x, grid_y, dt, {}, {}, {}, {},
                           Eigen::MatrixXd(), Eigen::MatrixXd()};

    auto bind_y = [](const std::function<double(double, double)>& f, double y) {
        return f ? std::function<double(double)>([f, y](double x) { return f(x, y); })
                 : std::function<double(double)>();
    };
    auto bind_x = [](const std::function<double(double, double)>& f, double x) {
        return f ? std::function<double(double)>([f, x](double y) { return f(x, y); })
                 : std::function<double(double)>();
    };

    auto factor = [](const Eigen::MatrixXd& half, int n,
                     std::vector<std::shared_ptr<Eigen::PartialPivLU<Eigen::MatrixXd>>>&
                         lus,
                     Eigen::MatrixXd& last_half) {
        if (!lus.empty() && half == last_half) {
            lus.push_back(lus.back());
            return;
        }
        Eigen::MatrixXd minus = Eigen::MatrixXd::Identity(n + 1, n + 1) - half;
        minus.row(0).setZero();
        minus(0, 0) = 1.0;
        minus.row(n).setZero();
        minus(n, n) = 1.0;
        auto lu = std::make_shared<Eigen::PartialPivLU<Eigen::MatrixXd>>(minus);
        if (lu->determinant() == 0.0)
            throw SolverError("build_direction_operators: singular sweep matrix");
        lus.push_back(std::move(lu));
        last_half = half;
    };

    Eigen::MatrixXd last_half;
    for (int j = 1; j <= grid_y.n_cells - 1; ++j) {
        const double y = grid_y.node(j);
        Eigen::MatrixXd half =
            half_operator(rows_x, grid_x, dt, bind_y(problem.d_plus, y),
                          bind_y(problem.d_minus, y), bind_y(problem.g, y));
        factor(half, grid_x.n_cells, ops.lu_x, last_half);
        Eigen::MatrixXd plus =
            Eigen::MatrixXd::Identity(grid_x.n_nodes(), grid_x.n_nodes()) + half;
        plus.row(0).setZero();
        plus.row(grid_x.n_cells).setZero();
        ops.plus_x.push_back(std::move(plus));
    }

    last_half.resize(0, 0);
    for (int i = 1; i <= grid_x.n_cells - 1; ++i) {
        const double x = grid_x.node(i);
        Eigen::MatrixXd half =
            half_operator(rows_y, grid_y, dt, bind_x(problem.e_plus, x),
                          bind_x(problem.e_minus, x), bind_x(problem.h, x));
        factor(half, grid_y.n_cells, ops.lu_y, last_half);
        Eigen::MatrixXd plus =
            Eigen::MatrixXd::Identity(grid_y.n_nodes(), grid_y.n_nodes()) + half;
        plus.row(0).setZero();
        plus.row(grid_y.n_cells).setZero();
        ops.plus_y.push_back(std::move(plus));
    }

    ops.half_y_left =
        half_operator(rows_y, grid_y, dt, bind_x(problem.e_plus, grid_x.x_left),
                      bind_x(problem.e_minus, grid_x.x_left),
                      bind_x(problem.h, grid_x.x_left));
    ops.half_y_right =
        half_operator(rows_y, grid_y, dt, bind_x(problem.e_plus, grid_x.x_right),
                      bind_x(problem.e_minus, grid_x.x_right),
                      bind_x(problem.h, grid_x.x_right));
    return ops;
}

void intermediate_boundary(const Problem2D& problem, const DirectionOperators& ops,
                           double t_n, ScalarField2D& u_star) {
    const int ny = ops.grid_y.n_cells;
    const int nx = ops.grid_x.n_cells;
    const double t_next = t_n + ops.dt;

    auto column = [&](double x, double t) {
        Eigen::VectorXd b(ny + 1);
        for (int j = 0; j <= ny; ++j) b(j) = problem.boundary(x, ops.grid_y.node(j), t);
        return b;
    };

    auto set_column = [&](int i, const Eigen::MatrixXd& half, double x) {
        const Eigen::VectorXd b_old = column(x, t_n);
        const Eigen::VectorXd b_new = column(x, t_next);
        const Eigen::VectorXd star =
            0.5 * ((b_new - half * b_new) + (b_old + half * b_old));
        for (int j = 1; j <= ny - 1; ++j) u_star.at(i, j) = star(j);
    };

    set_column(0, ops.half_y_left, ops.grid_x.x_left);
    set_column(nx, ops.half_y_right, ops.grid_x.x_right);
}

ScalarField2D sweep_x(const ScalarField2D& u_n, double t_n,
                      const DirectionOperators& ops, const Problem2D& problem) {
    const int nx = ops.grid_x.n_cells;
    const int ny = ops.grid_y.n_cells;
    const double tm = t_n + ops.dt / 2.0;

    ScalarField2D u_star(ops.grid_x, ops.grid_y);
    intermediate_boundary(problem, ops, t_n, u_star);

    // explicit y application (1 + (dt/2) delta_y) u^n at interior (i, j)
    Eigen::MatrixXd w(nx + 1, ny + 1);
    for (int i = 1; i <= nx - 1; ++i) {
        Eigen::VectorXd col(ny + 1);
        for (int j = 0; j <= ny; ++j) col(j) = u_n.at(i, j);
        w.row(i) = (ops.plus_y[i - 1] * col).transpose();
    }

    for (int j = 1; j <= ny - 1; ++j) {
        Eigen::VectorXd rhs(nx + 1);
        rhs(0) = u_star.at(0, j);
        rhs(nx) = u_star.at(nx, j);
        const double y = ops.grid_y.node(j);
        for (int i = 1; i <= nx - 1; ++i) {
            double s = problem.source ? problem.source(ops.grid_x.node(i), y, tm) : 0.0;
            rhs(i) = w(i, j) + ops.dt / 2.0 * s;
        }
        const Eigen::VectorXd sol = ops.lu_x[j - 1]->solve(rhs);
        if (!sol.allFinite())
            throw DivergenceError("sweep_x: non-finite values in row solve", j);
        for (int i = 0; i <= nx; ++i) u_star.at(i, j) = sol(i);
    }
    return u_star;
}

ScalarField2D sweep_y(const ScalarField2D& u_star, double t_n,
                      const DirectionOperators& ops, const Problem2D& problem) {
    const int nx = ops.grid_x.n_cells;
    const int ny = ops.grid_y.n_cells;
    const double tm = t_n + ops.dt / 2.0;
    const double t_next = t_n + ops.dt;

    // explicit x application (1 + (dt/2) delta_x) u* at interior (i, j)
    Eigen::MatrixXd v(nx + 1, ny + 1);
    for (int j = 1; j <= ny - 1; ++j) {
        Eigen::VectorXd row(nx + 1);
        for (int i = 0; i <= nx; ++i) row(i) = u_star.at(i, j);
        v.col(j) = ops.plus_x[j - 1] * row;
    }

    ScalarField2D u_next(ops.grid_x, ops.grid_y);
    for (int i = 1; i <= nx - 1; ++i) {
        const double x = ops.grid_x.node(i);
        Eigen::VectorXd rhs(ny + 1);
        rhs(0) = problem.boundary(x, ops.grid_y.x_left, t_next);
        rhs(ny) = problem.boundary(x, ops.grid_y.x_right, t_next);
        for (int j = 1; j <= ny - 1; ++j) {
            double s = problem.source ? problem.source(x, ops.grid_y.node(j), tm) : 0.0;
            rhs(j) = v(i, j) + ops.dt / 2.0 * s;
        }
        const Eigen::VectorXd sol = ops.lu_y[i - 1]->solve(rhs);
        if (!sol.allFinite())
            throw DivergenceError("sweep_y: non-finite values in column solve", i);
        for (int j = 0; j <= ny; ++j) u_next.at(i, j) = sol(j);
    }
    // boundary columns at t_{n+1}
    for (int j = 0; j <= ny; ++j) {
        u_next.at(0, j) = problem.boundary(ops.grid_x.x_left, ops.grid_y.node(j), t_next);
        u_next.at(nx, j) =
            problem.boundary(ops.grid_x.x_right, ops.grid_y.node(j), t_next);
    }
    for (int i = 0; i <= nx; ++i) {
        u_next.at(i, 0) = problem.boundary(ops.grid_x.node(i), ops.grid_y.x_left, t_next);
        u_next.at(i, ny) =
            problem.boundary(ops.grid_x.node(i), ops.grid_y.x_right, t_next);
    }
    return u_next;
}

Solve2DResult solve2d(const Problem2D& problem, int n_x, int n_y, double dt) {
    const UniformGrid1D gx(problem.x_left, problem.x_right, n_x);
    const UniformGrid1D gy(problem.y_left, problem.y_right, n_y);

    const double ratio = problem.t_final / dt;
    int steps = static_cast<int>(std::llround(ratio));
    double dt_used = dt;
    if (steps < 1 || std::abs(ratio - steps) > 1e-9 * ratio) {
        steps = std::max(1, static_cast<int>(std::ceil(ratio)));
        dt_used = problem.t_final / steps;
    }

    const DirectionOperators ops = build_direction_operators(problem, gx, gy, dt_used);

    ScalarField2D u(gx, gy);
    for (int i = 0; i <= n_x; ++i)
        for (int j = 0; j <= n_y; ++j) u.at(i, j) = problem.initial(gx.node(i), gy.node(j));

    double t = 0.0;
    for (int s = 0; s < steps; ++s) {
        ScalarField2D u_star = sweep_x(u, t, ops, problem);
        u = sweep_y(u_star, t, ops, problem);
        t += dt_used;
    }
    return {std::move(u), steps, dt_used};
}

}  // namespace fracadi
