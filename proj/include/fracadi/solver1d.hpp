#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>

#include "fracadi/coefficients.hpp"
#include "fracadi/types.hpp"

namespace fracadi {

struct Problem1D {
    double x_left = 0.0;
    double x_right = 1.0;
    double alpha = 1.5;
    double t_final = 1.0;
    std::function<double(double)> d_plus;
    std::function<double(double)> d_minus;
    std::function<double(double)> g;
    std::function<double(double, double)> source;          // (x, t)
    std::function<double(double)> initial;
    std::function<double(double)> boundary_left;           // t -> value
    std::function<double(double)> boundary_right;
    std::function<double(double, double)> exact;           // optional, (x, t)
};

// Crank-Nicolson system (I-A) u^{n+1} = (I+A) u^n + dt*S^{n+1/2}, with
// identity boundary rows; (I-A) is factored once.
struct CNSystem {
    UniformGrid1D grid;
    double dt;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_minus;   // LU of (I-A) with boundary rows
    Eigen::MatrixXd matrix_plus;                     // (I+A), boundary rows zeroed
};

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DivergenceError : SolverError {
    int step;
    DivergenceError(const std::string& msg, int s) : SolverError(msg), step(s) {}
};

CNSystem assemble(const Problem1D& problem, const UniformGrid1D& grid, double dt);

ScalarField1D cn_step(const CNSystem& system, const ScalarField1D& u, double t_n,
                      const Problem1D& problem);

struct Solve1DResult {
    ScalarField1D field;
    int steps;
    double dt_used;
};

Solve1DResult solve1d(const Problem1D& problem, int n_cells, double dt);

}  // namespace fracadi
