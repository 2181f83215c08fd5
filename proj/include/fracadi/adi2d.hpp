#pragma once

#include <Eigen/Dense>

#include <functional>
#include <memory>
#include <vector>

#include "fracadi/solver1d.hpp"
#include "fracadi/types.hpp"

namespace fracadi {

struct Problem2D {
    double x_left = 0.0, x_right = 1.0;
    double y_left = 0.0, y_right = 1.0;
    double alpha = 1.5, beta = 1.5;
    double t_final = 1.0;
    std::function<double(double, double)> d_plus, d_minus;  // x-direction diffusion
    std::function<double(double, double)> e_plus, e_minus;  // y-direction diffusion
    std::function<double(double, double)> g, h;             // convection
    std::function<double(double, double, double)> source;   // (x, y, t)
    std::function<double(double, double)> initial;
    std::function<double(double, double, double)> boundary;  // (x, y, t) on the edges
    std::function<double(double, double, double)> exact;     // optional
};

// Factored per-row x-systems and per-column y-systems for the
// Peaceman-Rachford sweeps. half_* matrices hold (dt/2) * delta with zeroed
// boundary rows; lu_* factor (I - (dt/2) delta) with identity boundary rows.
// Identical rows (constant coefficients) share one factorization.
struct DirectionOperators {
    UniformGrid1D grid_x;
    UniformGrid1D grid_y;
    double dt;
    // index j-1 for interior j: operators acting along x at y=y_j
    std::vector<std::shared_ptr<Eigen::PartialPivLU<Eigen::MatrixXd>>> lu_x;
    std::vector<Eigen::MatrixXd> plus_x;  // I + (dt/2) delta_x, boundary rows zero
    // index i-1 for interior i: operators acting along y at x=x_i
    std::vector<std::shared_ptr<Eigen::PartialPivLU<Eigen::MatrixXd>>> lu_y;
    std::vector<Eigen::MatrixXd> plus_y;
    // (dt/2) delta_y along the boundary columns i=0 and i=N_x (Eq-level
    // operator only, for the intermediate boundary construction)
    Eigen::MatrixXd half_y_left;
    Eigen::MatrixXd half_y_right;
};

DirectionOperators build_direction_operators(const Problem2D& problem,
                                             const UniformGrid1D& grid_x,
                                             const UniformGrid1D& grid_y, double dt);

// Columns i=0 and i=N_x of the intermediate field u*, built from boundary
// data at t_n and t_{n+1}.
void intermediate_boundary(const Problem2D& problem, const DirectionOperators& ops,
                           double t_n, ScalarField2D& u_star);

// x-direction implicit half step; fills interior rows and the i=0, i=N_x
// columns of u*.
ScalarField2D sweep_x(const ScalarField2D& u_n, double t_n,
                      const DirectionOperators& ops, const Problem2D& problem);

// y-direction implicit half step producing u^{n+1} with boundary data at
// t_{n+1}.
ScalarField2D sweep_y(const ScalarField2D& u_star, double t_n,
                      const DirectionOperators& ops, const Problem2D& problem);

struct Solve2DResult {
    ScalarField2D field;
    int steps;
    double dt_used;
};

Solve2DResult solve2d(const Problem2D& problem, int n_x, int n_y, double dt);

}  // namespace fracadi
