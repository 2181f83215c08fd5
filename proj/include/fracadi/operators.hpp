#pragma once

#include <vector>

#include "fracadi/coefficients.hpp"
#include "fracadi/types.hpp"

namespace fracadi {

// Spline approximations of the left/right Riemann-Liouville derivatives,
// evaluated at the interior nodes 1..N_x-1. Boundary node values u_0 and
// u_{N_x} participate in the sums and come from the caller.
std::vector<double> apply_left_spline(const ScalarField1D& u, const OperatorRows& rows);
std::vector<double> apply_right_spline(const ScalarField1D& u, const OperatorRows& rows);

std::vector<double> apply_left_spline(const ScalarField1D& u, const FractionalOrder& alpha);
std::vector<double> apply_right_spline(const ScalarField1D& u, const FractionalOrder& alpha);

// First-order Grunwald-Letnikov sums; (x - x_left)/h must be a positive integer.
double gl_left(const std::function<double(double)>& f, double x, double h,
               const FractionalOrder& alpha, double x_left);
double gl_right(const std::function<double(double)>& f, double x, double h,
                const FractionalOrder& alpha, double x_right);

// Exact left/right derivatives of (x-x_left)^p resp. (x_right-x)^p.
double rl_power_left(double p, const FractionalOrder& alpha, double x, double x_left);
double rl_power_right(double p, const FractionalOrder& alpha, double x, double x_right);

// High-accuracy oracle: derivative transferred onto u'' plus endpoint terms,
// with the weakly singular integral handled by a Jacobi-weighted Gauss rule.
// Node counts double until two successive estimates agree to tol.
double rl_quadrature_left(const AnalyticFunction1D& u, const FractionalOrder& alpha,
                          double x, double x_left, double tol);
double rl_quadrature_right(const AnalyticFunction1D& u, const FractionalOrder& alpha,
                           double x, double x_right, double tol);

struct QuadratureError : std::runtime_error {
    double achieved;
    QuadratureError(const std::string& msg, double est)
        : std::runtime_error(msg), achieved(est) {}
};

// Gauss rule for the weight (1+z)^b on [-1,1], computed by Golub-Welsch.
// Exposed for the truncation property tests.
struct GaussJacobiRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussJacobiRule gauss_jacobi(int n, double b);

}  // namespace fracadi
