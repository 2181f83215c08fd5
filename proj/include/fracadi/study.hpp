#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracadi/analysis.hpp"
#include "fracadi/registry.hpp"

namespace fracadi {

// Max deviation over interior nodes between the spline operator and the
// quadrature oracle for an operator-test entry (table1/table2).
double operator_test_error(const ProblemRegistryEntry& entry, double alpha, int n_cells,
                           double oracle_tol = 1e-10);

// l_inf error at t_final for a solver entry on an n-cell grid with dt = h
// (or the given dt).
double solve_error(const ProblemRegistryEntry& entry, double alpha,
                   std::optional<double> beta, int n_cells,
                   std::optional<double> dt = std::nullopt,
                   double oracle_tol = 1e-10);

// Runs the entry over a halving grid sequence and fills errors and observed
// orders. n_list holds 1/h values (strictly doubling). Solver failures are
// recorded per entry and the study continues.
ConvergenceReport convergence_study(const ProblemRegistryEntry& entry, double alpha,
                                    std::optional<double> beta,
                                    const std::vector<int>& n_list,
                                    std::optional<double> dt = std::nullopt,
                                    double oracle_tol = 1e-10);

}  // namespace fracadi
