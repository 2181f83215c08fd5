#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracadi/adi2d.hpp"
#include "fracadi/operators.hpp"
#include "fracadi/solver1d.hpp"
#include "fracadi/types.hpp"

namespace fracadi {

// A benchmark problem with a separable manufactured solution
// u = e^{-t} X(x) (1D) or u = e^{-t} X(x) Y(y) (2D). The forcing term is
// built on demand from the quadrature oracle.
struct ProblemRegistryEntry {
    std::string id;
    int dimension;  // 1 or 2, or 0 for pure operator tests
    std::string description;

    // spatial factors of the manufactured solution
    AnalyticFunction1D x_factor;
    AnalyticFunction1D y_factor;  // 2D only

    // coefficient callbacks; depend on alpha/beta so bound at build time
    std::function<Problem1D(double alpha)> make_1d;
    std::function<Problem2D(double alpha, double beta)> make_2d;
};

const std::vector<ProblemRegistryEntry>& registry();
const ProblemRegistryEntry& find_problem(const std::string& id);

// Per-node oracle samples for a separable 1D factor.
struct FactorSamples {
    std::vector<double> value;       // X(x_i)
    std::vector<double> deriv;       // X'(x_i)
    std::vector<double> frac_left;   // _xL D^alpha X at x_i (interior; endpoints 0)
    std::vector<double> frac_right;  // _x D^alpha_xR X at x_i
};

FactorSamples sample_factor(const AnalyticFunction1D& f, const UniformGrid1D& grid,
                            const FractionalOrder& alpha, double tol);

// Bind the manufactured forcing of a 1D entry onto a concrete grid; the
// returned problem carries a source sampler valid at grid nodes.
Problem1D build_problem_1d(const ProblemRegistryEntry& entry, double alpha,
                           const UniformGrid1D& grid, double oracle_tol = 1e-10);
Problem2D build_problem_2d(const ProblemRegistryEntry& entry, double alpha, double beta,
                           const UniformGrid1D& grid_x, const UniformGrid1D& grid_y,
                           double oracle_tol = 1e-10);

}  // namespace fracadi
