#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "fracadi/adi2d.hpp"
#include "fracadi/coefficients.hpp"
#include "fracadi/solver1d.hpp"
#include "fracadi/types.hpp"

namespace fracadi {

struct ConvergenceEntry {
    double h;
    double error;
    std::optional<double> order;  // absent on the first entry or after a failure
    std::string note;
};

struct ConvergenceReport {
    std::string problem_id;
    double alpha = 0.0;
    std::optional<double> beta;
    std::string dt_rule;
    std::vector<ConvergenceEntry> entries;
};

double linf_error(const ScalarField1D& numeric,
                  const std::function<double(double, double)>& exact, double t);
double linf_error(const ScalarField2D& numeric,
                  const std::function<double(double, double, double)>& exact, double t);

// order_k = log2(e_{k-1}/e_k) for a strictly halving h sequence
std::vector<std::optional<double>> observed_orders(const std::vector<double>& errors);

struct AmplificationSweep {
    std::vector<double> omegas;     // omega * dx, sampled on [0, 2*pi)
    std::vector<double> magnitudes;
    double max_magnitude = 0.0;
};

// |Q(omega)| = |1+Z|/|1-Z| for the constant-coefficient scheme; theta is
// omega*dx and the p/q sums come from a deep interior row of `rows`.
double amplification_1d(double theta, const OperatorRows& rows, double xi, double eta,
                        double gamma);
double amplification_2d(double theta_x, double theta_y, const OperatorRows& rows_x,
                        const OperatorRows& rows_y, double xi, double eta, double gamma,
                        double xi_t, double eta_t, double gamma_t);

AmplificationSweep amplification_sweep_1d(const OperatorRows& rows, double xi,
                                          double eta, double gamma, int samples = 1024);
AmplificationSweep amplification_sweep_2d(const OperatorRows& rows_x,
                                          const OperatorRows& rows_y, double xi,
                                          double eta, double gamma, double xi_t,
                                          double eta_t, double gamma_t,
                                          int samples = 1024);

struct AuditReport {
    bool pass = true;
    std::string detail;  // first violation, with indices and values
};

// Sum-negativity of every p/q row, tail positivity and the closed-form
// interior values, and the interior transpose identity p_{i,k} = q_{k,i}.
AuditReport coefficient_audit(const FractionalOrder& alpha, int n_cells);
AuditReport coefficient_audit(const OperatorRows& rows);

}  // namespace fracadi
