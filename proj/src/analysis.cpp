#include "fracadi/analysis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fracadi {

double linf_error(const ScalarField1D& numeric,
                  const std::function<double(double, double)>& exact, double t) {
    double m = 0.0;
    for (int i = 0; i < numeric.grid.n_nodes(); ++i)
        m = std::max(m, std::abs(numeric.values[i] - exact(numeric.grid.node(i), t)));
    return m;
}

double linf_error(const ScalarField2D& numeric,
                  const std::function<double(double, double, double)>& exact, double t) {
    double m = 0.0;
    for (int i = 0; i < numeric.grid_x.n_nodes(); ++i)
        for (int j = 0; j < numeric.grid_y.n_nodes(); ++j)
            m = std::max(m, std::abs(numeric.at(i, j) -
                                     exact(numeric.grid_x.node(i),
                                           numeric.grid_y.node(j), t)));
    return m;
}

std::vector<std::optional<double>> observed_orders(const std::vector<double>& errors) {
    std::vector<std::optional<double>> orders(errors.size());
    for (size_t k = 1; k < errors.size(); ++k)
        if (errors[k - 1] > 0.0 && errors[k] > 0.0)
            orders[k] = std::log2(errors[k - 1] / errors[k]);
    return orders;
}

namespace {

std::complex<double> symbol_1d(double theta, const OperatorRows& rows, double xi,
                               double eta, double gamma) {
    const int j = rows.n_cells() / 2;
    std::complex<double> z(0.0, 0.0);
    const auto& pr = rows.left(j);
    for (int k = 0; k <= j + 1; ++k)
        z += xi * pr[k] * std::exp(std::complex<double>(0.0, theta * (k - j)));
    const auto& qr = rows.right(j);
    for (int k = j - 1; k <= rows.n_cells(); ++k)
        z += eta * qr[k - (j - 1)] * std::exp(std::complex<double>(0.0, theta * (k - j)));
    z += gamma * (std::exp(std::complex<double>(0.0, theta)) -
                  std::exp(std::complex<double>(0.0, -theta)));
    return z;
}

}  // namespace

double amplification_1d(double theta, const OperatorRows& rows, double xi, double eta,
                        double gamma) {
    const std::complex<double> z = symbol_1d(theta, rows, xi, eta, gamma);
    return std::abs(1.0 + z) / std::abs(1.0 - z);
}

double amplification_2d(double theta_x, double theta_y, const OperatorRows& rows_x,
                        const OperatorRows& rows_y, double xi, double eta, double gamma,
                        double xi_t, double eta_t, double gamma_t) {
    const std::complex<double> z = symbol_1d(theta_x, rows_x, xi, eta, gamma) +
                                   symbol_1d(theta_y, rows_y, xi_t, eta_t, gamma_t);
    return std::abs(1.0 + z) / std::abs(1.0 - z);
}

AmplificationSweep amplification_sweep_1d(const OperatorRows& rows, double xi,
                                          double eta, double gamma, int samples) {
    AmplificationSweep sweep;
    sweep.omegas.reserve(samples);
    sweep.magnitudes.reserve(samples);
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / samples;
        const double m = amplification_1d(theta, rows, xi, eta, gamma);
        sweep.omegas.push_back(theta);
        sweep.magnitudes.push_back(m);
        sweep.max_magnitude = std::max(sweep.max_magnitude, m);
    }
    return sweep;
}

AmplificationSweep amplification_sweep_2d(const OperatorRows& rows_x,
                                          const OperatorRows& rows_y, double xi,
                                          double eta, double gamma, double xi_t,
                                          double eta_t, double gamma_t, int samples) {
    AmplificationSweep sweep;
    sweep.omegas.reserve(samples);
    sweep.magnitudes.reserve(samples);
    for (int s = 0; s < samples; ++s) {
        const double theta = 2.0 * std::numbers::pi * s / samples;
        const double m = amplification_2d(theta, theta, rows_x, rows_y, xi, eta, gamma,
                                          xi_t, eta_t, gamma_t);
        sweep.omegas.push_back(theta);
        sweep.magnitudes.push_back(m);
        sweep.max_magnitude = std::max(sweep.max_magnitude, m);
    }
    return sweep;
}

namespace {

AuditReport fail(int i, int k, const std::string& what, double value) {
    std::ostringstream os;
    os << what << " violated at (i=" << i << ", k=" << k << "), value=" << value;
    return {false, os.str()};
}

}  // namespace

AuditReport coefficient_audit(const OperatorRows& rows) {
    const int n = rows.n_cells();
    const double a = rows.order().value();
    const double pii = -4.0 + std::pow(2.0, 3.0 - a);
    const double pim1 = 6.0 - std::pow(2.0, 5.0 - a) + std::pow(3.0, 3.0 - a);

    for (int i = 1; i <= n - 1; ++i) {
        double psum = 0.0;
        for (int k = 0; k <= i + 1; ++k) psum += rows.p(i, k);
        if (!(psum < 0.0)) return fail(i, -1, "sum p < 0", psum);
        double qsum = 0.0;
        for (int k = i - 1; k <= n; ++k) qsum += rows.q(i, k);
        if (!(qsum < 0.0)) return fail(i, -1, "sum q < 0", qsum);
    }

    // generic rows only: boundary-convention rows carry the corner adjustment
    for (int i = 2; i <= n - 2; ++i) {
        if (std::abs(rows.p(i, i + 1) - 1.0) > 1e-12)
            return fail(i, i + 1, "p_{i,i+1} = 1", rows.p(i, i + 1));
        if (std::abs(rows.q(i, i - 1) - 1.0) > 1e-12)
            return fail(i, i - 1, "q_{i,i-1} = 1", rows.q(i, i - 1));
        if (std::abs(rows.p(i, i) - pii) > 1e-12 * std::abs(pii))
            return fail(i, i, "p_{i,i} closed form", rows.p(i, i));
        if (std::abs(rows.q(i, i) - pii) > 1e-12 * std::abs(pii))
            return fail(i, i, "q_{i,i} closed form", rows.q(i, i));
        if (std::abs(rows.p(i, i - 1) - pim1) > 1e-10)
            return fail(i, i - 1, "p_{i,i-1} closed form", rows.p(i, i - 1));
        if (std::abs(rows.q(i, i + 1) - pim1) > 1e-10)
            return fail(i, i + 1, "q_{i,i+1} closed form", rows.q(i, i + 1));
        for (int k = 0; k <= i - 2; ++k)
            if (!(rows.p(i, k) > 0.0)) return fail(i, k, "p tail positivity", rows.p(i, k));
        for (int k = i + 2; k <= n - 1; ++k)
            if (!(rows.q(i, k) > 0.0)) return fail(i, k, "q tail positivity", rows.q(i, k));
    }

    // transpose identity on the interior-only matrices
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n - 1; ++k) {
            const double p = rows.p(i, k);
            const double q = rows.q(k, i);
            if (std::abs(p - q) > 1e-12 * std::max(1.0, std::abs(p)))
                return fail(i, k, "transpose identity p_{i,k} = q_{k,i}", p - q);
        }

    return {true, ""};
}

AuditReport coefficient_audit(const FractionalOrder& alpha, int n_cells) {
    if (n_cells < 4) throw std::invalid_argument("coefficient_audit: N_x >= 4");
    return coefficient_audit(OperatorRows(alpha, n_cells));
}

}  // namespace fracadi
