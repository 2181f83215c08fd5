#include "fracadi/operators.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace fracadi {

namespace {

double scale_factor(const FractionalOrder& alpha, double dx) {
    return 1.0 / (std::tgamma(4.0 - alpha.value()) * std::pow(dx, alpha.value()));
}

}  // namespace

std::vector<double> apply_left_spline(const ScalarField1D& u, const OperatorRows& rows) {
    const int n = rows.n_cells();
    if (u.grid.n_cells != n) throw std::invalid_argument("field/rows grid mismatch");
    if (n < 2) throw std::invalid_argument("need n_cells >= 2");
    const double c = scale_factor(rows.order(), u.grid.spacing());
    std::vector<double> out(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        const auto& row = rows.left(i);
        double s = 0.0;
        for (int k = 0; k <= i + 1; ++k) s += u.values[k] * row[k];
        out[i - 1] = c * s;
    }
    return out;
}

std::vector<double> apply_right_spline(const ScalarField1D& u, const OperatorRows& rows) {
    const int n = rows.n_cells();
    if (u.grid.n_cells != n) throw std::invalid_argument("field/rows grid mismatch");
    if (n < 2) throw std::invalid_argument("need n_cells >= 2");
    const double c = scale_factor(rows.order(), u.grid.spacing());
    std::vector<double> out(n - 1);
    for (int i = 1; i <= n - 1; ++i) {
        const auto& row = rows.right(i);
        double s = 0.0;
        for (int k = i - 1; k <= n; ++k) s += u.values[k] * row[k - (i - 1)];
        out[i - 1] = c * s;
    }
    return out;
}

std::vector<double> apply_left_spline(const ScalarField1D& u, const FractionalOrder& alpha) {
    return apply_left_spline(u, OperatorRows(alpha, u.grid.n_cells));
}

std::vector<double> apply_right_spline(const ScalarField1D& u, const FractionalOrder& alpha) {
    return apply_right_spline(u, OperatorRows(alpha, u.grid.n_cells));
}

namespace {

int gl_terms(double span, double h) {
    const double m = span / h;
    const int mi = static_cast<int>(std::llround(m));
    if (mi < 1 || std::abs(m - mi) > 1e-8 * std::max(1.0, m))
        throw std::invalid_argument("gl: span/h must be a positive integer");
    return mi;
}

}  // namespace

double gl_left(const std::function<double(double)>& f, double x, double h,
               const FractionalOrder& alpha, double x_left) {
    const int m = gl_terms(x - x_left, h);
    const double a = alpha.value();
    double w = 1.0, s = f(x);
    for (int i = 1; i <= m; ++i) {
        w *= (i - 1.0 - a) / i;
        s += w * f(x - i * h);
    }
    return s / std::pow(h, a);
}

double gl_right(const std::function<double(double)>& f, double x, double h,
                const FractionalOrder& alpha, double x_right) {
    const int m = gl_terms(x_right - x, h);
    const double a = alpha.value();
    double w = 1.0, s = f(x);
    for (int i = 1; i <= m; ++i) {
        w *= (i - 1.0 - a) / i;
        s += w * f(x + i * h);
    }
    return s / std::pow(h, a);
}

double rl_power_left(double p, const FractionalOrder& alpha, double x, double x_left) {
    if (!(p > -1.0)) throw std::invalid_argument("rl_power: exponent must exceed -1");
    if (!(x > x_left)) throw std::invalid_argument("rl_power: need x > x_left");
    const double shift = p + 1.0 - alpha.value();
    if (shift <= 0.0 && std::abs(shift - std::round(shift)) < 1e-12)
        throw std::invalid_argument("rl_power: gamma pole at p+1-alpha");
    return std::tgamma(p + 1.0) / std::tgamma(shift) *
           std::pow(x - x_left, p - alpha.value());
}

double rl_power_right(double p, const FractionalOrder& alpha, double x, double x_right) {
    if (!(p > -1.0)) throw std::invalid_argument("rl_power: exponent must exceed -1");
    if (!(x < x_right)) throw std::invalid_argument("rl_power: need x < x_right");
    const double shift = p + 1.0 - alpha.value();
    if (shift <= 0.0 && std::abs(shift - std::round(shift)) < 1e-12)
        throw std::invalid_argument("rl_power: gamma pole at p+1-alpha");
    return std::tgamma(p + 1.0) / std::tgamma(shift) *
           std::pow(x_right - x, p - alpha.value());
}

GaussJacobiRule gauss_jacobi(int n, double b) {
    if (n < 1) throw std::invalid_argument("gauss_jacobi: n >= 1");
    if (!(b > -1.0)) throw std::invalid_argument("gauss_jacobi: b > -1 required");

    static std::mutex mtx;
    static std::map<std::pair<int, double>, GaussJacobiRule> cache;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find({n, b});
        if (it != cache.end()) return it->second;
    }

    // Weight (1-z)^A (1+z)^B with A = 0. Golub-Welsch on the symmetric
    // tridiagonal recurrence matrix.
    const double A = 0.0, B = b;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int k = 0; k < n; ++k) {
        const double s = 2.0 * k + A + B;
        J(k, k) = (B * B - A * A) / (s * (s + 2.0));
        if (k >= 1) {
            const double beta = 4.0 * k * (k + A) * (k + B) * (k + A + B) /
                                (s * s * (s + 1.0) * (s - 1.0));
            J(k, k - 1) = J(k - 1, k) = std::sqrt(beta);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::pow(2.0, B + 1.0) / (B + 1.0);

    GaussJacobiRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int j = 0; j < n; ++j) {
        rule.nodes[j] = es.eigenvalues()(j);
        const double v0 = es.eigenvectors()(0, j);
        rule.weights[j] = mu0 * v0 * v0;
    }
    std::lock_guard<std::mutex> lock(mtx);
    cache.emplace(std::make_pair(n, b), rule);
    return rule;
}

namespace {

// Integral (1/Gamma(2-alpha)) * int_0^L s^(1-alpha) g(s) ds via Gauss-Jacobi,
// doubling the node count until two successive estimates differ by < tol.
double singular_integral(const std::function<double(double)>& g, double L,
                         double alpha, double tol) {
    const double b = 1.0 - alpha;
    const double factor = std::pow(L / 2.0, 2.0 - alpha);
    double prev = 0.0;
    bool have_prev = false;
    for (int n = 8; n <= 2048; n *= 2) {
        const GaussJacobiRule rule = gauss_jacobi(n, b);
        double s = 0.0;
        for (int j = 0; j < n; ++j)
            s += rule.weights[j] * g(L / 2.0 * (1.0 + rule.nodes[j]));
        const double est = factor * s;
        if (have_prev && std::abs(est - prev) < tol) return est;
        prev = est;
        have_prev = true;
    }
    throw QuadratureError("singular quadrature did not reach tolerance", prev);
}

}  // namespace

double rl_quadrature_left(const AnalyticFunction1D& u, const FractionalOrder& alpha,
                          double x, double x_left, double tol) {
    if (!(x > x_left)) throw std::invalid_argument("rl_quadrature_left: need x > x_left");
    const double a = alpha.value();
    const double L = x - x_left;
    const double integral =
        singular_integral([&u, x](double s) { return u.f2(x - s); }, L, a, tol) /
        std::tgamma(2.0 - a);
    return integral + u.f(x_left) * std::pow(L, -a) / std::tgamma(1.0 - a) +
           u.f1(x_left) * std::pow(L, 1.0 - a) / std::tgamma(2.0 - a);
}

double rl_quadrature_right(const AnalyticFunction1D& u, const FractionalOrder& alpha,
                           double x, double x_right, double tol) {
    if (!(x < x_right))
        throw std::invalid_argument("rl_quadrature_right: need x < x_right");
    const double a = alpha.value();
    const double L = x_right - x;
    const double integral =
        singular_integral([&u, x](double s) { return u.f2(x + s); }, L, a, tol) /
        std::tgamma(2.0 - a);
    return integral + u.f(x_right) * std::pow(L, -a) / std::tgamma(1.0 - a) -
           u.f1(x_right) * std::pow(L, 1.0 - a) / std::tgamma(2.0 - a);
}

}  // namespace fracadi
