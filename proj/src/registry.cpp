#include "fracadi/registry.hpp"

#include <cmath>
#include <stdexcept>

namespace fracadi {

namespace {

void validate_derivatives(const AnalyticFunction1D& f) {
    const double h = 1e-5;
    for (double x : {0.21, 0.5, 0.83}) {
        const double d1 = (f.f(x + h) - f.f(x - h)) / (2.0 * h);
        const double d2 = (f.f(x + h) - 2.0 * f.f(x) + f.f(x - h)) / (h * h);
        if (std::abs(d1 - f.f1(x)) > 1e-5 || std::abs(d2 - f.f2(x)) > 1e-4)
            throw std::logic_error("registry: derivative callbacks disagree with f");
    }
}

std::function<double(double, double)> separable_exact(const AnalyticFunction1D& x_factor) {
    auto X = x_factor.f;
    return [X](double x, double t) { return std::exp(-t) * X(x); };
}

std::function<double(double, double, double)> separable_exact2(
    const AnalyticFunction1D& xf, const AnalyticFunction1D& yf) {
    auto X = xf.f;
    auto Y = yf.f;
    return [X, Y](double x, double y, double t) { return std::exp(-t) * X(x) * Y(y); };
}

Problem1D base_problem_1d(const AnalyticFunction1D& xf) {
    Problem1D p;
    p.x_left = 0.0;
    p.x_right = 1.0;
    p.t_final = 1.0;
    p.exact = separable_exact(xf);
    auto ex = p.exact;
    p.initial = [ex](double x) { return ex(x, 0.0); };
    p.boundary_left = [ex](double t) { return ex(0.0, t); };
    p.boundary_right = [ex](double t) { return ex(1.0, t); };
    return p;
}

Problem2D base_problem_2d(const AnalyticFunction1D& xf, const AnalyticFunction1D& yf) {
    Problem2D p;
    p.t_final = 1.0;
    p.exact = separable_exact2(xf, yf);
    auto ex = p.exact;
    p.initial = [ex](double x, double y) { return ex(x, y, 0.0); };
    p.boundary = ex;
    return p;
}

std::vector<ProblemRegistryEntry> make_registry() {
    std::vector<ProblemRegistryEntry> entries;

    const auto sin_2x4 = AnalyticFunction1D::quartic_sine(0.0, 2.0);    // sin((2x)^4)
    const auto sin_2m2x4 = AnalyticFunction1D::quartic_sine(2.0, -2.0); // sin((2-2x)^4)
    const auto hump = AnalyticFunction1D::product(sin_2x4, sin_2m2x4);
    const auto sin_x4 = AnalyticFunction1D::quartic_sine(0.0, 1.0);
    const auto sin_1mx4 = AnalyticFunction1D::quartic_sine(1.0, -1.0);
    const auto cubic_bump = AnalyticFunction1D::product(
        AnalyticFunction1D::power(0.0, 1.0, 3.0), AnalyticFunction1D::power(1.0, -1.0, 3.0));

    for (const auto* f : {&hump, &sin_x4, &sin_1mx4, &cubic_bump}) validate_derivatives(*f);

    {
        ProblemRegistryEntry e;
        e.id = "table1";
        e.dimension = 0;
        e.description = "right-derivative truncation test, u = sin((1-x)^4) on (0,1)";
        e.x_factor = sin_1mx4;
        entries.push_back(std::move(e));
    }
    {
        ProblemRegistryEntry e;
        e.id = "table2";
        e.dimension = 0;
        e.description = "left-derivative truncation test, u = sin(x^4) on (0,1)";
        e.x_factor = sin_x4;
        entries.push_back(std::move(e));
    }
    {
        ProblemRegistryEntry e;
        e.id = "cd1d";
        e.dimension = 1;
        e.description =
            "1D two-sided convection diffusion, exact u = e^{-t} sin((2x)^4) sin((2-2x)^4)";
        e.x_factor = hump;
        e.make_1d = [xf = hump](double alpha) {
            Problem1D p = base_problem_1d(xf);
            p.alpha = alpha;
            p.d_plus = [alpha](double x) {
                return std::tgamma(3.0 - alpha) * std::pow(x, alpha);
            };
            p.d_minus = [alpha](double x) {
                return std::tgamma(3.0 - alpha) * std::pow(2.0 - x, alpha);
            };
            p.g = [](double x) { return 0.25 * x; };
            return p;
        };
        entries.push_back(std::move(e));
    }
    {
        ProblemRegistryEntry e;
        e.id = "powerlaw-1d";
        e.dimension = 1;
        e.description =
            "1D cross-check with closed-form forcing, exact u = e^{-t} x^3 (1-x)^3";
        e.x_factor = cubic_bump;
        e.make_1d = [xf = cubic_bump](double alpha) {
            Problem1D p = base_problem_1d(xf);
            p.alpha = alpha;
            p.d_plus = [](double) { return 1.0; };
            p.d_minus = [](double) { return 1.0; };
            p.g = [](double) { return 1.0; };
            return p;
        };
        entries.push_back(std::move(e));
    }
    {
        ProblemRegistryEntry e;
        e.id = "cd2d-twosided";
        e.dimension = 2;
        e.description = "2D two-sided convection diffusion with variable coefficients";
        e.x_factor = hump;
        e.y_factor = hump;
        e.make_2d = [xf = hump](double alpha, double beta) {
            Problem2D p = base_problem_2d(xf, xf);
            p.alpha = alpha;
            p.beta = beta;
            p.d_plus = [alpha](double x, double) {
                return std::tgamma(3.0 - alpha) * std::pow(x, alpha);
            };
            p.d_minus = [alpha](double x, double) {
                return std::tgamma(3.0 - alpha) * std::pow(2.0 - x, alpha);
            };
            p.e_plus = [beta](double, double y) {
                return std::tgamma(3.0 - beta) * std::pow(y, beta);
            };
            p.e_minus = [beta](double, double y) {
                return std::tgamma(3.0 - beta) * std::pow(2.0 - y, beta);
            };
            p.g = [](double x, double) { return 0.25 * x; };
            p.h = [](double, double y) { return 0.25 * y; };
            return p;
        };
        entries.push_back(std::move(e));
    }
    {
        ProblemRegistryEntry e;
        e.id = "cd2d-onesided";
        e.dimension = 2;
        e.description =
            "2D one-sided convection diffusion, exact u = e^{-t} sin(x^4) sin(y^4)";
        e.x_factor = sin_x4;
        e.y_factor = sin_x4;
        e.make_2d = [xf = sin_x4](double alpha, double beta) {
            Problem2D p = base_problem_2d(xf, xf);
            p.alpha = alpha;
            p.beta = beta;
            p.d_plus = [](double, double) { return 1.0; };
            p.e_plus = [](double, double) { return 1.0; };
            p.g = [](double, double) { return 1.0; };
            p.h = [](double, double) { return 1.0; };
            return p;
        };
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace

const std::vector<ProblemRegistryEntry>& registry() {
    static const std::vector<ProblemRegistryEntry> entries = make_registry();
    return entries;
}

const ProblemRegistryEntry& find_problem(const std::string& id) {
    for (const auto& e : registry())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown problem id: " + id);
}

FactorSamples sample_factor(const AnalyticFunction1D& f, const UniformGrid1D& grid,
                            const FractionalOrder& alpha, double tol) {
    const int n = grid.n_cells;
    FactorSamples s;
    s.value.resize(n + 1);
    s.deriv.resize(n + 1);
    s.frac_left.assign(n + 1, 0.0);
    s.frac_right.assign(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
        const double x = grid.node(i);
        s.value[i] = f.f(x);
        s.deriv[i] = f.f1(x);
        if (i > 0) s.frac_left[i] = rl_quadrature_left(f, alpha, x, grid.x_left, tol);
        if (i < n) s.frac_right[i] = rl_quadrature_right(f, alpha, x, grid.x_right, tol);
    }
    return s;
}

namespace {

int node_index(const UniformGrid1D& grid, double x) {
    const int i = static_cast<int>(std::llround((x - grid.x_left) / grid.spacing()));
    if (i < 0 || i > grid.n_cells ||
        std::abs(grid.node(i) - x) > 1e-9 * std::max(1.0, std::abs(x)))
        throw std::invalid_argument("forcing sampler: x is not a grid node");
    return i;
}

}  // namespace

Problem1D build_problem_1d(const ProblemRegistryEntry& entry, double alpha,
                           const UniformGrid1D& grid, double oracle_tol) {
    if (entry.dimension != 1)
        throw std::invalid_argument("build_problem_1d: entry is not one-dimensional");
    Problem1D p = entry.make_1d(alpha);
    const FactorSamples fs =
        sample_factor(entry.x_factor, grid, FractionalOrder(alpha), oracle_tol);

    // s(x,t) = du/dt - d+ D^a_L u - d- D^a_R u - g u_x, separable in e^{-t}
    std::vector<double> base(grid.n_nodes(), 0.0);
    for (int i = 1; i <= grid.n_cells - 1; ++i) {
        const double x = grid.node(i);
        base[i] = -fs.value[i] - p.d_plus(x) * fs.frac_left[i] -
                  p.d_minus(x) * fs.frac_right[i] - p.g(x) * fs.deriv[i];
    }
    p.source = [base, grid](double x, double t) {
        return std::exp(-t) * base[node_index(grid, x)];
    };
    return p;
}

Problem2D build_problem_2d(const ProblemRegistryEntry& entry, double alpha, double beta,
                           const UniformGrid1D& grid_x, const UniformGrid1D& grid_y,
                           double oracle_tol) {
    if (entry.dimension != 2)
        throw std::invalid_argument("build_problem_2d: entry is not two-dimensional");
    Problem2D p = entry.make_2d(alpha, beta);
    const FactorSamples fx =
        sample_factor(entry.x_factor, grid_x, FractionalOrder(alpha), oracle_tol);
    const FactorSamples fy =
        sample_factor(entry.y_factor, grid_y, FractionalOrder(beta), oracle_tol);

    auto coef = [](const std::function<double(double, double)>& f, double x, double y) {
        return f ? f(x, y) : 0.0;
    };

    const int ny = grid_y.n_nodes();
    std::vector<double> base(static_cast<size_t>(grid_x.n_nodes()) * ny, 0.0);
    for (int i = 1; i <= grid_x.n_cells - 1; ++i)
        for (int j = 1; j <= grid_y.n_cells - 1; ++j) {
            const double x = grid_x.node(i);
            const double y = grid_y.node(j);
            base[static_cast<size_t>(i) * ny + j] =
                -fx.value[i] * fy.value[j] -
                coef(p.d_plus, x, y) * fx.frac_left[i] * fy.value[j] -
                coef(p.d_minus, x, y) * fx.frac_right[i] * fy.value[j] -
                coef(p.e_plus, x, y) * fx.value[i] * fy.frac_left[j] -
                coef(p.e_minus, x, y) * fx.value[i] * fy.frac_right[j] -
                coef(p.g, x, y) * fx.deriv[i] * fy.value[j] -
                coef(p.h, x, y) * fx.value[i] * fy.deriv[j];
        }
    p.source = [base, grid_x, grid_y, ny](double x, double y, double t) {
        const size_t idx =
            static_cast<size_t>(node_index(grid_x, x)) * ny + node_index(grid_y, y);
        return std::exp(-t) * base[idx];
    };
    return p;
}

}  // namespace fracadi
