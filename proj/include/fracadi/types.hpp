#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace fracadi {

// Fractional order restricted to the open interval (1,2).
class FractionalOrder {
public:
    explicit FractionalOrder(double value) : value_(value) {
        if (!(value > 1.0 && value < 2.0))
            throw std::invalid_argument("fractional order must lie in (1,2)");
    }
    double value() const { return value_; }

private:
    double value_;
};

struct UniformGrid1D {
    double x_left;
    double x_right;
    int n_cells;

    UniformGrid1D(double xl, double xr, int n) : x_left(xl), x_right(xr), n_cells(n) {
        if (!(xl < xr)) throw std::invalid_argument("grid requires x_left < x_right");
        if (n < 1) throw std::invalid_argument("grid requires n_cells >= 1");
    }

    double spacing() const { return (x_right - x_left) / n_cells; }
    double node(int i) const { return x_left + i * spacing(); }
    int n_nodes() const { return n_cells + 1; }
};

// Nodal values u_0..u_{N_x} on a uniform grid.
struct ScalarField1D {
    UniformGrid1D grid;
    std::vector<double> values;

    ScalarField1D(const UniformGrid1D& g, std::vector<double> v)
        : grid(g), values(std::move(v)) {
        if (static_cast<int>(values.size()) != grid.n_nodes())
            throw std::invalid_argument("field length must be n_cells+1");
    }
    static ScalarField1D zero(const UniformGrid1D& g) {
        return ScalarField1D(g, std::vector<double>(g.n_nodes(), 0.0));
    }
    static ScalarField1D sample(const UniformGrid1D& g,
                                const std::function<double(double)>& f) {
        std::vector<double> v(g.n_nodes());
        for (int i = 0; i < g.n_nodes(); ++i) v[i] = f(g.node(i));
        return ScalarField1D(g, std::move(v));
    }
};

// (N_x+1) x (N_y+1) nodal values, entry (i,j) ~ u(x_i, y_j); row-major in i.
struct ScalarField2D {
    UniformGrid1D grid_x;
    UniformGrid1D grid_y;
    std::vector<double> values;

    ScalarField2D(const UniformGrid1D& gx, const UniformGrid1D& gy)
        : grid_x(gx), grid_y(gy),
          values(static_cast<size_t>(gx.n_nodes()) * gy.n_nodes(), 0.0) {}

    double& at(int i, int j) { return values[static_cast<size_t>(i) * grid_y.n_nodes() + j]; }
    double at(int i, int j) const {
        return values[static_cast<size_t>(i) * grid_y.n_nodes() + j];
    }
};

// A function together with its first two derivatives, used by the
// singular-quadrature oracle. Combinators keep manufactured solutions
// expressible without hand-expanding product rules.
struct AnalyticFunction1D {
    std::function<double(double)> f;
    std::function<double(double)> f1;
    std::function<double(double)> f2;

    static AnalyticFunction1D product(const AnalyticFunction1D& a,
                                      const AnalyticFunction1D& b) {
        return {
            [a, b](double x) { return a.f(x) * b.f(x); },
            [a, b](double x) { return a.f1(x) * b.f(x) + a.f(x) * b.f1(x); },
            [a, b](double x) {
                return a.f2(x) * b.f(x) + 2.0 * a.f1(x) * b.f1(x) + a.f(x) * b.f2(x);
            }};
    }

    // sin((a + b x)^4)
    static AnalyticFunction1D quartic_sine(double a, double b) {
        auto w = [a, b](double x) { double v = a + b * x; return v * v * v * v; };
        auto w1 = [a, b](double x) { double v = a + b * x; return 4.0 * b * v * v * v; };
        auto w2 = [a, b](double x) { double v = a + b * x; return 12.0 * b * b * v * v; };
        return {
            [w](double x) { return std::sin(w(x)); },
            [w, w1](double x) { return std::cos(w(x)) * w1(x); },
            [w, w1, w2](double x) {
                return -std::sin(w(x)) * w1(x) * w1(x) + std::cos(w(x)) * w2(x);
            }};
    }

    // (a + b x)^p with real exponent p >= 2
    static AnalyticFunction1D power(double a, double b, double p) {
        return {
            [a, b, p](double x) { return std::pow(a + b * x, p); },
            [a, b, p](double x) { return p * b * std::pow(a + b * x, p - 1.0); },
            [a, b, p](double x) {
                return p * (p - 1.0) * b * b * std::pow(a + b * x, p - 2.0);
            }};
    }
};

}  // namespace fracadi
