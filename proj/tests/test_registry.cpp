#include <doctest.h>

#include <cmath>

#include "fracadi/registry.hpp"
#include "fracadi/study.hpp"

using namespace fracadi;

TEST_CASE("registry lists the expected problems") {
    const auto& entries = registry();
    CHECK(entries.size() == 6);
    for (const char* id : {"table1", "table2", "cd1d", "powerlaw-1d",
                           "cd2d-twosided", "cd2d-onesided"})
        CHECK_NOTHROW(find_problem(id));
    CHECK_THROWS_AS(find_problem("nope"), std::invalid_argument);
}

TEST_CASE("1D benchmark data is mutually consistent") {
    const auto& entry = find_problem("cd1d");
    const Problem1D p = entry.make_1d(1.5);
    // u(x,0) = sin((2x)^4) sin((2-2x)^4); at x = 1/2 both factors are sin(1)
    CHECK(p.initial(0.5) ==
          doctest::Approx(std::sin(1.0) * std::sin(1.0)).epsilon(1e-14));
    CHECK(p.initial(0.0) == 0.0);
    CHECK(p.boundary_left(0.7) == 0.0);
    CHECK(p.boundary_right(0.7) == 0.0);
    for (double x : {0.1, 0.4, 0.9})
        CHECK(p.exact(x, 0.0) == doctest::Approx(p.initial(x)).epsilon(1e-14));
    // diffusion coefficients from the benchmark definition
    CHECK(p.d_plus(0.5) ==
          doctest::Approx(std::tgamma(1.5) * std::pow(0.5, 1.5)).epsilon(1e-14));
    CHECK(p.g(0.5) == doctest::Approx(0.125).epsilon(1e-15));
}

TEST_CASE("2D one-sided benchmark has nonzero boundary data") {
    const auto& entry = find_problem("cd2d-onesided");
    const Problem2D p = entry.make_2d(1.5, 1.5);
    const double y = 0.6, t = 0.3;
    CHECK(p.boundary(1.0, y, t) ==
          doctest::Approx(std::exp(-t) * std::sin(1.0) * std::sin(std::pow(y, 4.0)))
              .epsilon(1e-14));
    CHECK(p.boundary(0.0, y, t) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("factor sampling matches direct oracle calls") {
    const auto& entry = find_problem("cd1d");
    const UniformGrid1D grid(0.0, 1.0, 16);
    const FractionalOrder order(1.5);
    const FactorSamples s = sample_factor(entry.x_factor, grid, order, 1e-11);
    CHECK(s.frac_left[0] == 0.0);
    CHECK(s.frac_right[16] == 0.0);
    const int i = 7;
    CHECK(s.value[i] == doctest::Approx(entry.x_factor.f(grid.node(i))).epsilon(1e-14));
    CHECK(s.deriv[i] == doctest::Approx(entry.x_factor.f1(grid.node(i))).epsilon(1e-14));
    CHECK(s.frac_left[i] ==
          doctest::Approx(rl_quadrature_left(entry.x_factor, order, grid.node(i), 0.0,
                                             1e-11))
              .epsilon(1e-12));
}

TEST_CASE("manufactured forcing matches the closed form for the power-law problem") {
    const auto& entry = find_problem("powerlaw-1d");
    const double alpha = 1.5;
    const UniformGrid1D grid(0.0, 1.0, 64);
    const Problem1D p = build_problem_1d(entry, alpha, grid);
    const FractionalOrder order(alpha);

    // X = x^3 (1-x)^3 = x^3 - 3x^4 + 3x^5 - x^6
    const double c[4] = {1.0, -3.0, 3.0, -1.0};
    const double t = 0.7;
    for (int i = 1; i <= 63; ++i) {
        const double x = grid.node(i);
        double X = 0.0, X1 = 0.0, DL = 0.0, DR = 0.0;
        for (int m = 0; m < 4; ++m) {
            const double pexp = 3.0 + m;
            X += c[m] * std::pow(x, pexp);
            X1 += c[m] * pexp * std::pow(x, pexp - 1.0);
            DL += c[m] * rl_power_left(pexp, order, x, 0.0);
            DR += c[m] * rl_power_right(pexp, order, x, 1.0);
        }
        const double expected = std::exp(-t) * (-X - DL - DR - X1);
        CHECK(p.source(x, t) == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("forcing sampler rejects off-grid points") {
    const auto& entry = find_problem("cd1d");
    const UniformGrid1D grid(0.0, 1.0, 16);
    const Problem1D p = build_problem_1d(entry, 1.5, grid);
    CHECK_THROWS_AS(p.source(0.03, 0.0), std::invalid_argument);
}

TEST_CASE("dimension guards on problem builders") {
    const UniformGrid1D grid(0.0, 1.0, 8);
    CHECK_THROWS_AS(build_problem_1d(find_problem("cd2d-twosided"), 1.5, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_problem_2d(find_problem("cd1d"), 1.5, 1.5, grid, grid),
                    std::invalid_argument);
    CHECK_THROWS_AS(operator_test_error(find_problem("cd1d"), 1.5, 16),
                    std::invalid_argument);
}

TEST_CASE("operator truncation tests reproduce known coarse errors") {
    const double err = operator_test_error(find_problem("table2"), 1.5, 100, 1e-11);
    CHECK(err == doctest::Approx(6.4914e-3).epsilon(0.05));
    const double err_r = operator_test_error(find_problem("table1"), 1.5, 100, 1e-11);
    CHECK(err_r == doctest::Approx(6.4914e-3).epsilon(0.05));
}

TEST_CASE("convergence study fills errors, orders, and failure notes") {
    const auto& entry = find_problem("table2");
    const ConvergenceReport r =
        convergence_study(entry, 1.5, std::nullopt, {50, 100}, std::nullopt, 1e-11);
    REQUIRE(r.entries.size() == 2);
    CHECK(!r.entries[0].order.has_value());
    REQUIRE(r.entries[1].order.has_value());
    CHECK(*r.entries[1].order > 1.7);
    CHECK(*r.entries[1].order < 2.2);
    CHECK(r.dt_rule == "match-h");

    const ConvergenceReport bad =
        convergence_study(find_problem("cd1d"), 1.5, std::nullopt, {2, 16});
    CHECK(std::isnan(bad.entries[0].error));
    CHECK(!bad.entries[0].note.empty());
    CHECK(bad.entries[1].note.empty());
    CHECK(bad.entries[1].error > 0.0);
}
