#include <doctest.h>

#include <cmath>

#include "fracadi/analysis.hpp"

using namespace fracadi;

TEST_CASE("error norm and order estimation on synthetic data") {
    const UniformGrid1D grid(0.0, 1.0, 10);
    auto field = ScalarField1D::sample(grid, [](double x) { return x; });
    CHECK(linf_error(field, [](double x, double) { return x; }, 0.3) == 0.0);
    field.values[4] += 0.25;
    CHECK(linf_error(field, [](double x, double) { return x; }, 0.3) ==
          doctest::Approx(0.25).epsilon(1e-14));

    const std::vector<double> errs{1.0, 0.25, 0.0625};
    const auto orders = observed_orders(errs);
    CHECK(!orders[0].has_value());
    CHECK(*orders[1] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(*orders[2] == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(!observed_orders({1.0, 0.0})[1].has_value());
}

TEST_CASE("amplification factor equals one with no spatial terms") {
    const OperatorRows rows(FractionalOrder(1.5), 64);
    // at omega = 0 the fractional row sums are strictly negative, so the
    // factor sits just below one rather than at one
    const double at_zero = amplification_1d(0.0, rows, 1.0, 1.0, 0.5);
    CHECK(at_zero <= 1.0);
    CHECK(at_zero > 0.9);
    for (double theta : {0.3, 1.0, 2.5})
        CHECK(amplification_1d(theta, rows, 0.0, 0.0, 0.0) == 1.0);
}

TEST_CASE("pure convection has a purely imaginary symbol, magnitude one") {
    const OperatorRows rows(FractionalOrder(1.5), 64);
    for (double theta : {0.3, 1.0, 2.5, 5.0})
        CHECK(amplification_1d(theta, rows, 0.0, 0.0, 0.7) ==
              doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("1D sweeps stay below one") {
    for (double a : {1.1, 1.5, 1.9}) {
        const OperatorRows rows(FractionalOrder(a), 128);
        const AmplificationSweep s = amplification_sweep_1d(rows, 1.0, 1.0, 0.3);
        CHECK(s.omegas.size() == 1024);
        CHECK(s.max_magnitude <= 1.0 + 1e-12);
    }
}

TEST_CASE("2D amplification reduces to 1D when one direction is disabled") {
    const OperatorRows rx(FractionalOrder(1.3), 64);
    const OperatorRows ry(FractionalOrder(1.8), 64);
    for (double theta : {0.4, 1.7}) {
        const double two = amplification_2d(theta, 2.2, rx, ry, 1.0, 0.5, 0.2,
                                            0.0, 0.0, 0.0);
        const double one = amplification_1d(theta, rx, 1.0, 0.5, 0.2);
        CHECK(two == doctest::Approx(one).epsilon(1e-13));
    }
    const AmplificationSweep s =
        amplification_sweep_2d(rx, ry, 1.0, 1.0, 0.5, 1.0, 1.0, 0.5);
    CHECK(s.max_magnitude <= 1.0 + 1e-12);
}

TEST_CASE("audit passes on clean tables across the order range") {
    for (double a : {1.05, 1.5, 1.95}) {
        const AuditReport r = coefficient_audit(FractionalOrder(a), 64);
        CHECK(r.pass);
        CHECK(r.detail.empty());
    }
    CHECK_THROWS_AS(coefficient_audit(FractionalOrder(1.5), 3),
                    std::invalid_argument);
}

TEST_CASE("audit flags corrupted tables") {
    const FractionalOrder order(1.5);
    const int n = 12;
    std::vector<std::vector<double>> left, right;
    for (int i = 1; i <= n - 1; ++i) {
        left.push_back(left_row(i, order, n));
        right.push_back(right_row(i, order, n));
    }

    SUBCASE("sign flip in a tail entry") {
        auto bad = left;
        bad[5][1] = -bad[5][1];
        const AuditReport r = coefficient_audit(OperatorRows(order, n, bad, right));
        CHECK(!r.pass);
        CHECK(!r.detail.empty());
    }
    SUBCASE("perturbed superdiagonal breaks the closed form") {
        auto bad = left;
        bad[4][6] = 2.0;  // p_{5,6} should be 1
        const AuditReport r = coefficient_audit(OperatorRows(order, n, bad, right));
        CHECK(!r.pass);
    }
    SUBCASE("row sum pushed positive") {
        auto bad = right;
        bad[3][2] += 10.0;
        const AuditReport r = coefficient_audit(OperatorRows(order, n, left, bad));
        CHECK(!r.pass);
    }
    SUBCASE("broken transpose symmetry") {
        auto bad = right;
        bad[6][3] += 1e-6;
        const AuditReport r = coefficient_audit(OperatorRows(order, n, left, bad));
        CHECK(!r.pass);
    }
}
