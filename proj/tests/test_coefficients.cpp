#include <doctest.h>

#include <cmath>

#include "fracadi/coefficients.hpp"

using namespace fracadi;

TEST_CASE("fractional order is restricted to (1,2)") {
    CHECK_THROWS_AS(FractionalOrder(1.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder(2.0), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder(0.5), std::invalid_argument);
    CHECK_THROWS_AS(FractionalOrder(-1.5), std::invalid_argument);
    CHECK(FractionalOrder(1.5).value() == 1.5);
    CHECK_NOTHROW(FractionalOrder(1.0 + 1e-12));
    CHECK_NOTHROW(FractionalOrder(2.0 - 1e-12));
}

TEST_CASE("a table: diagonal, corner, and spot values") {
    const FractionalOrder a15(1.5);
    CHECK(a_coef(0, 0, a15) == 0.0);  // empty integration range
    CHECK(a_coef(1, 1, a15) == 1.0);
    CHECK(a_coef(7, 7, a15) == 1.0);
    // k = 0 branch at i = 2: 1^{1.5} - 2^{0.5} (2 - 3 + 1.5)
    CHECK(a_coef(2, 0, a15) ==
          doctest::Approx(1.0 - 0.5 * std::sqrt(2.0)).epsilon(1e-13));
    // generic branch: (i-k+1)^{3-a} - 2 (i-k)^{3-a} + (i-k-1)^{3-a}
    const double g = std::pow(3.0, 1.5) - 2.0 * std::pow(2.0, 1.5) + 1.0;
    CHECK(a_coef(5, 3, a15) == doctest::Approx(g).epsilon(1e-13));
    CHECK_THROWS_AS(a_coef(2, 3, a15), std::invalid_argument);
    CHECK_THROWS_AS(a_coef(2, -1, a15), std::invalid_argument);
}

TEST_CASE("b table: diagonal, corner, and boundary column") {
    const FractionalOrder a15(1.5);
    const int n = 10;
    CHECK(b_coef(n, n, a15, n) == 0.0);  // empty integration range
    CHECK(b_coef(3, 3, a15, n) == 1.0);
    CHECK(b_coef(n - 1, n, a15, n) == doctest::Approx(2.0 - 1.5).epsilon(1e-13));
    // generic branch next to the diagonal
    CHECK(b_coef(3, 4, a15, n) ==
          doctest::Approx(std::pow(2.0, 1.5) - 2.0).epsilon(1e-13));
    CHECK_THROWS_AS(b_coef(4, 3, a15, n), std::invalid_argument);
    CHECK_THROWS_AS(b_coef(4, n + 1, a15, n), std::invalid_argument);
}

TEST_CASE("interior row entries match their closed forms") {
    const double alpha = 1.5;
    const FractionalOrder order(alpha);
    const int n = 16;
    const OperatorRows rows(order, n);
    const double near = std::pow(2.0, 3.0 - alpha) - 4.0;
    const double far = 6.0 - std::pow(2.0, 5.0 - alpha) + std::pow(3.0, 3.0 - alpha);
    for (int i = 2; i <= n - 2; ++i) {
        CHECK(rows.p(i, i + 1) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(rows.q(i, i - 1) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(rows.p(i, i) == doctest::Approx(near).epsilon(1e-13));
        CHECK(rows.q(i, i) == doctest::Approx(near).epsilon(1e-13));
        CHECK(rows.p(i, i - 1) == doctest::Approx(far).epsilon(1e-11));
        CHECK(rows.q(i, i + 1) == doctest::Approx(far).epsilon(1e-11));
    }
}

TEST_CASE("row sums are negative for every interior row") {
    for (double alpha : {1.05, 1.3, 1.7, 1.95}) {
        const int n = 16;
        const OperatorRows rows(FractionalOrder(alpha), n);
        for (int i = 1; i <= n - 1; ++i) {
            double ps = 0.0, qs = 0.0;
            for (int k = 0; k <= i + 1; ++k) ps += rows.p(i, k);
            for (int k = i - 1; k <= n; ++k) qs += rows.q(i, k);
            CHECK(ps < 0.0);
            CHECK(qs < 0.0);
        }
    }
}

TEST_CASE("left and right tables are transposes of each other on the interior") {
    const int n = 20;
    const OperatorRows rows(FractionalOrder(1.37), n);
    for (int i = 1; i <= n - 1; ++i)
        for (int k = 1; k <= n - 1; ++k)
            CHECK(rows.p(i, k) == doctest::Approx(rows.q(k, i)).epsilon(1e-12));
}

TEST_CASE("classical limit recovers the central second-difference stencil") {
    const FractionalOrder order(2.0 - 1e-9);
    const int n = 16;
    const OperatorRows rows(order, n);
    const int i = n / 2;
    CHECK(rows.p(i, i + 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rows.p(i, i) == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(rows.p(i, i - 1) == doctest::Approx(1.0).epsilon(1e-6));
    for (int k = 0; k <= i - 2; ++k) CHECK(std::abs(rows.p(i, k)) < 1e-6);
    CHECK(rows.q(i, i - 1) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(rows.q(i, i) == doctest::Approx(-2.0).epsilon(1e-6));
    CHECK(rows.q(i, i + 1) == doctest::Approx(1.0).epsilon(1e-6));
    for (int k = i + 2; k <= n; ++k) CHECK(std::abs(rows.q(i, k)) < 1e-6);
}

TEST_CASE("row builders reject boundary rows and bad sizes") {
    const FractionalOrder order(1.5);
    CHECK_THROWS_AS(left_row(0, order, 8), std::invalid_argument);
    CHECK_THROWS_AS(left_row(8, order, 8), std::invalid_argument);
    CHECK_THROWS_AS(right_row(0, order, 8), std::invalid_argument);
    CHECK_THROWS_AS(OperatorRows(order, 1), std::invalid_argument);
}

TEST_CASE("accessors return zero outside a row's support") {
    const int n = 12;
    const OperatorRows rows(FractionalOrder(1.4), n);
    CHECK(rows.p(3, 5) == 0.0);
    CHECK(rows.p(3, -1) == 0.0);
    CHECK(rows.q(8, 6) == 0.0);
    CHECK(rows.q(8, n + 1) == 0.0);
}

TEST_CASE("table injection constructor validates row shapes") {
    const FractionalOrder order(1.5);
    const int n = 6;
    std::vector<std::vector<double>> left, right;
    for (int i = 1; i <= n - 1; ++i) {
        left.push_back(left_row(i, order, n));
        right.push_back(right_row(i, order, n));
    }
    CHECK_NOTHROW(OperatorRows(order, n, left, right));
    auto bad = left;
    bad[2].push_back(0.0);
    CHECK_THROWS_AS(OperatorRows(order, n, bad, right), std::invalid_argument);
    CHECK_THROWS_AS(OperatorRows(order, n + 1, left, right), std::invalid_argument);
}
