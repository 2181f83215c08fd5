#include "fracadi/coefficients.hpp"

#include <cmath>
#include <stdexcept>

namespace fracadi {

namespace {

// m^(3-alpha) for integer m >= 0; the tables never need negative bases.
double pw3(int m, double alpha) {
    if (m <= 0) return 0.0;
    return std::exp((3.0 - alpha) * std::log(static_cast<double>(m)));
}

double pw2(int m, double alpha) {
    if (m <= 0) return 0.0;
    return std::exp((2.0 - alpha) * std::log(static_cast<double>(m)));
}

}  // namespace

double a_coef(int i, int k, const FractionalOrder& alpha) {
    if (i < 0 || k < 0 || k > i) throw std::invalid_argument("a_coef: need 0 <= k <= i");
    const double a = alpha.value();
    if (k == i) return i == 0 ? 0.0 : 1.0;  // a_{0,0} = 0 by the empty-integral convention
    if (k == 0) return pw3(i - 1, a) - pw2(i, a) * (i - 3.0 + a);
    return pw3(i - k + 1, a) - 2.0 * pw3(i - k, a) + pw3(i - k - 1, a);
}

double b_coef(int i, int k, const FractionalOrder& alpha, int n_cells) {
    if (i < 0 || k < i || k > n_cells)
        throw std::invalid_argument("b_coef: need i <= k <= N_x");
    const double a = alpha.value();
    if (k == i) return i == n_cells ? 0.0 : 1.0;  // b_{N_x,N_x} = 0, k=i branch wins
    if (k == n_cells)
        return (3.0 - a - n_cells + i) * pw2(n_cells - i, a) + pw3(n_cells - i - 1, a);
    return pw3(k - i + 1, a) - 2.0 * pw3(k - i, a) + pw3(k - i - 1, a);
}

std::vector<double> left_row(int i, const FractionalOrder& alpha, int n_cells) {
    if (i < 1 || i > n_cells - 1)
        throw std::invalid_argument("left_row: interior index required");
    std::vector<double> row(i + 2);
    for (int k = 0; k <= i - 1; ++k)
        row[k] = a_coef(i - 1, k, alpha) - 2.0 * a_coef(i, k, alpha) +
                 a_coef(i + 1, k, alpha);
    row[i] = -2.0 * a_coef(i, i, alpha) + a_coef(i + 1, i, alpha);
    row[i + 1] = a_coef(i + 1, i + 1, alpha);
    return row;
}

std::vector<double> right_row(int i, const FractionalOrder& alpha, int n_cells) {
    if (i < 1 || i > n_cells - 1)
        throw std::invalid_argument("right_row: interior index required");
    std::vector<double> row(n_cells - i + 2);
    row[0] = b_coef(i - 1, i - 1, alpha, n_cells);  // q_{i,i-1}
    row[1] = -2.0 * b_coef(i, i, alpha, n_cells) + b_coef(i - 1, i, alpha, n_cells);
    for (int k = i + 1; k <= n_cells; ++k)
        row[k - (i - 1)] = b_coef(i - 1, k, alpha, n_cells) -
                           2.0 * b_coef(i, k, alpha, n_cells) +
                           b_coef(i + 1, k, alpha, n_cells);
    return row;
}

OperatorRows::OperatorRows(const FractionalOrder& alpha, int n_cells)
    : alpha_(alpha), n_cells_(n_cells) {
    if (n_cells < 2) throw std::invalid_argument("OperatorRows: n_cells >= 2 required");
    left_rows_.reserve(n_cells - 1);
    right_rows_.reserve(n_cells - 1);
    for (int i = 1; i <= n_cells - 1; ++i) {
        left_rows_.push_back(left_row(i, alpha, n_cells));
        right_rows_.push_back(right_row(i, alpha, n_cells));
    }
}

OperatorRows::OperatorRows(const FractionalOrder& alpha, int n_cells,
                           std::vector<std::vector<double>> left,
                           std::vector<std::vector<double>> right)
    : alpha_(alpha), n_cells_(n_cells), left_rows_(std::move(left)),
      right_rows_(std::move(right)) {
    if (static_cast<int>(left_rows_.size()) != n_cells - 1 ||
        static_cast<int>(right_rows_.size()) != n_cells - 1)
        throw std::invalid_argument("OperatorRows: need n_cells-1 rows per table");
    for (int i = 1; i <= n_cells - 1; ++i) {
        if (static_cast<int>(left_rows_[i - 1].size()) != i + 2 ||
            static_cast<int>(right_rows_[i - 1].size()) != n_cells - i + 2)
            throw std::invalid_argument("OperatorRows: row length mismatch");
    }
}

double OperatorRows::p(int i, int k) const {
    if (k < 0 || k > i + 1) return 0.0;
    return left_rows_[i - 1][k];
}

double OperatorRows::q(int i, int k) const {
    if (k < i - 1 || k > n_cells_) return 0.0;
    return right_rows_[i - 1][k - (i - 1)];
}

}  // namespace fracadi
