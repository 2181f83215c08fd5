#pragma once

#include <vector>

#include "fracadi/types.hpp"

namespace fracadi {

// Spline coefficient tables for the left (p) and right (q) fractional
// approximation operators. Rows are indexed by the interior node i in
// 1..N_x-1; left row i holds p_{i,0..i+1}, right row i holds q_{i,i-1..N_x}.
// The corner entries a_{0,0} and b_{N_x,N_x} are defined as 0 (their
// defining integrals run over an empty interval).

double a_coef(int i, int k, const FractionalOrder& alpha);
double b_coef(int i, int k, const FractionalOrder& alpha, int n_cells);

// p_{i,0..i+1}; 1 <= i <= N_x-1
std::vector<double> left_row(int i, const FractionalOrder& alpha, int n_cells);

// q_{i,i-1..N_x}; 1 <= i <= N_x-1
std::vector<double> right_row(int i, const FractionalOrder& alpha, int n_cells);

class OperatorRows {
public:
    OperatorRows(const FractionalOrder& alpha, int n_cells);

    // Construct from explicit tables; used to feed corrupted tables into the
    // audit. Row i-1 of `left` holds p_{i,0..i+1}, row i-1 of `right` holds
    // q_{i,i-1..N_x}.
    OperatorRows(const FractionalOrder& alpha, int n_cells,
                 std::vector<std::vector<double>> left,
                 std::vector<std::vector<double>> right);

    const FractionalOrder& order() const { return alpha_; }
    int n_cells() const { return n_cells_; }

    // p_{i,k} for 0 <= k <= i+1
    const std::vector<double>& left(int i) const { return left_rows_[i - 1]; }
    // q_{i,k} for i-1 <= k <= N_x; entry index is k-(i-1)
    const std::vector<double>& right(int i) const { return right_rows_[i - 1]; }

    double p(int i, int k) const;
    double q(int i, int k) const;

private:
    FractionalOrder alpha_;
    int n_cells_;
    std::vector<std::vector<double>> left_rows_;
    std::vector<std::vector<double>> right_rows_;
};

}  // namespace fracadi
