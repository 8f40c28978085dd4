#pragma once

#include <vector>

#include "donaldson/rational.hpp"

namespace donaldson {

/// Dense matrix over the Gaussian rationals. Small: used for confluent
/// Vandermonde systems and their inverses. All elimination is exact with a
/// deterministic pivot rule (first nonzero row in column order).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, GaussianRational(0)) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    GaussianRational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const GaussianRational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    /// Exact inverse; throws inconsistency_error if singular.
    Matrix inverse() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);

    /// Solve A x = b for square A; throws if singular.
    std::vector<GaussianRational> solve(const std::vector<GaussianRational>& b) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> a_;
};

/// Sample matrix of the confluent exponential model: column (j,m) holds the
/// Taylor coefficients of s^m * exp(mu_j s); row k is the coefficient of s^k,
/// i.e. mu_j^(k-m) / (k-m)! for k >= m. With distinct eigenvalues the square
/// matrix (rows = sum of multiplicities) is invertible.
Matrix confluent_vandermonde(const std::vector<std::pair<GaussianRational, int>>& eigenvalues,
                             std::size_t rows);

} // namespace donaldson
