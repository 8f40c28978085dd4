#include "donaldson/matrix.hpp"

#include "donaldson/errors.hpp"

namespace donaldson {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussianRational(1);
    return m;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw validation_error("inverse of non-square matrix");
    std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw inconsistency_error("singular matrix");
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        }
        GaussianRational p = a.at(col, col).inverse();
        for (std::size_t c = 0; c < n; ++c) {
            a.at(col, c) *= p;
            inv.at(col, c) *= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            GaussianRational f = a.at(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw validation_error("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

std::vector<GaussianRational> Matrix::solve(const std::vector<GaussianRational>& b) const {
    if (rows_ != cols_ || b.size() != rows_) throw validation_error("solve shape mismatch");
    Matrix inv = inverse();
    std::vector<GaussianRational> x(rows_, GaussianRational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < rows_; ++j)
            if (!inv.at(i, j).is_zero()) x[i] += inv.at(i, j) * b[j];
    return x;
}

Matrix confluent_vandermonde(const std::vector<std::pair<GaussianRational, int>>& eigenvalues,
                             std::size_t rows) {
    std::size_t cols = 0;
    for (const auto& [mu, n] : eigenvalues) {
        if (n < 1) throw validation_error("eigenvalue multiplicity must be >= 1");
        cols += static_cast<std::size_t>(n);
    }
    Matrix v(rows, cols);
    std::size_t col = 0;
    for (const auto& [mu, n] : eigenvalues) {
        for (int m = 0; m < n; ++m, ++col) {
            for (std::size_t k = static_cast<std::size_t>(m); k < rows; ++k) {
                int d = static_cast<int>(k) - m;
                GaussianRational entry = gr_pow(mu, d);
                entry *= GaussianRational(mpq_class(1) / factorial_q(d));
                v.at(k, col) = entry;
            }
        }
    }
    return v;
}

} // namespace donaldson
