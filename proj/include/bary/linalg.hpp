#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bary {

/// Dense row-major matrix of doubles. Small and boring on purpose: every
/// system in this library is desk scale (a few thousand unknowns at most).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    double max_abs() const noexcept;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> multiply(const Matrix& a, std::span<const double> x);

/// Solves A X = B for square A by Gaussian elimination with partial
/// pivoting. B may carry several right-hand sides (one per column).
/// Throws Error(SingularSystem) when a pivot falls below
/// `singular_tol * max|A|`.
Matrix solve_dense(Matrix a, Matrix b, double singular_tol = 1e-13);

/// Numerical rank by elimination with full pivoting; a pivot counts when
/// its magnitude exceeds `tol * max|A|`.
std::size_t rank(Matrix a, double tol);

/// Orthonormal basis of { x : A x = 0 }, one vector per entry. Pivots below
/// `tol * max|A|` are treated as zero. The sign of each basis vector is fixed
/// so that its first nonzero entry is positive.
std::vector<std::vector<double>> nullspace(const Matrix& a, double tol = 1e-12);

}  // namespace bary
