#include "bary/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "bary/error.hpp"

namespace bary {

double Matrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        auto row = a.row(r);
        y[r] = std::inner_product(row.begin(), row.end(), x.begin(), 0.0);
    }
    return y;
}

Matrix solve_dense(Matrix a, Matrix b, double singular_tol) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) {
        throw Error(Errc::InvalidInput, "solve_dense: dimension mismatch");
    }
    const std::size_t nrhs = b.cols();
    const double threshold = singular_tol * std::max(a.max_abs(), 1e-300);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(a(r, k)) > std::abs(a(piv, k))) piv = r;
        }
        if (std::abs(a(piv, k)) <= threshold) {
            throw Error(Errc::SingularSystem, "pivot " + std::to_string(k) + " vanishes");
        }
        if (piv != k) {
            std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(piv).begin());
            std::swap_ranges(b.row(k).begin(), b.row(k).end(), b.row(piv).begin());
        }
        const double inv = 1.0 / a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            const double f = a(r, k) * inv;
            if (f == 0.0) continue;
            a(r, k) = 0.0;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
            for (std::size_t c = 0; c < nrhs; ++c) b(r, c) -= f * b(k, c);
        }
    }
    Matrix x(n, nrhs);
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t c = 0; c < nrhs; ++c) {
            double acc = b(kk, c);
            for (std::size_t j = kk + 1; j < n; ++j) acc -= a(kk, j) * x(j, c);
            x(kk, c) = acc / a(kk, kk);
        }
    }
    return x;
}

namespace {

// Reduced row echelon form with full pivoting over columns; returns the
// pivot column of each pivot row.
std::vector<std::size_t> reduce(Matrix& a, double tol) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    const double threshold = tol * a.max_abs();
    std::vector<std::size_t> pivots;
    std::vector<bool> used(cols, false);
    std::size_t r = 0;
    while (r < rows) {
        std::size_t best_r = rows, best_c = cols;
        double best = threshold;
        for (std::size_t i = r; i < rows; ++i) {
            for (std::size_t c = 0; c < cols; ++c) {
                if (used[c]) continue;
                if (std::abs(a(i, c)) > best) {
                    best = std::abs(a(i, c));
                    best_r = i;
                    best_c = c;
                }
            }
        }
        if (best_r == rows) break;
        if (best_r != r) std::swap_ranges(a.row(r).begin(), a.row(r).end(), a.row(best_r).begin());
        const double inv = 1.0 / a(r, best_c);
        for (double& v : a.row(r)) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = a(i, best_c);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) a(i, c) -= f * a(r, c);
            a(i, best_c) = 0.0;
        }
        used[best_c] = true;
        pivots.push_back(best_c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix a, double tol) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return reduce(a, tol).size();
}

std::vector<std::vector<double>> nullspace(const Matrix& a, double tol) {
    const std::size_t cols = a.cols();
    Matrix r = a;
    const auto pivots = a.rows() == 0 ? std::vector<std::size_t>{} : reduce(r, tol);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<double>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<double> v(cols, 0.0);
        v[free] = 1.0;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }

    // Modified Gram-Schmidt.
    std::vector<std::vector<double>> ortho;
    for (auto& v : basis) {
        for (const auto& q : ortho) {
            const double d = std::inner_product(v.begin(), v.end(), q.begin(), 0.0);
            for (std::size_t i = 0; i < cols; ++i) v[i] -= d * q[i];
        }
        const double norm = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        if (norm == 0.0) continue;
        for (double& x : v) x /= norm;
        ortho.push_back(std::move(v));
    }
    for (auto& v : ortho) {
        auto first = std::find_if(v.begin(), v.end(), [](double x) { return std::abs(x) > 1e-14; });
        if (first != v.end() && *first < 0) {
            for (double& x : v) x = -x;
        }
    }
    return ortho;
}

}  // namespace bary
