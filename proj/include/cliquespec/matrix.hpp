#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cliquespec {

// Dense row-major matrix of doubles. Everything in this project is small
// (n below ~50), so there is no attempt at blocking or sparsity.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(double s) const;

    double max_abs() const;
    double frobenius() const;
    bool is_symmetric(double rel_tol) const;

    // Stack blocks vertically; all blocks must share a column count.
    static Matrix vstack(const std::vector<Matrix>& blocks);

    Matrix columns(int first, int count) const;

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> a_;
};

} // namespace cliquespec
