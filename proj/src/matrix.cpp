#include "cliquespec/matrix.hpp"

#include <cmath>
#include <cstdlib>

#include "cliquespec/error.hpp"

namespace cliquespec {

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != cols_)
            throw invalid_parameter("ragged initializer for Matrix");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw invalid_parameter("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const double v = (*this)(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < rhs.cols_; ++j) out(i, j) += v * rhs(k, j);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw invalid_parameter("matrix sum shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] += rhs.a_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw invalid_parameter("matrix difference shape mismatch");
    Matrix out = *this;
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] -= rhs.a_[i];
    return out;
}

Matrix Matrix::scaled(double s) const {
    Matrix out = *this;
    for (double& v : out.a_) v *= s;
    return out;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (double v : a_) s += v * v;
    return std::sqrt(s);
}

bool Matrix::is_symmetric(double rel_tol) const {
    if (rows_ != cols_) return false;
    const double scale = 1.0 + max_abs();
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (std::fabs((*this)(i, j) - (*this)(j, i)) > rel_tol * scale) return false;
    return true;
}

Matrix Matrix::vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) return {};
    int cols = blocks.front().cols();
    int rows = 0;
    for (const Matrix& b : blocks) {
        if (b.cols() != cols) throw invalid_parameter("vstack column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols);
    int r = 0;
    for (const Matrix& b : blocks) {
        for (int i = 0; i < b.rows(); ++i, ++r)
            for (int j = 0; j < cols; ++j) out(r, j) = b(i, j);
    }
    return out;
}

Matrix Matrix::columns(int first, int count) const {
    Matrix out(rows_, count);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

} // namespace cliquespec
