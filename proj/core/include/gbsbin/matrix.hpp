/**
 * Copyright 2026 The gbsbin Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GBSBIN_MATRIX_HPP
#define GBSBIN_MATRIX_HPP

#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace gbsbin {

/**
 * @brief Dense row-major matrix of doubles.
 *
 * Everything in this project is desk scale (dimensions of a few dozen), so
 * the matrix is a plain value type: stored, copied and returned by value.
 */
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    /// Builds a matrix from nested brace lists; rows must have equal length.
    static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_) throw std::invalid_argument("ragged row list");
            std::size_t j = 0;
            for (double v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }
    double operator()(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return data_[i * cols_ + j];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const double a = (*this)(i, k);
                if (a == 0.0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    Matrix operator+(const Matrix& rhs) const {
        check_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
        return out;
    }

    Matrix operator-(const Matrix& rhs) const {
        check_same_shape(rhs);
        Matrix out = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
        return out;
    }

    Matrix scaled(double s) const {
        Matrix out = *this;
        for (double& v : out.data_) v *= s;
        return out;
    }

    /// Submatrix with the given row and column index lists (repeats allowed).
    Matrix submatrix(const std::vector<std::size_t>& rows,
                     const std::vector<std::size_t>& cols) const {
        Matrix out(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i] >= rows_) throw std::out_of_range("submatrix row index");
            for (std::size_t j = 0; j < cols.size(); ++j) {
                if (cols[j] >= cols_) throw std::out_of_range("submatrix column index");
                out(i, j) = (*this)(rows[i], cols[j]);
            }
        }
        return out;
    }

    Matrix principal_submatrix(const std::vector<std::size_t>& idx) const {
        return submatrix(idx, idx);
    }

    /// Block-diagonal composition, [[a, 0], [0, b]].
    static Matrix direct_sum(const Matrix& a, const Matrix& b) {
        Matrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) out(a.rows_ + i, a.cols_ + j) = b(i, j);
        return out;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric(double tol = 1e-12) const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (std::fabs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        return true;
    }

    double max_abs_diff(const Matrix& rhs) const {
        check_same_shape(rhs);
        double m = 0.0;
        for (std::size_t k = 0; k < data_.size(); ++k)
            m = std::max(m, std::fabs(data_[k] - rhs.data_[k]));
        return m;
    }

    double trace() const {
        if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
        double t = 0.0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    void check_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<double> data_;
};

}  // namespace gbsbin

#endif
