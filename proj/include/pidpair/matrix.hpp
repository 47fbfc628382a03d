#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pidpair/errors.hpp"

namespace pidpair {

/// Dense row-major matrix with exact entries. Any of the dimensions may be
/// zero; an n x 0 or 0 x m matrix still composes correctly in products and
/// block concatenation.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T::zero()) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows_ * cols_)
            throw DimensionMismatch("matrix entry count does not match shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
        cols_ = rows_ ? rows.begin()->size() : 0;
        a_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw DimensionMismatch("ragged matrix literal");
            a_.insert(a_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T::one();
        return m;
    }
    static Matrix diagonal(std::span<const T> d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            m(i, i) = d[i];
        return m;
    }
    static Matrix column(std::span<const T> v) { return Matrix(v.size(), 1, {v.begin(), v.end()}); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<T>& entries() const { return a_; }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero())
                return false;
        return true;
    }

    /// Rows [r0, r0+nr) and columns [c0, c0+nc).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_)
            throw DimensionMismatch("block out of range");
        Matrix m(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }
    Matrix columns(std::size_t c0, std::size_t nc) const { return block(0, c0, rows_, nc); }
    Matrix row_range(std::size_t r0, std::size_t nr) const { return block(r0, 0, nr, cols_); }

    std::vector<T> column_vector(std::size_t j) const {
        std::vector<T> v;
        v.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            v.push_back((*this)(i, j));
        return v;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                m(j, i) = (*this)(i, j);
        return m;
    }

    // Elementary operations, used by the normal-form engines.
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        if (j == k)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, j), (*this)(i, k));
    }
    /// row i += c * row k
    void add_row_multiple(std::size_t i, std::size_t k, const T& c) {
        if (c.is_zero())
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!(*this)(k, j).is_zero())
                (*this)(i, j) += c * (*this)(k, j);
    }
    /// col j += c * col k
    void add_col_multiple(std::size_t j, std::size_t k, const T& c) {
        if (c.is_zero())
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, k).is_zero())
                (*this)(i, j) += c * (*this)(i, k);
    }
    void scale_row(std::size_t i, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) *= c;
    }
    void scale_col(std::size_t j, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, j) *= c;
    }
    /// Rows i, k replaced by (a*ri + b*rk, c*ri + d*rk).
    void combine_rows(std::size_t i, std::size_t k, const T& a, const T& b, const T& c, const T& d) {
        for (std::size_t j = 0; j < cols_; ++j) {
            T x = (*this)(i, j), y = (*this)(k, j);
            (*this)(i, j) = a * x + b * y;
            (*this)(k, j) = c * x + d * y;
        }
    }
    /// Columns j, k replaced by (a*cj + b*ck, c*cj + d*ck).
    void combine_cols(std::size_t j, std::size_t k, const T& a, const T& b, const T& c, const T& d) {
        for (std::size_t i = 0; i < rows_; ++i) {
            T x = (*this)(i, j), y = (*this)(i, k);
            (*this)(i, j) = a * x + b * y;
            (*this)(i, k) = c * x + d * y;
        }
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
        Matrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero())
                        m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i)
            m.a_[i] += b.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix m = a;
        for (std::size_t i = 0; i < m.a_.size(); ++i)
            m.a_[i] -= b.a_[i];
        return m;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.a_)
            x = -x;
        return m;
    }
    friend bool operator==(const Matrix&, const Matrix&) = default;

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_)
            throw DimensionMismatch("shape " + shape() + " vs " + b.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

/// [A | B]
template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows())
        throw DimensionMismatch("hcat of " + a.shape() + " and " + b.shape());
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

template <class T>
Matrix<T> hcat(std::initializer_list<Matrix<T>> parts) {
    Matrix<T> m;
    bool first = true;
    for (const auto& p : parts) {
        m = first ? p : hcat(m, p);
        first = false;
    }
    return m;
}

/// [A ; B]
template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("vcat of " + a.shape() + " and " + b.shape());
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, j) = b(i, j);
    return m;
}

/// diag(A, B)
template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

/// Entrywise conversion, e.g. ring matrix to fraction-field matrix.
template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
    std::vector<To> e;
    e.reserve(m.entries().size());
    for (const auto& x : m.entries())
        e.push_back(To(x));
    return Matrix<To>(m.rows(), m.cols(), std::move(e));
}

} // namespace pidpair
