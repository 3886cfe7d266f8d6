#pragma once

#include "swdual/arith.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace swdual {

// Dense row-major matrix. Vectors act on the left as rows: x -> x * A.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c, T(0)) {}
    Mat(std::initializer_list<std::initializer_list<long long>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        for (auto& row : init)
            for (auto v : row) a_.push_back(T(v));
    }
    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<T>>& rows, std::size_t ncols) {
        Mat m(rows.size(), ncols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& b) const {
        Mat c(rows_, b.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
            }
        return c;
    }
    Mat operator+(const Mat& b) const {
        Mat c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
        return c;
    }
    Mat operator-(const Mat& b) const {
        Mat c = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
        return c;
    }
    Mat scaled(const T& s) const {
        Mat c = *this;
        for (auto& x : c.a_) x *= s;
        return c;
    }
    bool operator==(const Mat& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_; }
    bool operator!=(const Mat& b) const { return !(*this == b); }

    bool is_zero() const {
        for (auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    std::vector<T> row_times(const std::vector<T>& x) const {
        std::vector<T> y(cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * (*this)(i, j);
        }
        return y;
    }

    void swap_rows(std::size_t i, std::size_t k) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
    }
    void swap_cols(std::size_t j, std::size_t k) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
    }
    // row_i += c * row_k
    void add_row(std::size_t i, std::size_t k, const T& c) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) += c * (*this)(k, j);
    }
    // col_j += c * col_k
    void add_col(std::size_t j, std::size_t k, const T& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) += c * (*this)(i, k);
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using IntMatrix = Mat<BigInt>;
using RatMatrix = Mat<Rational>;

RatMatrix to_rational(const IntMatrix& m);
// Throws NonIntegralEntries if some entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);

BigInt determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);
// Throws SingularBasis when singular.
RatMatrix inverse(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

struct SmithResult {
    IntMatrix U, D, V;  // U * M * V == D, U and V unimodular
    std::vector<BigInt> invariants() const;  // nonzero diagonal entries
};

SmithResult smith_normal_form(const IntMatrix& m);

std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace swdual
