#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace seidelskew::detail {

/// Minimal dense row-major square/rectangular matrix. Just storage plus the
/// handful of operations the exact and numeric kernels need.
template <class T>
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, T init = T{})
        : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols, init) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return d_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const T& operator()(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return d_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix&) const = default;

   private:
    int rows_, cols_;
    std::vector<T> d_;
};

template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
    assert(a.cols() == b.rows());
    Matrix<T> c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == T{}) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class T>
T trace(const Matrix<T>& a) {
    assert(a.rows() == a.cols());
    T t{};
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

}  // namespace seidelskew::detail
