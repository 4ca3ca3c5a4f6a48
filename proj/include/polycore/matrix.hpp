#pragma once

// Dense matrices over any exact ring (Rational, Poly). Only ring
// operations are used here; division-free determinants go through
// memoized Laplace expansion so Poly matrices work too.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace polycore {

template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols, const T& fill)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative size");
    }
    Matrix(int rows, int cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (static_cast<size_t>(rows) * static_cast<size_t>(cols) != data_.size())
            throw std::invalid_argument("Matrix: data size mismatch");
    }

    static Matrix identity(int n, const T& one, const T& zero) {
        Matrix m(n, n, zero);
        for (int i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return data_[index(i, j)]; }
    const T& at(int i, int j) const { return data_[index(i, j)]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }
    Matrix operator-() const {
        Matrix r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: size mismatch in product");
        if (cols_ == 0) throw std::invalid_argument("Matrix: empty product");
        Matrix r(rows_, o.cols_, at(0, 0));  // placeholder fill, overwritten below
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < o.cols_; ++j) {
                T acc = at(i, 0) * o.at(0, j);
                for (int k = 1; k < cols_; ++k) acc += at(i, k) * o.at(k, j);
                r.at(i, j) = acc;
            }
        return r;
    }

    Matrix scaled(const T& s) const {
        Matrix r = *this;
        for (auto& v : r.data_) v = v * s;
        return r;
    }

    Matrix transpose() const {
        if (rows_ == 0 || cols_ == 0) return Matrix(cols_, rows_, std::vector<T>{});
        Matrix r(cols_, rows_, data_[0]);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    bool all_equal(const T& v) const {
        for (const auto& x : data_)
            if (!(x == v)) return false;
        return true;
    }

    // Row-major flattening, used for span computations over matrices.
    const std::vector<T>& flat() const { return data_; }

private:
    size_t index(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("Matrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

namespace detail {
template <class T>
T laplace_det_rec(const Matrix<T>& m, int row, uint32_t colmask, const T& zero,
                  std::map<uint32_t, T>& memo) {
    auto it = memo.find(colmask);
    if (it != memo.end()) return it->second;
    T acc = zero;
    int sign = 1;
    for (int j = 0; j < m.cols(); ++j) {
        if (!(colmask & (1u << j))) continue;
        if (row == m.rows() - 1) {
            acc += m.at(row, j);
        } else {
            T sub = laplace_det_rec(m, row + 1, colmask & ~(1u << j), zero, memo);
            T prod = m.at(row, j) * sub;
            if (sign < 0)
                acc -= prod;
            else
                acc += prod;
        }
        sign = -sign;
    }
    memo.emplace(colmask, acc);
    return acc;
}
}  // namespace detail

// Determinant by memoized Laplace expansion along rows; needs no division,
// so it applies to polynomial matrices. Practical up to ~20 columns.
template <class T>
T laplace_det(const Matrix<T>& m, const T& zero) {
    if (m.rows() != m.cols()) throw std::invalid_argument("laplace_det: not square");
    if (m.rows() == 0) throw std::invalid_argument("laplace_det: empty matrix");
    if (m.rows() > 20) throw std::invalid_argument("laplace_det: too large");
    std::map<uint32_t, T> memo;
    uint32_t full = (m.cols() == 32) ? ~0u : ((1u << m.cols()) - 1u);
    return detail::laplace_det_rec(m, 0, full, zero, memo);
}

}  // namespace polycore
