#pragma once

// Exact rational Gaussian elimination. RowSpan keeps a subspace of Q^w in
// reduced row-echelon form under incremental insertion; pivoting is
// deterministic (first nonzero column, smallest row index), so every
// subspace has exactly one stored basis and span equality is literal
// row-by-row equality.

#include "polycore/matrix.hpp"
#include "polycore/rational.hpp"

#include <stdexcept>
#include <vector>

namespace liealg {

using polycore::Matrix;
using polycore::Rational;

class RowSpan {
public:
    explicit RowSpan(int width) : width_(width) {
        if (width <= 0) throw std::invalid_argument("RowSpan: width must be positive");
    }

    int width() const { return width_; }
    int dim() const { return static_cast<int>(rows_.size()); }

    // Reduce v by the current rows; returns the residual.
    std::vector<Rational> reduce(std::vector<Rational> v) const {
        check_width(v);
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational& lead = v[static_cast<size_t>(pivots_[r])];
            if (lead != 0) {
                Rational factor = lead;  // pivot entries are 1
                for (int j = pivots_[r]; j < width_; ++j)
                    v[static_cast<size_t>(j)] -= factor * rows_[r][static_cast<size_t>(j)];
            }
        }
        return v;
    }

    bool contains(const std::vector<Rational>& v) const {
        std::vector<Rational> res = reduce(v);
        for (const auto& x : res)
            if (x != 0) return false;
        return true;
    }

    // Insert v if independent of the current span. Returns true when the
    // span grew. The stored basis stays in reduced echelon form.
    bool insert(const std::vector<Rational>& v) {
        std::vector<Rational> res = reduce(v);
        int pivot = -1;
        for (int j = 0; j < width_; ++j)
            if (res[static_cast<size_t>(j)] != 0) {
                pivot = j;
                break;
            }
        if (pivot < 0) return false;
        Rational lead = res[static_cast<size_t>(pivot)];
        for (int j = pivot; j < width_; ++j) res[static_cast<size_t>(j)] /= lead;
        // eliminate the new pivot column from existing rows
        for (size_t r = 0; r < rows_.size(); ++r) {
            const Rational& e = rows_[r][static_cast<size_t>(pivot)];
            if (e != 0) {
                Rational factor = e;
                for (int j = pivot; j < width_; ++j)
                    rows_[r][static_cast<size_t>(j)] -= factor * res[static_cast<size_t>(j)];
            }
        }
        // keep rows ordered by pivot column
        size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < pivot) ++pos;
        rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(res));
        pivots_.insert(pivots_.begin() + static_cast<long>(pos), pivot);
        return true;
    }

    // The unique reduced echelon basis, one row per dimension.
    Matrix<Rational> basis_matrix() const {
        Matrix<Rational> m(dim(), width_, Rational(0));
        for (int r = 0; r < dim(); ++r)
            for (int j = 0; j < width_; ++j)
                m.at(r, j) = rows_[static_cast<size_t>(r)][static_cast<size_t>(j)];
        return m;
    }

    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

private:
    void check_width(const std::vector<Rational>& v) const {
        if (static_cast<int>(v.size()) != width_)
            throw std::invalid_argument("RowSpan: vector width mismatch");
    }

    int width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<int> pivots_;
};

// Reduced row-echelon form with the same deterministic pivoting.
inline Matrix<Rational> rref(const Matrix<Rational>& m) {
    RowSpan span(m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        std::vector<Rational> row(static_cast<size_t>(m.cols()));
        for (int j = 0; j < m.cols(); ++j) row[static_cast<size_t>(j)] = m.at(i, j);
        span.insert(row);
    }
    return span.basis_matrix();
}

inline int rank(const Matrix<Rational>& m) { return rref(m).rows(); }

}  // namespace liealg
