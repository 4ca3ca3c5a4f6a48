#pragma once

// Levi-Civita connection coefficients of a MetricField, stored densely as
// polynomials, plus the sparse lookup tables the covariant derivative uses
// to scatter contributions without scanning all of Gamma per entry.

#include "walker/metric.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace curvature {

using polycore::Matrix;
using polycore::Poly;
using polycore::Rational;

class ChristoffelField {
  public:
    ChristoffelField(int dim, std::vector<Poly> data) : dim_(dim), data_(std::move(data)) {
        if (data_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
            throw std::invalid_argument("ChristoffelField: data size does not match dimension");
        build_tables();
    }

    int dim() const { return dim_; }

    // Gamma^a_{bc}, all indices 1-based
    const Poly& at(int a, int b, int c) const { return data_[idx(a, b, c)]; }

    // nonzero Gamma^a_{e l} for fixed (e, l), as pairs (a, flat index)
    const std::vector<std::pair<int, size_t>>& upper_at(int e, int l) const {
        return up_tab_[pos(e, l)];
    }
    // nonzero Gamma^l_{e b} for fixed (e, l), as pairs (b, flat index)
    const std::vector<std::pair<int, size_t>>& lower_at(int e, int l) const {
        return low_tab_[pos(e, l)];
    }
    const Poly& entry(size_t flat) const { return data_[flat]; }

  private:
    size_t idx(int a, int b, int c) const {
        if (a < 1 || a > dim_ || b < 1 || b > dim_ || c < 1 || c > dim_)
            throw std::out_of_range("ChristoffelField: index out of range");
        return (static_cast<size_t>(a - 1) * dim_ + (b - 1)) * dim_ + (c - 1);
    }
    size_t pos(int e, int l) const {
        if (e < 1 || e > dim_ || l < 1 || l > dim_)
            throw std::out_of_range("ChristoffelField: index out of range");
        return static_cast<size_t>(e - 1) * dim_ + (l - 1);
    }

    void build_tables() {
        up_tab_.assign(static_cast<size_t>(dim_) * dim_, {});
        low_tab_.assign(static_cast<size_t>(dim_) * dim_, {});
        for (int a = 1; a <= dim_; ++a)
            for (int e = 1; e <= dim_; ++e)
                for (int l = 1; l <= dim_; ++l) {
                    size_t flat = idx(a, e, l);
                    if (data_[flat].is_zero()) continue;
                    up_tab_[pos(e, l)].emplace_back(a, flat);   // Gamma^a_{e l}
                    low_tab_[pos(e, a)].emplace_back(l, flat);  // Gamma^a_{e l} seen as l -> a
                }
    }

    int dim_;
    std::vector<Poly> data_;
    std::vector<std::vector<std::pair<int, size_t>>> up_tab_;
    std::vector<std::vector<std::pair<int, size_t>>> low_tab_;
};

// Gamma^a_{bc} = (1/2) g^{af} (d_b g_{fc} + d_c g_{fb} - d_f g_{bc})
inline ChristoffelField christoffel(const walker::MetricField& mf) {
    const int dim = mf.dim;
    const Matrix<Poly> ginv = walker::invert_metric(mf);
    // precompute d_k g_{ij}
    std::vector<Poly> dg(static_cast<size_t>(dim) * dim * dim, Poly(dim));
    auto dgi = [dim](int k, int i, int j) {
        return (static_cast<size_t>(k - 1) * dim + (i - 1)) * dim + (j - 1);
    };
    for (int k = 1; k <= dim; ++k)
        for (int i = 1; i <= dim; ++i)
            for (int j = i; j <= dim; ++j) {
                Poly d = polycore::partial(mf.g.at(i - 1, j - 1), k);
                dg[dgi(k, i, j)] = d;
                if (i != j) dg[dgi(k, j, i)] = std::move(d);
            }
    const Rational half(1, 2);
    std::vector<Poly> data(static_cast<size_t>(dim) * dim * dim, Poly(dim));
    auto di = [dim](int a, int b, int c) {
        return (static_cast<size_t>(a - 1) * dim + (b - 1)) * dim + (c - 1);
    };
    for (int b = 1; b <= dim; ++b)
        for (int c = b; c <= dim; ++c) {
            for (int a = 1; a <= dim; ++a) {
                Poly acc(dim);
                for (int f = 1; f <= dim; ++f) {
                    const Poly& gaf = ginv.at(a - 1, f - 1);
                    if (gaf.is_zero()) continue;
                    Poly inner = dg[dgi(b, f, c)];
                    inner += dg[dgi(c, f, b)];
                    inner -= dg[dgi(f, b, c)];
                    if (inner.is_zero()) continue;
                    acc += gaf * inner;
                }
                acc *= half;
                data[di(a, b, c)] = acc;
                if (b != c) data[di(a, c, b)] = std::move(acc);
            }
        }
    return ChristoffelField(dim, std::move(data));
}

}  // namespace curvature
