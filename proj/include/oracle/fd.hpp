#pragma once

// Independent floating-point cross-check of the symbolic pipeline. Metric
// values are computed in doubles straight from the HSpec (never through the
// polynomial layer), the inverse comes from Eigen, and derivatives are
// second-order central differences. Agreement with the exact results is
// evidence against a shared systematic error in either pipeline.

#include "walker/hspec.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <random>
#include <vector>

namespace oracle {

using FloatPoint = std::vector<double>;

inline double u_value(const walker::HSpec& spec, const FloatPoint& x, int i) {
    const int n = spec.n;
    double s = 0.0;
    double w = 1.0;
    for (int alpha = 1; alpha <= spec.N(); ++alpha) {
        w *= x[static_cast<size_t>(n + 2)];  // (x^{n+3})^alpha
        for (int j = 0; j < n; ++j) {
            double c = spec.basis[static_cast<size_t>(alpha - 1)].at(i, j).get_d();
            if (c != 0.0) s += c * x[static_cast<size_t>(2 + j)] * w;
        }
    }
    return s;
}

inline Eigen::MatrixXd metric_value(const walker::HSpec& spec, const FloatPoint& x) {
    const int n = spec.n;
    const int dim = n + 4;
    Eigen::MatrixXd g = Eigen::MatrixXd::Zero(dim, dim);
    g(0, n + 2) = g(n + 2, 0) = 1.0;
    g(1, n + 3) = g(n + 3, 1) = 1.0;
    double f = 0.0;
    for (int i = 0; i < n; ++i) {
        g(2 + i, 2 + i) = 1.0;
        double ui = u_value(spec, x, i);
        g(2 + i, n + 3) = g(n + 3, 2 + i) = ui;
        f += x[static_cast<size_t>(2 + i)] * x[static_cast<size_t>(2 + i)];
    }
    g(n + 2, n + 2) = f;
    g(n + 3, n + 3) = f;
    return g;
}

// flat index for a rank-3 array of side dim, all inputs 1-based
inline size_t flat3(int dim, int a, int b, int c) {
    return (static_cast<size_t>(a - 1) * dim + (b - 1)) * dim + (c - 1);
}
inline size_t flat4(int dim, int a, int b, int c, int d) {
    return ((static_cast<size_t>(a - 1) * dim + (b - 1)) * dim + (c - 1)) * dim + (d - 1);
}

// Gamma^a_{bc} by central differences of the metric, h the step size
inline std::vector<double> fd_christoffel(const walker::HSpec& spec, const FloatPoint& x,
                                          double h) {
    const int dim = spec.n + 4;
    // dg[k][i][j] = d_k g_{ij}
    std::vector<double> dg(static_cast<size_t>(dim) * dim * dim);
    for (int k = 1; k <= dim; ++k) {
        FloatPoint xp = x, xm = x;
        xp[static_cast<size_t>(k - 1)] += h;
        xm[static_cast<size_t>(k - 1)] -= h;
        Eigen::MatrixXd gp = metric_value(spec, xp);
        Eigen::MatrixXd gm = metric_value(spec, xm);
        for (int i = 1; i <= dim; ++i)
            for (int j = 1; j <= dim; ++j)
                dg[flat3(dim, k, i, j)] = (gp(i - 1, j - 1) - gm(i - 1, j - 1)) / (2.0 * h);
    }
    Eigen::MatrixXd ginv = metric_value(spec, x).inverse();
    std::vector<double> gamma(static_cast<size_t>(dim) * dim * dim);
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b)
            for (int c = b; c <= dim; ++c) {
                double s = 0.0;
                for (int f = 1; f <= dim; ++f)
                    s += ginv(a - 1, f - 1) * (dg[flat3(dim, b, f, c)] + dg[flat3(dim, c, f, b)] -
                                               dg[flat3(dim, f, b, c)]);
                s *= 0.5;
                gamma[flat3(dim, a, b, c)] = s;
                gamma[flat3(dim, a, c, b)] = s;
            }
    return gamma;
}

// R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
//           + Gamma^a_{cf} Gamma^f_{db} - Gamma^a_{df} Gamma^f_{cb},
// the derivatives again by central differences (of fd_christoffel)
inline std::vector<double> fd_riemann(const walker::HSpec& spec, const FloatPoint& x, double h) {
    const int dim = spec.n + 4;
    std::vector<std::vector<double>> dgamma(static_cast<size_t>(dim));  // d_k Gamma
    for (int k = 1; k <= dim; ++k) {
        FloatPoint xp = x, xm = x;
        xp[static_cast<size_t>(k - 1)] += h;
        xm[static_cast<size_t>(k - 1)] -= h;
        std::vector<double> gp = fd_christoffel(spec, xp, h);
        std::vector<double> gm = fd_christoffel(spec, xm, h);
        std::vector<double>& dk = dgamma[static_cast<size_t>(k - 1)];
        dk.resize(gp.size());
        for (size_t t = 0; t < gp.size(); ++t) dk[t] = (gp[t] - gm[t]) / (2.0 * h);
    }
    std::vector<double> gamma = fd_christoffel(spec, x, h);
    std::vector<double> riem(static_cast<size_t>(dim) * dim * dim * dim);
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b)
            for (int c = 1; c <= dim; ++c)
                for (int d = 1; d <= dim; ++d) {
                    double s = dgamma[static_cast<size_t>(c - 1)][flat3(dim, a, d, b)] -
                               dgamma[static_cast<size_t>(d - 1)][flat3(dim, a, c, b)];
                    for (int f = 1; f <= dim; ++f)
                        s += gamma[flat3(dim, a, c, f)] * gamma[flat3(dim, f, d, b)] -
                             gamma[flat3(dim, a, d, f)] * gamma[flat3(dim, f, c, b)];
                    riem[flat4(dim, a, b, c, d)] = s;
                }
    return riem;
}

// deterministic sample point with coordinates in [-1, 1], step 1/1000;
// identical on every platform because only the raw mt19937 stream is used
inline FloatPoint seeded_point(int dim, unsigned seed) {
    std::mt19937 gen(seed);
    FloatPoint x(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        x[static_cast<size_t>(i)] = (static_cast<double>(gen() % 2001) - 1000.0) / 1000.0;
    return x;
}

}  // namespace oracle
