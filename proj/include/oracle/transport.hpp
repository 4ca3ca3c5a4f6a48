#pragma once

// Numeric parallel transport around a small coordinate rectangle. With P
// the holonomy of the loop, the returned estimate (I - P)/eps^2 equals
// R(e_c, e_d)_0 up to O(eps), which pins down the curvature operator
// including its sign, with no symbolic machinery involved.

#include "oracle/fd.hpp"

#include <stdexcept>

namespace oracle {

namespace detail {

// transport coefficient matrix along a straight edge: A(x)[a][b] = Gamma^a_{lb}(x) v^l
inline Eigen::MatrixXd edge_matrix(const walker::HSpec& spec, const FloatPoint& x,
                                   const Eigen::VectorXd& v, double h) {
    const int dim = spec.n + 4;
    std::vector<double> gamma = fd_christoffel(spec, x, h);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b) {
            double s = 0.0;
            for (int l = 1; l <= dim; ++l) s += gamma[flat3(dim, a, l, b)] * v(l - 1);
            m(a - 1, b - 1) = s;
        }
    return m;
}

// RK4 for dP/dt = -A(p + t v) P over t in [0, 1]
inline void transport_edge(const walker::HSpec& spec, const FloatPoint& p,
                           const Eigen::VectorXd& v, int steps, double h, Eigen::MatrixXd& P) {
    const int dim = spec.n + 4;
    const double tau = 1.0 / steps;
    auto at = [&](double t) {
        FloatPoint x = p;
        for (int i = 0; i < dim; ++i) x[static_cast<size_t>(i)] += t * v(i);
        return edge_matrix(spec, x, v, h);
    };
    for (int s = 0; s < steps; ++s) {
        double t = s * tau;
        Eigen::MatrixXd a1 = at(t);
        Eigen::MatrixXd a2 = at(t + tau / 2.0);
        Eigen::MatrixXd a3 = at(t + tau);
        Eigen::MatrixXd k1 = -a1 * P;
        Eigen::MatrixXd k2 = -a2 * (P + (tau / 2.0) * k1);
        Eigen::MatrixXd k3 = -a2 * (P + (tau / 2.0) * k2);
        Eigen::MatrixXd k4 = -a3 * (P + tau * k3);
        P += (tau / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
}

}  // namespace detail

// Transport the standard frame around the rectangle
// 0 -> eps e_c -> eps e_c + eps e_d -> eps e_d -> 0 (c, d are 1-based)
// and return the curvature estimate (I - P)/eps^2.
inline Eigen::MatrixXd loop_transport(const walker::HSpec& spec, int c, int d, double eps,
                                      int steps = 64) {
    const int dim = spec.n + 4;
    if (c < 1 || c > dim || d < 1 || d > dim || c == d)
        throw std::invalid_argument("loop_transport: plane indices out of range");
    const double h = 1e-5;  // inner difference step for Gamma along the path
    Eigen::VectorXd ec = Eigen::VectorXd::Zero(dim);
    Eigen::VectorXd ed = Eigen::VectorXd::Zero(dim);
    ec(c - 1) = eps;
    ed(d - 1) = eps;
    Eigen::MatrixXd P = Eigen::MatrixXd::Identity(dim, dim);
    FloatPoint p0(static_cast<size_t>(dim), 0.0);
    FloatPoint p1 = p0, p2 = p0, p3 = p0;
    p1[static_cast<size_t>(c - 1)] = eps;
    p2[static_cast<size_t>(c - 1)] = eps;
    p2[static_cast<size_t>(d - 1)] = eps;
    p3[static_cast<size_t>(d - 1)] = eps;
    detail::transport_edge(spec, p0, ec, steps, h, P);
    detail::transport_edge(spec, p1, ed, steps, h, P);
    detail::transport_edge(spec, p2, -ec, steps, h, P);
    detail::transport_edge(spec, p3, -ed, steps, h, P);
    return (Eigen::MatrixXd::Identity(dim, dim) - P) / (eps * eps);
}

}  // namespace oracle
