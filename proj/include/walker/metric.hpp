#pragma once

// The polynomial metric on R^{n+4} attached to an HSpec. Coordinates are
// numbered 1..n+4: two null directions 1,2 up front, the n middle
// coordinates 3..n+2, and the two null partners n+3, n+4 at the end.
// With u^i = sum_{j,alpha} (A_alpha)_{i-2,j-2} x^j (x^{n+3})^alpha and
// f = sum_i (x^i)^2 over the middle range, the metric is
//   g = 2 dx^1 dx^{n+3} + 2 dx^2 dx^{n+4} + sum (dx^i)^2
//       + 2 sum u^i dx^i dx^{n+4} + f (dx^{n+3})^2 + f (dx^{n+4})^2.
// In the block order (1,2 | middle | n+3,n+4) that is
//   [[0, 0, I2], [0, I_n, W], [I2, W^t, f I2]]
// with W the n x 2 matrix whose first column is zero and second column u,
// which has the closed-form inverse
//   [[W^t W - f I2, -W^t, I2], [-W, I_n, 0], [I2, 0, 0]]
// and determinant 1.

#include "polycore/matrix.hpp"
#include "polycore/poly.hpp"
#include "walker/hspec.hpp"

#include <stdexcept>
#include <vector>

namespace walker {

using polycore::Poly;

struct MetricField {
    int n = 0;
    int dim = 0;               // n + 4
    std::vector<Poly> u;       // u[i] is the coefficient u^{i+3}, i = 0..n-1
    Poly f = Poly(1);
    Matrix<Poly> g;            // full symmetric (n+4) x (n+4) matrix of polynomials
};

// The off-diagonal coefficients u^i. With corrupt set, the sign of one term
// of u^3 is flipped (or a spurious x^3 x^{n+3} term is added when u^3 = 0);
// this is the controlled way to break the construction for negative tests.
inline std::vector<Poly> build_u(const HSpec& spec, bool corrupt = false) {
    const int n = spec.n;
    const int dim = n + 4;
    std::vector<Poly> us(static_cast<size_t>(n), Poly(dim));
    for (int i = 0; i < n; ++i)
        for (int alpha = 1; alpha <= spec.N(); ++alpha)
            for (int j = 0; j < n; ++j) {
                const Rational& c = spec.basis[static_cast<size_t>(alpha - 1)].at(i, j);
                if (c == 0) continue;
                polycore::Monomial m(dim);
                m.exps[static_cast<size_t>(2 + j)] = 1;        // x^{j+3}
                m.exps[static_cast<size_t>(n + 2)] = alpha;    // (x^{n+3})^alpha
                us[static_cast<size_t>(i)] += Poly::term(dim, c, m);
            }
    if (corrupt) {
        if (!us[0].is_zero()) {
            auto first = *us[0].terms().begin();
            us[0] -= Rational(2) * Poly::term(dim, first.second, first.first);
        } else {
            polycore::Monomial m(dim);
            m.exps[2] = 1;
            m.exps[static_cast<size_t>(n + 2)] = 1;
            us[0] += Poly::term(dim, Rational(1), m);
        }
    }
    return us;
}

inline MetricField build_metric(const HSpec& spec, bool corrupt = false) {
    validate_hspec(spec);
    MetricField mf;
    mf.n = spec.n;
    mf.dim = spec.n + 4;
    mf.u = build_u(spec, corrupt);
    mf.f = Poly(mf.dim);
    for (int i = 0; i < mf.n; ++i) {
        Poly xi = Poly::variable(mf.dim, 3 + i);
        mf.f += xi * xi;
    }
    mf.g = Matrix<Poly>(mf.dim, mf.dim, Poly(mf.dim));
    const Poly one = Poly::constant(mf.dim, Rational(1));
    mf.g.at(0, mf.n + 2) = one;  // g_{1,n+3}
    mf.g.at(mf.n + 2, 0) = one;
    mf.g.at(1, mf.n + 3) = one;  // g_{2,n+4}
    mf.g.at(mf.n + 3, 1) = one;
    for (int i = 0; i < mf.n; ++i) {
        mf.g.at(2 + i, 2 + i) = one;
        mf.g.at(2 + i, mf.n + 3) = mf.u[static_cast<size_t>(i)];
        mf.g.at(mf.n + 3, 2 + i) = mf.u[static_cast<size_t>(i)];
    }
    mf.g.at(mf.n + 2, mf.n + 2) = mf.f;
    mf.g.at(mf.n + 3, mf.n + 3) = mf.f;
    return mf;
}

// Exact inverse via the block formula, then verified against the definition;
// a failure here means the field is not of the expected block shape.
inline Matrix<Poly> invert_metric(const MetricField& mf) {
    const int n = mf.n;
    const int dim = mf.dim;
    const Poly zero(dim);
    const Poly one = Poly::constant(dim, Rational(1));
    Matrix<Poly> ginv(dim, dim, zero);
    // top-left 2x2: W^t W - f I2, where column 1 of W is zero and column 2 is u
    Poly usq(dim);
    for (const Poly& ui : mf.u) usq += ui * ui;
    ginv.at(0, 0) = -mf.f;
    ginv.at(1, 1) = usq - mf.f;
    for (int i = 0; i < n; ++i) {
        ginv.at(1, 2 + i) = -mf.u[static_cast<size_t>(i)];  // -W^t
        ginv.at(2 + i, 1) = -mf.u[static_cast<size_t>(i)];  // -W
        ginv.at(2 + i, 2 + i) = one;
    }
    ginv.at(0, n + 2) = one;
    ginv.at(1, n + 3) = one;
    ginv.at(n + 2, 0) = one;
    ginv.at(n + 3, 1) = one;
    if (mf.g * ginv != Matrix<Poly>::identity(dim, one, zero))
        throw std::logic_error("invert_metric: closed-form inverse failed verification");
    return ginv;
}

inline Poly metric_det(const MetricField& mf) { return polycore::laplace_det(mf.g, Poly(mf.dim)); }

}  // namespace walker
