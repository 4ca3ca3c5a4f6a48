#pragma once

// The fixed bilinear form of signature (2,n+2) in the basis
// p_1, p_2, e_1..e_n, q_1, q_2, identified with coordinate directions
// 1, 2, 3..n+2, n+3, n+4 in that order. Its Gram matrix has ones at
// (1,n+3), (2,n+4) and their mirrors, the identity on the middle block,
// and zeros elsewhere; it is an involution.

#include "polycore/matrix.hpp"
#include "polycore/rational.hpp"

#include <stdexcept>

namespace liealg {

using polycore::Matrix;
using polycore::Rational;

struct EtaForm {
    int n = 0;
    Matrix<Rational> gram;
};

inline EtaForm gram_eta(int n, bool allow_degenerate = false) {
    if (n < 0) throw std::invalid_argument("gram_eta: n must be non-negative");
    if (n == 0 && !allow_degenerate)
        throw std::invalid_argument("gram_eta: n = 0 requires allow_degenerate");
    int d = n + 4;
    Matrix<Rational> g(d, d, Rational(0));
    g.at(0, n + 2) = 1;
    g.at(1, n + 3) = 1;
    g.at(n + 2, 0) = 1;
    g.at(n + 3, 1) = 1;
    for (int i = 0; i < n; ++i) g.at(2 + i, 2 + i) = 1;
    return EtaForm{n, std::move(g)};
}

// Membership in the orthogonal algebra of the form: M^t G + G M = 0.
inline bool so_check(const Matrix<Rational>& m, const EtaForm& g) {
    if (m.rows() != m.cols() || m.rows() != g.gram.rows())
        throw std::invalid_argument("so_check: size mismatch");
    return (m.transpose() * g.gram + g.gram * m).all_equal(Rational(0));
}

}  // namespace liealg
