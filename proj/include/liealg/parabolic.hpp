#pragma once

// The stabilizer of the isotropic plane span{p_1,p_2} inside so(2,n+2),
// parametrized by (B, A, X, Y, c) with block layout
//
//     [ B        -X^t over -Y^t   [0 -c; c 0] ]
//     [ 0         A               [X  Y]      ]
//     [ 0         0               -B^t        ]
//
// and the B = 0 subfamily determined by a subalgebra h in so(n),
// parametrized by (A in h, X, Y, c). Embedding, decomposition (which is
// also the membership test), the projection onto the so(n) block, and
// commutators.

#include "liealg/eta.hpp"
#include "polycore/matrix.hpp"
#include "polycore/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

struct ParabolicElement {
    Matrix<Rational> B;       // 2 x 2
    Matrix<Rational> A;       // n x n, skew
    std::vector<Rational> X;  // length n
    std::vector<Rational> Y;  // length n
    Rational c;
};

struct GhElement {
    Matrix<Rational> A;       // n x n, skew (a member of h at usage sites)
    std::vector<Rational> X;
    std::vector<Rational> Y;
    Rational c;
};

inline bool is_skew(const Matrix<Rational>& a) {
    if (a.rows() != a.cols()) return false;
    return (a + a.transpose()).all_equal(Rational(0));
}

inline Matrix<Rational> embed_parabolic(const ParabolicElement& e) {
    int n = e.A.rows();
    if (e.A.cols() != n || static_cast<int>(e.X.size()) != n || static_cast<int>(e.Y.size()) != n)
        throw std::invalid_argument("embed_parabolic: inconsistent sizes");
    if (e.B.rows() != 2 || e.B.cols() != 2)
        throw std::invalid_argument("embed_parabolic: B must be 2x2");
    if (!is_skew(e.A)) throw std::invalid_argument("embed_parabolic: A is not skew-symmetric");
    int d = n + 4;
    Matrix<Rational> m(d, d, Rational(0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            m.at(i, j) = e.B.at(i, j);
            m.at(n + 2 + i, n + 2 + j) = -e.B.at(j, i);
        }
    for (int i = 0; i < n; ++i) {
        m.at(0, 2 + i) = -e.X[static_cast<size_t>(i)];
        m.at(1, 2 + i) = -e.Y[static_cast<size_t>(i)];
        m.at(2 + i, n + 2) = e.X[static_cast<size_t>(i)];
        m.at(2 + i, n + 3) = e.Y[static_cast<size_t>(i)];
        for (int j = 0; j < n; ++j) m.at(2 + i, 2 + j) = e.A.at(i, j);
    }
    m.at(0, n + 3) = -e.c;
    m.at(1, n + 2) = e.c;
    return m;
}

inline Matrix<Rational> embed_gh(const GhElement& e) {
    return embed_parabolic(ParabolicElement{Matrix<Rational>(2, 2, Rational(0)), e.A, e.X, e.Y, e.c});
}

inline GhElement gh_element(Matrix<Rational> a, std::vector<Rational> x, std::vector<Rational> y,
                            Rational c) {
    return GhElement{std::move(a), std::move(x), std::move(y), std::move(c)};
}

// Exact membership test for the stabilizer pattern. Throws naming the
// first offending entry (1-based coordinates) when M does not match.
inline ParabolicElement decompose_parabolic(const Matrix<Rational>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("decompose_parabolic: not square");
    int d = m.rows();
    if (d < 4) throw std::invalid_argument("decompose_parabolic: matrix smaller than 4x4");
    int n = d - 4;
    auto fail = [](int i, int j, const std::string& why) {
        throw std::invalid_argument("not in stabilizer: entry (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ") " + why);
    };

    ParabolicElement e{Matrix<Rational>(2, 2, Rational(0)), Matrix<Rational>(n, n, Rational(0)),
                       std::vector<Rational>(static_cast<size_t>(n), Rational(0)),
                       std::vector<Rational>(static_cast<size_t>(n), Rational(0)), Rational(0)};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) e.B.at(i, j) = m.at(i, j);
    for (int i = 0; i < n; ++i) {
        e.X[static_cast<size_t>(i)] = m.at(2 + i, n + 2);
        e.Y[static_cast<size_t>(i)] = m.at(2 + i, n + 3);
        for (int j = 0; j < n; ++j) e.A.at(i, j) = m.at(2 + i, 2 + j);
    }
    e.c = m.at(1, n + 2);

    // dependent blocks must match the pattern exactly
    for (int i = 0; i < n; ++i) {
        if (m.at(0, 2 + i) != -e.X[static_cast<size_t>(i)])
            fail(0, 2 + i, "must equal -X^t");
        if (m.at(1, 2 + i) != -e.Y[static_cast<size_t>(i)])
            fail(1, 2 + i, "must equal -Y^t");
    }
    if (m.at(0, n + 2) != 0) fail(0, n + 2, "must vanish");
    if (m.at(0, n + 3) != -e.c) fail(0, n + 3, "must equal -c");
    if (m.at(1, n + 3) != 0) fail(1, n + 3, "must vanish");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < 2; ++j)
            if (m.at(2 + i, j) != 0) fail(2 + i, j, "must vanish");
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < n + 2; ++j)
            if (m.at(n + 2 + i, j) != 0) fail(n + 2 + i, j, "must vanish");
        for (int j = 0; j < 2; ++j)
            if (m.at(n + 2 + i, n + 2 + j) != -e.B.at(j, i))
                fail(n + 2 + i, n + 2 + j, "must equal -B^t");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (e.A.at(i, j) != -e.A.at(j, i))
                fail(2 + i, 2 + j, "middle block must be skew-symmetric");
    return e;
}

// Projection of a stabilizer matrix onto its so(n) block.
inline Matrix<Rational> pr_so_n(const Matrix<Rational>& m) {
    return decompose_parabolic(m).A;
}

inline Matrix<Rational> bracket(const Matrix<Rational>& a, const Matrix<Rational>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw std::invalid_argument("bracket: size mismatch");
    return polycore::commutator(a, b);
}

// Embedded basis of the B = 0 family over a basis of h: the h directions,
// the X and Y directions, and the c direction. Dimension N + 2n + 1.
inline std::vector<Matrix<Rational>> gh_basis(int n, const std::vector<Matrix<Rational>>& h_basis) {
    std::vector<Matrix<Rational>> out;
    Matrix<Rational> zero_a(n, n, Rational(0));
    std::vector<Rational> zero_v(static_cast<size_t>(n), Rational(0));
    for (const auto& a : h_basis) out.push_back(embed_gh(GhElement{a, zero_v, zero_v, Rational(0)}));
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> ei = zero_v;
        ei[static_cast<size_t>(i)] = 1;
        out.push_back(embed_gh(GhElement{zero_a, ei, zero_v, Rational(0)}));
    }
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> ei = zero_v;
        ei[static_cast<size_t>(i)] = 1;
        out.push_back(embed_gh(GhElement{zero_a, zero_v, ei, Rational(0)}));
    }
    out.push_back(embed_gh(GhElement{zero_a, zero_v, zero_v, Rational(1)}));
    return out;
}

}  // namespace liealg
