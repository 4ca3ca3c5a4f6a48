#pragma once

// Input datum: a linearly independent list A_1..A_N of skew n x n rational
// matrices spanning a subalgebra h of so(n). Built-in fixtures cover
// N = 0, one-dimensional h (both with equal and with distinct rotation
// speeds), a two-dimensional abelian h, and so(3). A seeded generator
// produces random one-dimensional h (always a subalgebra).

#include "liealg/parabolic.hpp"
#include "liealg/rref.hpp"
#include "polycore/matrix.hpp"
#include "polycore/rational.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace walker {

using liealg::RowSpan;
using polycore::Matrix;
using polycore::Rational;

struct HSpec {
    int n = 0;
    std::vector<Matrix<Rational>> basis;  // A_1..A_N in order; the order matters

    int N() const { return static_cast<int>(basis.size()); }
};

// Throws a descriptive input error unless every A_alpha is skew n x n and
// the list is linearly independent; optionally also checks that the span
// is closed under commutator (i.e. h really is a subalgebra).
inline void validate_hspec(const HSpec& spec, bool require_bracket_closed = true) {
    if (spec.n < 1) throw std::invalid_argument("HSpec: n must be positive");
    RowSpan span(spec.n * spec.n);
    for (size_t k = 0; k < spec.basis.size(); ++k) {
        const auto& a = spec.basis[k];
        if (a.rows() != spec.n || a.cols() != spec.n)
            throw std::invalid_argument("HSpec: generator " + std::to_string(k + 1) + " is not " +
                                        std::to_string(spec.n) + "x" + std::to_string(spec.n));
        for (int i = 0; i < spec.n; ++i)
            for (int j = 0; j < spec.n; ++j)
                if (a.at(i, j) != -a.at(j, i))
                    throw std::invalid_argument("HSpec: generator " + std::to_string(k + 1) +
                                                " is not skew-symmetric at entry (" +
                                                std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        if (!span.insert(a.flat()))
            throw std::invalid_argument("HSpec: generator " + std::to_string(k + 1) +
                                        " depends linearly on earlier generators");
    }
    if (require_bracket_closed) {
        for (size_t i = 0; i < spec.basis.size(); ++i)
            for (size_t j = i + 1; j < spec.basis.size(); ++j)
                if (!span.contains(polycore::commutator(spec.basis[i], spec.basis[j]).flat()))
                    throw std::invalid_argument("HSpec: bracket of generators " + std::to_string(i + 1) +
                                                " and " + std::to_string(j + 1) +
                                                " leaves the span; h is not a subalgebra");
    }
}

inline Matrix<Rational> rational_matrix(int rows, int cols, const std::vector<long>& entries) {
    std::vector<Rational> data;
    data.reserve(entries.size());
    for (long v : entries) data.emplace_back(v);
    return Matrix<Rational>(rows, cols, std::move(data));
}

// Built-in inputs used throughout the test and acceptance suites.
//   F0: n=2, h = 0
//   F1: n=2, h = so(2)
//   F2: n=4, h spanned by the block rotation diag(J, 2J); a known example
//       of an orthogonal part that is not a Riemannian holonomy algebra
//   F3: n=4, h = so(2)+so(2), abelian, N=2
//   F4: n=3, h = so(3), the standard basis
inline HSpec fixture(const std::string& name) {
    if (name == "F0") return HSpec{2, {}};
    if (name == "F1") return HSpec{2, {rational_matrix(2, 2, {0, -1, 1, 0})}};
    if (name == "F2")
        return HSpec{4, {rational_matrix(4, 4, {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -2, 0, 0, 2, 0})}};
    if (name == "F3")
        return HSpec{4,
                     {rational_matrix(4, 4, {0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                      rational_matrix(4, 4, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0})}};
    if (name == "F4")
        return HSpec{3,
                     {rational_matrix(3, 3, {0, 0, 0, 0, 0, -1, 0, 1, 0}),
                      rational_matrix(3, 3, {0, 0, 1, 0, 0, 0, -1, 0, 0}),
                      rational_matrix(3, 3, {0, -1, 0, 1, 0, 0, 0, 0, 0})}};
    throw std::invalid_argument("fixture: unknown name \"" + name + "\" (expected F0..F4)");
}

// Seeded random one-dimensional h: n = 2 + ((seed-1) mod 5), entries drawn
// from the raw mt19937 stream (not a distribution) so results are identical
// on every platform.
inline HSpec random_h(unsigned seed) {
    int n = 2 + static_cast<int>((seed == 0 ? 0 : seed - 1) % 5);
    std::mt19937 gen(seed);
    Matrix<Rational> a(n, n, Rational(0));
    bool nonzero = false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long num = static_cast<long>(gen() % 9) - 4;
            long den = static_cast<long>(gen() % 3) + 1;
            Rational v(num, den);
            v.canonicalize();
            a.at(i, j) = v;
            a.at(j, i) = -v;
            if (v != 0) nonzero = true;
        }
    if (!nonzero) {
        a.at(0, 1) = 1;
        a.at(1, 0) = -1;
    }
    return HSpec{n, {a}};
}

}  // namespace walker
