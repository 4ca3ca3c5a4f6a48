// Flat form, stabilizer parametrization, embedding/decomposition round
// trips, the bracket in parameter form, span closure, and the invariant
// subspace probe.

#include "liealg/eta.hpp"
#include "liealg/parabolic.hpp"
#include "liealg/rref.hpp"
#include "liealg/span.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using liealg::AlgebraSpan;
using liealg::embed_gh;
using liealg::embed_parabolic;
using liealg::EtaForm;
using liealg::GhElement;
using liealg::gram_eta;
using liealg::ParabolicElement;
using liealg::so_check;
using polycore::Matrix;
using polycore::Rational;

namespace {

Matrix<Rational> J2() { return Matrix<Rational>(2, 2, {Rational(0), Rational(-1), Rational(1), Rational(0)}); }

std::vector<Rational> vec(std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

GhElement random_gh(std::mt19937& gen, int n) {
    Matrix<Rational> a(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rational c(static_cast<long>(gen() % 7) - 3, static_cast<long>(gen() % 3) + 1);
            c.canonicalize();
            a.at(i, j) = c;
            a.at(j, i) = -c;
        }
    auto rv = [&] {
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i) v.emplace_back(static_cast<long>(gen() % 7) - 3);
        return v;
    };
    return GhElement{a, rv(), rv(), Rational(static_cast<long>(gen() % 7) - 3)};
}

}  // namespace

TEST_CASE("Gram matrix of the flat form") {
    EtaForm g1 = gram_eta(1);
    REQUIRE(g1.gram.rows() == 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            bool one = (i == 0 && j == 3) || (i == 1 && j == 4) || (i == 2 && j == 2) ||
                       (i == 3 && j == 0) || (i == 4 && j == 1);
            CHECK(g1.gram.at(i, j) == (one ? 1 : 0));
        }
    EtaForm g3 = gram_eta(3);
    CHECK(g3.gram * g3.gram == Matrix<Rational>::identity(7, Rational(1), Rational(0)));
    CHECK(g3.gram.transpose() == g3.gram);
    CHECK_THROWS_AS(gram_eta(-1), std::invalid_argument);
    CHECK_THROWS_AS(gram_eta(0), std::invalid_argument);
    CHECK(gram_eta(0, true).gram.rows() == 4);
}

TEST_CASE("orthogonal algebra membership") {
    EtaForm g = gram_eta(2);
    CHECK(so_check(Matrix<Rational>(6, 6, Rational(0)), g));
    CHECK_FALSE(so_check(Matrix<Rational>::identity(6, Rational(1), Rational(0)), g));
    std::mt19937 gen(99);
    for (int it = 0; it < 20; ++it)
        CHECK(so_check(embed_gh(random_gh(gen, 2)), g));
    CHECK_THROWS_AS(so_check(Matrix<Rational>(5, 5, Rational(0)), g), std::invalid_argument);
}

TEST_CASE("embedding layout matches the parameter rows") {
    // pure-c element: only entries are M[1][6] = -c and M[2][5] = c
    Matrix<Rational> zero2(2, 2, Rational(0));
    GhElement ce{zero2, vec({0, 0}), vec({0, 0}), Rational(1)};
    Matrix<Rational> m = embed_gh(ce);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Rational want(0);
            if (i == 0 && j == 5) want = -1;
            if (i == 1 && j == 4) want = 1;
            CHECK(m.at(i, j) == want);
        }

    // full element, every block populated
    GhElement e{J2(), vec({1, 2}), vec({3, 4}), Rational(5)};
    Matrix<Rational> w(6, 6, Rational(0));
    w.at(0, 2) = -1; w.at(0, 3) = -2; w.at(0, 5) = -5;   // row 1: (0,0,-X^t,0,-c)
    w.at(1, 2) = -3; w.at(1, 3) = -4; w.at(1, 4) = 5;    // row 2: (0,0,-Y^t,c,0)
    w.at(2, 3) = -1; w.at(3, 2) = 1;                     // middle block A
    w.at(2, 4) = 1; w.at(3, 4) = 2;                      // column n+3: X
    w.at(2, 5) = 3; w.at(3, 5) = 4;                      // column n+4: Y
    CHECK(embed_gh(e) == w);
}

TEST_CASE("stabilizer decomposition round-trips and rejects outsiders") {
    std::mt19937 gen(4321);
    EtaForm g = gram_eta(3);
    for (int it = 0; it < 20; ++it) {
        GhElement e = random_gh(gen, 3);
        Matrix<Rational> b(2, 2, Rational(0));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) b.at(i, j) = Rational(static_cast<long>(gen() % 5) - 2);
        ParabolicElement p{b, e.A, e.X, e.Y, e.c};
        Matrix<Rational> m = embed_parabolic(p);
        CHECK(so_check(m, g));
        ParabolicElement back = liealg::decompose_parabolic(m);
        CHECK(back.B == p.B);
        CHECK(back.A == p.A);
        CHECK(back.X == p.X);
        CHECK(back.Y == p.Y);
        CHECK(back.c == p.c);
        CHECK(liealg::pr_so_n(m) == e.A);
    }
    // a matrix moving p_1 out of the plane is not in the stabilizer
    Matrix<Rational> bad(7, 7, Rational(0));
    bad.at(4, 0) = 1;
    CHECK_THROWS_WITH(liealg::decompose_parabolic(bad),
                      Catch::Matchers::ContainsSubstring("not in stabilizer"));
}

TEST_CASE("bracket of embedded elements follows the parameter formula") {
    std::mt19937 gen(5150);
    for (int it = 0; it < 25; ++it) {
        GhElement e1 = random_gh(gen, 3), e2 = random_gh(gen, 3);
        Matrix<Rational> lhs = liealg::bracket(embed_gh(e1), embed_gh(e2));
        // [ (A,X,Y,c), (A',X',Y',c') ] = ([A,A'], AX'-A'X, AY'-A'Y, X.Y'-X'.Y)
        auto apply = [](const Matrix<Rational>& a, const std::vector<Rational>& v) {
            std::vector<Rational> out(v.size(), Rational(0));
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) out[static_cast<size_t>(i)] += a.at(i, j) * v[static_cast<size_t>(j)];
            return out;
        };
        auto sub = [](std::vector<Rational> a, const std::vector<Rational>& b) {
            for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
            return a;
        };
        Rational c(0);
        for (size_t i = 0; i < e1.X.size(); ++i) c += e1.X[i] * e2.Y[i] - e2.X[i] * e1.Y[i];
        GhElement br{polycore::commutator(e1.A, e2.A), sub(apply(e1.A, e2.X), apply(e2.A, e1.X)),
                     sub(apply(e1.A, e2.Y), apply(e2.A, e1.Y)), c};
        CHECK(lhs == embed_gh(br));
    }
}

TEST_CASE("span closure over brackets") {
    int n = 2;
    Matrix<Rational> za(n, n, Rational(0));
    GhElement xe{za, vec({1, 0}), vec({0, 0}), Rational(0)};
    GhElement ye{za, vec({0, 0}), vec({1, 0}), Rational(0)};
    EtaForm g = gram_eta(n);
    AlgebraSpan s = liealg::span_lie_closure({embed_gh(xe), embed_gh(ye)}, &g);
    CHECK(s.bracketClosed);
    CHECK(s.dim() == 3);  // the bracket creates the c direction

    // the full parameter space for h = so(2): N + 2n + 1 = 6
    AlgebraSpan full = liealg::span_lie_closure(liealg::gh_basis(n, {J2()}), &g);
    CHECK(full.dim() == 6);

    // presentation invariance: scaled and reordered generators span the same space
    AlgebraSpan v1 = liealg::span_lie_closure({embed_gh(xe), embed_gh(ye).scaled(Rational(7, 3))});
    AlgebraSpan v2 = liealg::span_lie_closure({embed_gh(ye), embed_gh(xe).scaled(Rational(-2))});
    CHECK(liealg::equal_span(v1, v2));
    CHECK(liealg::equal_span(v1, s));
    CHECK_FALSE(liealg::equal_span(s, full));
    CHECK_THROWS_AS(liealg::span_lie_closure({}), std::invalid_argument);
}

TEST_CASE("row span basis is canonical") {
    liealg::RowSpan rs(3);
    CHECK(rs.insert(vec({0, 2, 4})));
    CHECK(rs.insert(vec({1, 1, 1})));
    CHECK_FALSE(rs.insert(vec({2, 4, 6})));  // dependent on the first two
    CHECK(rs.contains(vec({3, 1, -1})));
    CHECK_FALSE(rs.contains(vec({0, 0, 1})));
    // reduced echelon: pivots 1, identity on pivot columns, sorted
    Matrix<Rational> b = rs.basis_matrix();
    CHECK(b == Matrix<Rational>(2, 3, {Rational(1), Rational(0), Rational(-1),
                                       Rational(0), Rational(1), Rational(2)}));
    CHECK(liealg::rank(b) == 2);
}

TEST_CASE("invariant subspace probe") {
    int n = 2;
    EtaForm g = gram_eta(n);
    // rotations alone leave the nondegenerate middle plane invariant
    AlgebraSpan rot = liealg::span_lie_closure({embed_gh(GhElement{J2(), vec({0, 0}), vec({0, 0}), Rational(0)})});
    liealg::ProbeReport bad = liealg::weak_irreducibility_probe(rot, g);
    CHECK(bad.counterexample_found);
    CHECK(bad.counterexample_dim == 2);

    // the full parameter algebra: isotropic invariant plane, no nondegenerate one
    AlgebraSpan full = liealg::span_lie_closure(liealg::gh_basis(n, {J2()}), &g);
    liealg::ProbeReport rep = liealg::weak_irreducibility_probe(full, g);
    CHECK(rep.plane_invariant);
    CHECK(rep.plane_isotropic);
    CHECK_FALSE(rep.counterexample_found);
    CHECK(rep.samples_checked >= 6);
}
