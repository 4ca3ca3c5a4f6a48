// Curvature tensor: support pattern, the structural value families, both
// antisymmetries, the first Bianchi identity, and frozen components plus
// all six origin operators for the one-rotation input.

#include "curvature/holonomy.hpp"
#include "curvature/tensor.hpp"
#include "liealg/parabolic.hpp"
#include "walker/metric.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using curvature::christoffel;
using curvature::CurvTensor;
using curvature::riemann;
using liealg::embed_gh;
using liealg::GhElement;
using polycore::Matrix;
using polycore::Poly;
using polycore::Rational;
using walker::build_metric;
using walker::fixture;
using walker::HSpec;
using walker::MetricField;

namespace {

Poly x(int dim, int a) { return Poly::variable(dim, a); }

bool is_mid(const HSpec& s, int v) { return v >= 3 && v <= s.n + 2; }

GhElement gh(int n, Matrix<Rational> a, std::vector<Rational> xv, std::vector<Rational> yv,
             Rational c) {
    return GhElement{std::move(a), std::move(xv), std::move(yv), std::move(c)};
}

void check_structure(const HSpec& s) {
    MetricField mf = build_metric(s);
    CurvTensor R = riemann(christoffel(mf));
    const int n = s.n, dim = n + 4, q1 = n + 3, q2 = n + 4;

    for (const auto& [key, val] : R.entries) {
        // rows q1, q2 vanish identically
        CHECK(key[0] != q1);
        CHECK(key[0] != q2);
        // no lower index touches the null directions 1, 2
        for (size_t pos = 1; pos < key.size(); ++pos)
            CHECK((key[pos] != 1 && key[pos] != 2));
        // middle-block support: both outer indices middle forces plane (q1, q2)
        if (is_mid(s, key[0]) && is_mid(s, key[1])) {
            CHECK(key[2] != key[3]);
            CHECK((key[2] == q1 || key[2] == q2));
            CHECK((key[3] == q1 || key[3] == q2));
        }
        // stored antisymmetry in the plane pair
        CHECK(R.value({key[0], key[1], key[3], key[2]}) == -val);
    }

    // rotation derivative family on the middle block
    for (int i = 3; i <= n + 2; ++i)
        for (int j = 3; j <= n + 2; ++j) {
            Poly rot(dim);
            for (int alpha = 1; alpha <= s.N(); ++alpha) {
                const Rational& c = s.basis[static_cast<size_t>(alpha - 1)].at(i - 3, j - 3);
                if (c == 0) continue;
                polycore::Monomial m(dim);
                m.exps[static_cast<size_t>(n + 2)] = alpha;
                rot += Poly::term(dim, c, m);
            }
            CHECK(R.value({i, j, q1, q2}) == polycore::partial(rot, q1));
            // row 1 columns: unit on the diagonal against q1
            CHECK(R.value({1, i, j, q1}) ==
                  (i == j ? Poly::constant(dim, Rational(1)) : Poly(dim)));
            // row 2 exact form against q2
            Poly expect = i == j ? Poly::constant(dim, Rational(1)) : Poly(dim);
            for (int l = 0; l < n; ++l)
                expect -= polycore::partial(mf.u[static_cast<size_t>(l)], i) *
                          polycore::partial(mf.u[static_cast<size_t>(l)], j);
            CHECK(R.value({2, i, j, q2}) == expect);
            // row 1 against the q2 outer pair: mirrored rotation derivative
            CHECK(R.value({1, q2, i, j}) == -polycore::partial(mf.u[static_cast<size_t>(j - 3)], i).partial(q1));
        }

    // first Bianchi identity, all index triples
    for (int a = 1; a <= dim; ++a)
        for (int b = 1; b <= dim; ++b)
            for (int c = b; c <= dim; ++c)
                for (int d = c; d <= dim; ++d) {
                    Poly cyc = R.value({a, b, c, d});
                    cyc += R.value({a, c, d, b});
                    cyc += R.value({a, d, b, c});
                    CHECK(cyc.is_zero());
                }

    // lowered antisymmetry in the first pair
    for (int b = 1; b <= dim; ++b)
        for (int c = 1; c <= dim; ++c)
            for (int d = c + 1; d <= dim; ++d)
                for (int a = b; a <= dim; ++a) {
                    Poly lab(dim), lba(dim);
                    for (int f = 1; f <= dim; ++f) {
                        if (!mf.g.at(a - 1, f - 1).is_zero())
                            lab += mf.g.at(a - 1, f - 1) * R.value({f, b, c, d});
                        if (!mf.g.at(b - 1, f - 1).is_zero())
                            lba += mf.g.at(b - 1, f - 1) * R.value({f, a, c, d});
                    }
                    CHECK(lab == -lba);
                }
}

}  // namespace

TEST_CASE("curvature structure on the main fixtures") {
    for (const char* name : {"F0", "F1", "F2", "F4"}) check_structure(fixture(name));
}

TEST_CASE("curvature structure on the abelian two-speed fixture") {
    check_structure(fixture("F3"));
}

TEST_CASE("frozen components for the one-rotation input") {
    CurvTensor R = riemann(christoffel(build_metric(fixture("F1"))));
    Poly x3 = x(6, 3), x4 = x(6, 4), x5 = x(6, 5);
    CHECK(R.value({3, 4, 5, 6}) == -Poly::constant(6, Rational(1)));
    CHECK(R.value({1, 3, 3, 5}) == Poly::constant(6, Rational(1)));
    CHECK(R.value({1, 6, 3, 4}) == -Poly::constant(6, Rational(1)));
    CHECK(R.value({2, 3, 3, 6}) == Poly::constant(6, Rational(1)) - x5 * x5);
    CHECK(R.value({2, 3, 4, 6}).is_zero());
    CHECK(R.value({1, 6, 5, 6}) == Rational(-3, 4) * (x3 * x3 + x4 * x4));
    CHECK(R.value({3, 5, 5, 6}) == -(x4 * x5));
    CHECK(R.value({1, 4, 5, 6}) == -(x3 * x5));
    CHECK(R.value({2, 4, 5, 6}) == Rational(-3, 2) * (x4 * x5));
}

TEST_CASE("origin operators for the one-rotation input") {
    CurvTensor R = riemann(christoffel(build_metric(fixture("F1"))));
    auto op = [&](int c, int d) { return curvature::detail::origin_operator(R, {c, d}); };
    Matrix<Rational> z2(2, 2, Rational(0));
    Matrix<Rational> J(2, 2, {Rational(0), Rational(-1), Rational(1), Rational(0)});
    auto v = [](Rational a, Rational b) { return std::vector<Rational>{std::move(a), std::move(b)}; };
    CHECK(op(3, 4) == embed_gh(gh(2, z2, v(0, 0), v(0, 0), Rational(1))));
    CHECK(op(3, 5) == embed_gh(gh(2, z2, v(-1, 0), v(0, Rational(-1, 2)), Rational(0))));
    CHECK(op(3, 6) == embed_gh(gh(2, z2, v(0, Rational(1, 2)), v(-1, 0), Rational(0))));
    CHECK(op(4, 5) == embed_gh(gh(2, z2, v(0, -1), v(Rational(1, 2), 0), Rational(0))));
    CHECK(op(4, 6) == embed_gh(gh(2, z2, v(Rational(-1, 2), 0), v(0, -1), Rational(0))));
    CHECK(op(5, 6) == embed_gh(gh(2, J, v(0, 0), v(0, 0), Rational(0))));
    // every origin operator obeys the flat-form skewness and the B = 0 pattern
    liealg::EtaForm eta = liealg::gram_eta(2);
    for (int c = 3; c <= 6; ++c)
        for (int d = c + 1; d <= 6; ++d) {
            CHECK(liealg::so_check(op(c, d), eta));
            liealg::ParabolicElement p = liealg::decompose_parabolic(op(c, d));
            CHECK(p.B.all_equal(Rational(0)));
        }
}

TEST_CASE("corruption shows up as a curvature defect") {
    CurvTensor R = riemann(christoffel(build_metric(fixture("F1"), true)));
    CHECK_FALSE(R.value({3, 4, 5, 6}) == -Poly::constant(6, Rational(1)));
}
