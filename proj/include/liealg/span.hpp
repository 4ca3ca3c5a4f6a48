#pragma once

// Linear spans of square matrices closed under commutator, with the
// canonical echelon basis that makes span equality decidable, and a
// sampling probe for invariant nondegenerate subspaces.

#include "liealg/eta.hpp"
#include "liealg/parabolic.hpp"
#include "liealg/rref.hpp"
#include "polycore/matrix.hpp"

#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace liealg {

struct AlgebraSpan {
    int ambient = 0;                         // matrices act on Q^ambient
    std::vector<Matrix<Rational>> generators;
    Matrix<Rational> echelonBasis;           // dim x ambient^2, reduced echelon rows
    bool bracketClosed = false;

    int dim() const { return echelonBasis.rows(); }
};

inline std::vector<Rational> flatten(const Matrix<Rational>& m) { return m.flat(); }

inline Matrix<Rational> unflatten(const std::vector<Rational>& v, int ambient) {
    if (static_cast<int>(v.size()) != ambient * ambient)
        throw std::invalid_argument("unflatten: size mismatch");
    return Matrix<Rational>(ambient, ambient, v);
}

// Smallest linear subspace containing the generators and closed under
// commutator. Terminates since the dimension is bounded by ambient^2.
inline AlgebraSpan span_lie_closure(const std::vector<Matrix<Rational>>& generators,
                                    const EtaForm* enforce_so = nullptr) {
    if (generators.empty()) throw std::invalid_argument("span_lie_closure: no generators");
    int ambient = generators.front().rows();
    for (const auto& g : generators) {
        if (g.rows() != ambient || g.cols() != ambient)
            throw std::invalid_argument("span_lie_closure: generator size mismatch");
        if (enforce_so && !so_check(g, *enforce_so))
            throw std::invalid_argument("span_lie_closure: generator fails so_check");
    }

    RowSpan span(ambient * ambient);
    std::vector<Matrix<Rational>> reps;  // independent representatives for bracketing
    std::deque<Matrix<Rational>> work(generators.begin(), generators.end());
    while (!work.empty()) {
        Matrix<Rational> m = std::move(work.front());
        work.pop_front();
        if (!span.insert(flatten(m))) continue;
        for (const auto& r : reps) work.push_back(polycore::commutator(r, m));
        reps.push_back(std::move(m));
    }
    return AlgebraSpan{ambient, generators, span.basis_matrix(), true};
}

inline bool equal_span(const AlgebraSpan& s1, const AlgebraSpan& s2) {
    if (s1.ambient != s2.ambient) throw std::invalid_argument("equal_span: ambient size mismatch");
    return s1.echelonBasis == s2.echelonBasis;
}

struct ProbeReport {
    bool plane_invariant = false;    // span{p_1,p_2} preserved by every basis element
    bool plane_isotropic = false;    // eta vanishes on the plane
    bool counterexample_found = false;
    std::vector<Rational> counterexample_vector;  // seed vector, when found
    int counterexample_dim = 0;
    int samples_checked = 0;
    std::string note;
};

// (a) certifies exactly that the coordinate plane of directions 1,2 is
// invariant and isotropic; (b) for each sample vector, grows the smallest
// invariant subspace containing it and looks for one that is proper and
// nondegenerate. Finding none is only evidence, not proof, hence the
// heuristic labeling in reports.
inline ProbeReport weak_irreducibility_probe(const AlgebraSpan& s, const EtaForm& g,
                                             const std::vector<std::vector<Rational>>& extra_samples = {}) {
    int d = s.ambient;
    if (g.gram.rows() != d) throw std::invalid_argument("weak_irreducibility_probe: size mismatch");
    ProbeReport rep;

    rep.plane_isotropic = g.gram.at(0, 0) == 0 && g.gram.at(0, 1) == 0 && g.gram.at(1, 0) == 0 &&
                          g.gram.at(1, 1) == 0;

    std::vector<Matrix<Rational>> basis;
    for (int r = 0; r < s.echelonBasis.rows(); ++r) {
        std::vector<Rational> row(static_cast<size_t>(d * d));
        for (int j = 0; j < d * d; ++j) row[static_cast<size_t>(j)] = s.echelonBasis.at(r, j);
        basis.push_back(unflatten(row, d));
    }

    rep.plane_invariant = true;
    for (const auto& m : basis)
        for (int col = 0; col < 2 && rep.plane_invariant; ++col)
            for (int row = 2; row < d; ++row)
                if (m.at(row, col) != 0) {
                    rep.plane_invariant = false;
                    break;
                }

    std::vector<std::vector<Rational>> samples;
    for (int i = 0; i < d; ++i) {
        std::vector<Rational> e(static_cast<size_t>(d), Rational(0));
        e[static_cast<size_t>(i)] = 1;
        samples.push_back(std::move(e));
    }
    samples.insert(samples.end(), extra_samples.begin(), extra_samples.end());

    auto apply = [&](const Matrix<Rational>& m, const std::vector<Rational>& v) {
        std::vector<Rational> out(static_cast<size_t>(d), Rational(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out[static_cast<size_t>(i)] += m.at(i, j) * v[static_cast<size_t>(j)];
        return out;
    };

    for (const auto& v : samples) {
        ++rep.samples_checked;
        RowSpan w(d);
        if (!w.insert(v)) continue;  // zero sample
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<Rational>> current = w.rows();
            for (const auto& m : basis)
                for (const auto& x : current)
                    if (w.insert(apply(m, x))) grew = true;
        }
        int wd = w.dim();
        if (wd == 0 || wd == d) continue;  // not proper
        // nondegeneracy of eta restricted to the subspace
        Matrix<Rational> gramw(wd, wd, Rational(0));
        const auto& rows = w.rows();
        for (int i = 0; i < wd; ++i)
            for (int j = 0; j < wd; ++j) {
                Rational acc(0);
                for (int a = 0; a < d; ++a)
                    for (int b = 0; b < d; ++b)
                        acc += rows[static_cast<size_t>(i)][static_cast<size_t>(a)] *
                               g.gram.at(a, b) * rows[static_cast<size_t>(j)][static_cast<size_t>(b)];
                gramw.at(i, j) = acc;
            }
        if (rank(gramw) == wd) {
            rep.counterexample_found = true;
            rep.counterexample_vector = v;
            rep.counterexample_dim = wd;
            rep.note = "proper nondegenerate invariant subspace of dimension " + std::to_string(wd);
            return rep;
        }
    }
    rep.note = "no proper nondegenerate invariant subspace found among " +
               std::to_string(rep.samples_checked) + " samples (heuristic)";
    return rep;
}

}  // namespace liealg
