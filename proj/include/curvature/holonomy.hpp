#pragma once

// Origin-evaluated curvature operators and the holonomy algebra they span.
// For each derivative order r <= rMax and each direction tuple (c,d,f1..fr)
// with c < d, the operator matrix M[a][b] = R^a_{b,c,d;f1..fr}(0) acts as
// the endomorphism e_b -> M[a][b] e_a of R^{n+4}.
//
// Two enumeration modes: the pruned mode skips every tuple containing
// coordinate 1 or 2 (their operators vanish identically: no Christoffel
// symbol has a lower index 1 or 2 and no component depends on x^1, x^2,
// so the vanishing survives differentiation); the exhaustive mode walks
// all tuples and verifies that the skipped set really contributes nothing.

#include "curvature/tensor.hpp"
#include "liealg/span.hpp"
#include "walker/metric.hpp"

#include <map>
#include <vector>

namespace curvature {

enum class EnumMode { pruned, exhaustive };

struct HolonomyGenerators {
    int n = 0;
    int dim = 0;
    int rMax = 0;
    EnumMode mode = EnumMode::pruned;
    std::map<std::vector<int>, Matrix<Rational>> ops;  // tuple (c,d,f1..fr) -> nonzero operator
    size_t enumerated = 0;                             // tuples visited
    size_t zero_count = 0;                             // tuples whose operator vanished
    bool prune_sound = true;                           // exhaustive only: skipped set was all zero
    std::vector<std::vector<int>> violations;          // tuples breaking prune soundness, if any
};

namespace detail {

inline Matrix<Rational> origin_operator(const CurvTensor& t, const std::vector<int>& tuple) {
    const int dim = t.dim;
    Matrix<Rational> m(dim, dim, Rational(0));
    std::vector<int> key(tuple.size() + 2);
    std::copy(tuple.begin(), tuple.end(), key.begin() + 2);
    for (int a = 1; a <= dim; ++a) {
        key[0] = a;
        for (int b = 1; b <= dim; ++b) {
            key[1] = b;
            auto it = t.entries.find(key);
            if (it != t.entries.end()) m.at(a - 1, b - 1) = it->second.at_origin();
        }
    }
    return m;
}

inline bool touches_null_pair(const std::vector<int>& tuple) {
    for (int v : tuple)
        if (v == 1 || v == 2) return true;
    return false;
}

// all tuples (c,d,f1..fr), c < d, entries drawn from [lo..dim]
template <class Fn>
inline void for_each_tuple(int lo, int dim, int r, Fn&& fn) {
    std::vector<int> tuple(static_cast<size_t>(r) + 2);
    for (int c = lo; c <= dim; ++c)
        for (int d = c + 1; d <= dim; ++d) {
            tuple[0] = c;
            tuple[1] = d;
            if (r == 0) {
                fn(tuple);
                continue;
            }
            std::fill(tuple.begin() + 2, tuple.end(), lo);
            while (true) {
                fn(tuple);
                // advance the f-part as an odometer over [lo..dim]
                int pos = r + 1;
                while (pos >= 2) {
                    if (tuple[static_cast<size_t>(pos)] < dim) {
                        ++tuple[static_cast<size_t>(pos)];
                        break;
                    }
                    tuple[static_cast<size_t>(pos)] = lo;
                    --pos;
                }
                if (pos < 2) break;
            }
        }
}

}  // namespace detail

// tensors[r] must hold the r-th covariant derivative of the curvature,
// r = 0..rMax; n is the middle dimension (so dim = n + 4).
inline HolonomyGenerators enumerate_generators(const std::vector<CurvTensor>& tensors, int n,
                                               EnumMode mode) {
    if (tensors.empty()) throw std::invalid_argument("enumerate_generators: no tensors given");
    HolonomyGenerators out;
    out.n = n;
    out.dim = n + 4;
    out.rMax = static_cast<int>(tensors.size()) - 1;
    out.mode = mode;
    const int lo = mode == EnumMode::pruned ? 3 : 1;
    for (int r = 0; r <= out.rMax; ++r) {
        const CurvTensor& t = tensors[static_cast<size_t>(r)];
        detail::for_each_tuple(lo, out.dim, r, [&](const std::vector<int>& tuple) {
            ++out.enumerated;
            Matrix<Rational> m = detail::origin_operator(t, tuple);
            if (m.all_equal(Rational(0))) {
                ++out.zero_count;
                return;
            }
            if (mode == EnumMode::exhaustive && detail::touches_null_pair(tuple)) {
                out.prune_sound = false;
                out.violations.push_back(tuple);
            }
            out.ops.emplace(tuple, std::move(m));
        });
    }
    return out;
}

inline std::vector<CurvTensor> derivative_tower(const walker::MetricField& mf, int rMax) {
    ChristoffelField gamma = christoffel(mf);
    std::vector<CurvTensor> tensors;
    tensors.reserve(static_cast<size_t>(rMax) + 1);
    tensors.push_back(riemann(gamma));
    for (int r = 1; r <= rMax; ++r) tensors.push_back(nabla(tensors.back(), gamma));
    return tensors;
}

inline HolonomyGenerators holonomy_generators(const walker::HSpec& spec, int rMax,
                                              EnumMode mode = EnumMode::pruned) {
    if (rMax < 0) throw std::invalid_argument("holonomy_generators: rMax must be non-negative");
    walker::MetricField mf = walker::build_metric(spec);
    return enumerate_generators(derivative_tower(mf, rMax), spec.n, mode);
}

inline liealg::AlgebraSpan span_of(const HolonomyGenerators& gens) {
    std::vector<Matrix<Rational>> mats;
    mats.reserve(gens.ops.size());
    for (const auto& [tuple, m] : gens.ops) mats.push_back(m);
    liealg::EtaForm eta = liealg::gram_eta(gens.n);
    return liealg::span_lie_closure(mats, &eta);
}

// rMax defaults to N + 1: one order past the last basis element, enough to
// see every r! A_r generator plus the vanishing tail.
inline liealg::AlgebraSpan holonomy_algebra(const walker::HSpec& spec, int rMax = -1,
                                            EnumMode mode = EnumMode::pruned) {
    if (rMax < 0) rMax = spec.N() + 1;
    return span_of(holonomy_generators(spec, rMax, mode));
}

}  // namespace curvature
