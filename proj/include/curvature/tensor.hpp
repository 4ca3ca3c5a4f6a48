#pragma once

// Sparse polynomial curvature tensors. A CurvTensor of rank r holds the
// nonzero components of the r-th iterated covariant derivative of the
// curvature, keyed by [a, b, c, d, f1..fr] (1-based coordinate indices):
//   component^a_{b c d; f1; ...; fr},
// where the sign convention is
//   R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
//             + Gamma^a_{cf} Gamma^f_{db} - Gamma^a_{df} Gamma^f_{cb}
// (so R(e_c, e_d) e_b = R^a_{bcd} e_a) and each covariant derivative
// appends its direction as the LAST key slot: slot f_r is the outermost
// derivative.

#include "curvature/christoffel.hpp"

#include <map>
#include <vector>

namespace curvature {

struct CurvTensor {
    int dim = 0;
    int rank = 0;  // number of derivative slots
    std::map<std::vector<int>, Poly> entries;

    Poly value(const std::vector<int>& key) const {
        auto it = entries.find(key);
        return it == entries.end() ? Poly(dim) : it->second;
    }

    void add(const std::vector<int>& key, const Poly& p) {
        if (p.is_zero()) return;
        auto it = entries.find(key);
        if (it == entries.end()) {
            entries.emplace(key, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) entries.erase(it);
        }
    }
};

inline CurvTensor riemann(const ChristoffelField& gamma) {
    const int dim = gamma.dim();
    CurvTensor R;
    R.dim = dim;
    R.rank = 0;
    for (int c = 1; c <= dim; ++c)
        for (int d = c + 1; d <= dim; ++d)
            for (int a = 1; a <= dim; ++a)
                for (int b = 1; b <= dim; ++b) {
                    Poly val = polycore::partial(gamma.at(a, d, b), c);
                    val -= polycore::partial(gamma.at(a, c, b), d);
                    for (int f = 1; f <= dim; ++f) {
                        const Poly& acf = gamma.at(a, c, f);
                        const Poly& fdb = gamma.at(f, d, b);
                        if (!acf.is_zero() && !fdb.is_zero()) val += acf * fdb;
                        const Poly& adf = gamma.at(a, d, f);
                        const Poly& fcb = gamma.at(f, c, b);
                        if (!adf.is_zero() && !fcb.is_zero()) val -= adf * fcb;
                    }
                    if (val.is_zero()) continue;
                    R.add({a, b, c, d}, val);
                    R.add({a, b, d, c}, -val);
                }
    return R;
}

// One covariant derivative, scattering each input entry into the rank+1
// output: for the entry T^a_{b...} = P and derivative direction e,
//   d_e P lands on the same key,
//   Gamma^{a'}_{e a} P raises into first-slot a',
//   -Gamma^{l}_{e b'} P lowers each remaining slot l into b'.
inline CurvTensor nabla(const CurvTensor& t, const ChristoffelField& gamma) {
    const int dim = t.dim;
    CurvTensor out;
    out.dim = dim;
    out.rank = t.rank + 1;
    for (const auto& [key, p] : t.entries) {
        std::vector<int> nkey(key.size() + 1);
        std::copy(key.begin(), key.end(), nkey.begin());
        for (int e = 1; e <= dim; ++e) {
            nkey.back() = e;
            out.add(nkey, polycore::partial(p, e));
            for (const auto& [a, flat] : gamma.upper_at(e, key[0])) {
                std::vector<int> k2 = nkey;
                k2[0] = a;
                out.add(k2, gamma.entry(flat) * p);
            }
            for (size_t s = 1; s < key.size(); ++s) {
                for (const auto& [b, flat] : gamma.lower_at(e, key[s])) {
                    std::vector<int> k2 = nkey;
                    k2[s] = b;
                    out.add(k2, -(gamma.entry(flat) * p));
                }
            }
        }
    }
    return out;
}

}  // namespace curvature
