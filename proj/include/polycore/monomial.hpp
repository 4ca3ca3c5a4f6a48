#pragma once

// Monomials in the fixed variable set x^1..x^dim, stored as a dense
// exponent vector. Ordered graded-lexicographically so polynomial term
// maps have one canonical layout.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycore {

struct Monomial {
    std::vector<int> exps;  // exps[a-1] = exponent of x^a

    Monomial() = default;
    explicit Monomial(int dim) : exps(static_cast<size_t>(dim), 0) {
        if (dim < 0) throw std::invalid_argument("Monomial: negative dimension");
    }
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {
        for (int v : exps)
            if (v < 0) throw std::invalid_argument("Monomial: negative exponent");
    }

    int dim() const { return static_cast<int>(exps.size()); }

    int degree() const { return std::accumulate(exps.begin(), exps.end(), 0); }

    bool operator==(const Monomial& o) const { return exps == o.exps; }

    // Graded lex: lower total degree first, ties broken lexicographically.
    bool operator<(const Monomial& o) const {
        int da = degree(), db = o.degree();
        if (da != db) return da < db;
        return exps < o.exps;
    }
};

}  // namespace polycore
