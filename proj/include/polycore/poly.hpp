#pragma once

// Exact multivariate polynomials over Rational in the fixed variable set
// x^1..x^dim. The term map never stores zero coefficients, so two equal
// polynomials have identical representations and operator== is exact.

#include "polycore/monomial.hpp"
#include "polycore/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polycore {

class Poly {
public:
    explicit Poly(int dim) : dim_(dim) {
        if (dim < 0) throw std::invalid_argument("Poly: negative dimension");
    }

    static Poly constant(int dim, const Rational& c) {
        Poly p(dim);
        if (c != 0) p.terms_.emplace(Monomial(dim), c);
        return p;
    }

    // x^a for 1-based variable index a.
    static Poly variable(int dim, int a) {
        Poly p(dim);
        Monomial m(dim);
        p.check_var(a);
        m.exps[static_cast<size_t>(a - 1)] = 1;
        p.terms_.emplace(std::move(m), Rational(1));
        return p;
    }

    static Poly term(int dim, const Rational& c, const Monomial& m) {
        if (m.dim() != dim) throw std::invalid_argument("Poly::term: monomial dimension mismatch");
        Poly p(dim);
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Constant term, i.e. the value at the origin.
    Rational at_origin() const { return coeff(Monomial(dim_)); }

    bool operator==(const Poly& o) const { return dim_ == o.dim_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly& operator+=(const Poly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_dim(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    Poly operator+(const Poly& o) const { Poly r = *this; r += o; return r; }
    Poly operator-(const Poly& o) const { Poly r = *this; r -= o; return r; }
    Poly operator-() const {
        Poly r(dim_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_dim(o);
        Poly r(dim_);
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : o.terms_) {
                Monomial m(dim_);
                for (int i = 0; i < dim_; ++i)
                    m.exps[static_cast<size_t>(i)] =
                        ma.exps[static_cast<size_t>(i)] + mb.exps[static_cast<size_t>(i)];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    Poly operator*(const Rational& s) const {
        Poly r(dim_);
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    Poly& operator*=(const Rational& s) { *this = *this * s; return *this; }

    // Formal partial derivative with respect to x^v (1-based).
    Poly partial(int v) const {
        check_var(v);
        Poly r(dim_);
        size_t idx = static_cast<size_t>(v - 1);
        for (const auto& [m, c] : terms_) {
            int e = m.exps[idx];
            if (e == 0) continue;
            Monomial down = m;
            down.exps[idx] = e - 1;
            r.add_term(down, c * e);
        }
        return r;
    }

    // Exact substitution of a full point.
    Rational eval(const std::vector<Rational>& pt) const {
        if (static_cast<int>(pt.size()) != dim_)
            throw std::invalid_argument("Poly::eval: point has wrong length");
        Rational acc(0);
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (int i = 0; i < dim_; ++i) {
                int e = m.exps[static_cast<size_t>(i)];
                if (e > 0) t *= rational_pow(pt[static_cast<size_t>(i)], static_cast<unsigned long>(e));
            }
            acc += t;
        }
        return acc;
    }

    double eval_double(const std::vector<double>& pt) const {
        if (static_cast<int>(pt.size()) != dim_)
            throw std::invalid_argument("Poly::eval_double: point has wrong length");
        double acc = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = c.get_d();
            for (int i = 0; i < dim_; ++i)
                for (int e = 0; e < m.exps[static_cast<size_t>(i)]; ++e) t *= pt[static_cast<size_t>(i)];
            acc += t;
        }
        return acc;
    }

    // Terms in descending graded-lex order: "c * x3^1 x5^2 + c".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out << " + ";
            first = false;
            out << rational_to_string(it->second);
            bool any = false;
            for (int i = 0; i < dim_; ++i)
                if (it->first.exps[static_cast<size_t>(i)] > 0) {
                    out << (any ? " " : " * ") << "x" << (i + 1) << "^"
                        << it->first.exps[static_cast<size_t>(i)];
                    any = true;
                }
        }
        return out.str();
    }

    // Inverse of str(); accepts any term order.
    static Poly parse(const std::string& s, int dim) {
        Poly r(dim);
        if (s == "0") return r;
        size_t pos = 0;
        while (pos < s.size()) {
            size_t next = s.find(" + ", pos);
            std::string piece = s.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next == std::string::npos ? s.size() : next + 3;
            size_t star = piece.find(" * ");
            Rational c = rational_from_string(piece.substr(0, star));
            Monomial m(dim);
            if (star != std::string::npos) {
                std::istringstream fac(piece.substr(star + 3));
                std::string tok;
                while (fac >> tok) {
                    size_t caret = tok.find('^');
                    if (tok.empty() || tok[0] != 'x' || caret == std::string::npos)
                        throw std::invalid_argument("Poly::parse: bad factor \"" + tok + "\"");
                    int var = std::stoi(tok.substr(1, caret - 1));
                    int e = std::stoi(tok.substr(caret + 1));
                    if (var < 1 || var > dim || e < 0)
                        throw std::invalid_argument("Poly::parse: factor out of range \"" + tok + "\"");
                    m.exps[static_cast<size_t>(var - 1)] += e;
                }
            }
            r.add_term(m, c);
        }
        return r;
    }

private:
    void check_dim(const Poly& o) const {
        if (dim_ != o.dim_)
            throw std::invalid_argument("Poly: ambient dimension mismatch (" +
                                        std::to_string(dim_) + " vs " + std::to_string(o.dim_) + ")");
    }
    void check_var(int v) const {
        if (v < 1 || v > dim_)
            throw std::invalid_argument("Poly: variable index " + std::to_string(v) +
                                        " out of range 1.." + std::to_string(dim_));
    }
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    int dim_;
    std::map<Monomial, Rational> terms_;
};

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

enum class ArithOp { add, sub, mul };

inline Poly arith(const Poly& p, const Poly& q, ArithOp op) {
    switch (op) {
        case ArithOp::add: return p + q;
        case ArithOp::sub: return p - q;
        case ArithOp::mul: return p * q;
    }
    throw std::logic_error("arith: bad op");
}

inline Poly partial(const Poly& p, int v) { return p.partial(v); }
inline Rational eval(const Poly& p, const std::vector<Rational>& pt) { return p.eval(pt); }

}  // namespace polycore
