#pragma once

// The check catalog. A Verification owns one fully built pipeline (metric,
// Christoffel symbols, derivative tower, origin operators, spans) and runs
// named checks against it. Every check is exact except the oracle family,
// which compares against floating-point recomputations, and weakirr.probe,
// which is a sampling heuristic and reports heuristic-pass.

#include "curvature/holonomy.hpp"
#include "liealg/span.hpp"
#include "oracle/fd.hpp"
#include "oracle/transport.hpp"
#include "verifier/config.hpp"
#include "walker/metric.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace verifier {

using curvature::CurvTensor;
using polycore::Poly;

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", or "heuristic-pass"
    std::string detail;  // one-sentence statement of what was verified
    std::string witness; // first counterexample, empty on success
};

namespace detail {

inline CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), "pass", std::move(detail), ""};
}

inline CheckResult heuristic(std::string name, std::string detail) {
    return {std::move(name), "heuristic-pass", std::move(detail), ""};
}

inline CheckResult fail(std::string name, std::string detail, std::string witness) {
    return {std::move(name), "fail", std::move(detail), std::move(witness)};
}

inline std::string key_str(const std::vector<int>& key) {
    std::string s = "(";
    for (size_t i = 0; i < key.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key[i]);
    }
    return s + ")";
}

inline std::string num_str(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

inline Rational factorial(int r) {
    Rational f(1);
    for (int k = 2; k <= r; ++k) f *= k;
    return f;
}

inline long binomial(int m, int k) {
    if (k < 0 || k > m) return 0;
    long b = 1;
    for (int i = 1; i <= k; ++i) b = b * (m - k + i) / i;
    return b;
}

}  // namespace detail

class Verification {
  public:
    explicit Verification(const RunConfig& cfg)
        : cfg_(cfg),
          spec_(resolve_spec(cfg)),
          n_(spec_.n),
          dim_(spec_.n + 4),
          q1_(spec_.n + 3),
          q2_(spec_.n + 4),
          N_(spec_.N()),
          rMax_(cfg.max_order < 0 ? spec_.N() + 1 : cfg.max_order),
          eta_(liealg::gram_eta(spec_.n)),
          mf_(walker::build_metric(spec_, cfg.corrupt_u)),
          gamma_(curvature::christoffel(mf_)) {
        if (rMax_ < 0) throw std::invalid_argument("config: \"max_order\" must be at least 0");
        tower_.reserve(static_cast<size_t>(rMax_) + 1);
        tower_.push_back(curvature::riemann(gamma_));
        for (int r = 1; r <= rMax_; ++r) tower_.push_back(curvature::nabla(tower_.back(), gamma_));
        gens_ = curvature::enumerate_generators(tower_, n_, cfg_.mode);
        target_ = liealg::span_lie_closure(liealg::gh_basis(n_, spec_.basis), &eta_);
        if (gens_.ops.empty()) {
            hol_error_ = "no nonzero curvature operator up to order " + std::to_string(rMax_);
        } else {
            try {
                hol_ = curvature::span_of(gens_);
                hol_ok_ = true;
            } catch (const std::exception& e) {
                hol_error_ = e.what();
            }
        }
        if (hol_ok_) probe_ = liealg::weak_irreducibility_probe(hol_, eta_);
        abelian_ = true;
        for (size_t i = 0; i < spec_.basis.size() && abelian_; ++i)
            for (size_t j = i + 1; j < spec_.basis.size(); ++j)
                if (!liealg::bracket(spec_.basis[i], spec_.basis[j]).all_equal(Rational(0))) {
                    abelian_ = false;
                    break;
                }
    }

    const walker::HSpec& spec() const { return spec_; }
    const RunConfig& config() const { return cfg_; }
    int max_order() const { return rMax_; }
    const std::vector<CurvTensor>& tower() const { return tower_; }
    const curvature::HolonomyGenerators& generators() const { return gens_; }
    int holonomy_dim() const { return hol_ok_ ? hol_.dim() : -1; }
    int stabilizer_dim() const { return target_.dim(); }

    // full catalog in report order
    static const std::vector<std::string>& catalog() {
        static const std::vector<std::string> names = {
            "metric.eta-origin",
            "metric.det-constant",
            "metric.degree-bound",
            "metric.coeff-independence",
            "metric.inverse-identity",
            "christoffel.e11",
            "christoffel.e22",
            "christoffel.e21",
            "christoffel.e10",
            "christoffel.e20",
            "christoffel.e25",
            "christoffel.torsion-free",
            "christoffel.metric-compat",
            "nabla.metric-parallel",
            "curvature.e50",
            "curvature.e30",
            "curvature.e40",
            "curvature.e70",
            "curvature.e60.origin",
            "curvature.e60.exact-form",
            "curvature.e80.origin",
            "curvature.e80.exact-form",
            "curvature.antisymmetry",
            "curvature.first-bianchi",
            "lemma1.contraction",
            "lemma2.slots12",
            "lemma3.i",
            "lemma3.ii",
            "lemma3.iii",
            "e100.independence",
            "e200.support",
            "e110.partial",
            "e111.commutator",
            "e130.factorial",
            "e130.beyond-basis",
            "e140.bracket",
            "e140.display",
            "operators.so-membership",
            "operators.stabilizer-b0",
            "mode.prune-soundness",
            "holonomy.equality",
            "holonomy.permutation-invariance",
            "weakirr.isotropic-plane",
            "weakirr.probe",
            "oracle.christoffel",
            "oracle.riemann",
            "oracle.loop-transport",
            "oracle.convergence",
        };
        return names;
    }

    // empty string when the check applies to this run
    std::string inapplicable_reason(const std::string& name) const {
        if (name == "mode.prune-soundness" && cfg_.mode != curvature::EnumMode::exhaustive)
            return "requires exhaustive mode";
        if (name == "e130.factorial" && (N_ < 1 || rMax_ < 1))
            return "requires N >= 1 and max order >= 1";
        if (name == "e130.beyond-basis" && rMax_ < N_ + 1) return "requires max order >= N + 1";
        if (name == "e140.bracket" && rMax_ < 1) return "requires max order >= 1";
        if (name == "e140.display" && (N_ < 1 || rMax_ < 2))
            return "requires N >= 1 and max order >= 2";
        return "";
    }

    std::vector<std::string> applicable_checks() const {
        std::vector<std::string> out;
        for (const auto& name : catalog())
            if (inapplicable_reason(name).empty()) out.push_back(name);
        return out;
    }

    CheckResult run(const std::string& name) {
        for (const auto& [check_name, method] : table())
            if (check_name == name) {
                try {
                    return (this->*method)();
                } catch (const std::exception& e) {
                    return detail::fail(name, "check aborted by an exception", e.what());
                }
            }
        throw std::invalid_argument("unknown check \"" + name + "\"");
    }

  private:
    using Method = CheckResult (Verification::*)();

    static const std::vector<std::pair<std::string, Method>>& table() {
        static const std::vector<std::pair<std::string, Method>> t = {
            {"metric.eta-origin", &Verification::check_metric_eta_origin},
            {"metric.det-constant", &Verification::check_metric_det},
            {"metric.degree-bound", &Verification::check_metric_degree},
            {"metric.coeff-independence", &Verification::check_metric_independence},
            {"metric.inverse-identity", &Verification::check_metric_inverse},
            {"christoffel.e11", &Verification::check_christoffel_e11},
            {"christoffel.e22", &Verification::check_christoffel_e22},
            {"christoffel.e21", &Verification::check_christoffel_e21},
            {"christoffel.e10", &Verification::check_christoffel_e10},
            {"christoffel.e20", &Verification::check_christoffel_e20},
            {"christoffel.e25", &Verification::check_christoffel_e25},
            {"christoffel.torsion-free", &Verification::check_torsion_free},
            {"christoffel.metric-compat", &Verification::check_metric_compat},
            {"nabla.metric-parallel", &Verification::check_metric_parallel},
            {"curvature.e50", &Verification::check_curvature_e50},
            {"curvature.e30", &Verification::check_curvature_e30},
            {"curvature.e40", &Verification::check_curvature_e40},
            {"curvature.e70", &Verification::check_curvature_e70},
            {"curvature.e60.origin", &Verification::check_curvature_e60_origin},
            {"curvature.e60.exact-form", &Verification::check_curvature_e60_exact},
            {"curvature.e80.origin", &Verification::check_curvature_e80_origin},
            {"curvature.e80.exact-form", &Verification::check_curvature_e80_exact},
            {"curvature.antisymmetry", &Verification::check_antisymmetry},
            {"curvature.first-bianchi", &Verification::check_first_bianchi},
            {"lemma1.contraction", &Verification::check_lemma1},
            {"lemma2.slots12", &Verification::check_lemma2},
            {"lemma3.i", &Verification::check_lemma3_i},
            {"lemma3.ii", &Verification::check_lemma3_ii},
            {"lemma3.iii", &Verification::check_lemma3_iii},
            {"e100.independence", &Verification::check_e100},
            {"e200.support", &Verification::check_e200},
            {"e110.partial", &Verification::check_e110},
            {"e111.commutator", &Verification::check_e111},
            {"e130.factorial", &Verification::check_e130_factorial},
            {"e130.beyond-basis", &Verification::check_e130_beyond},
            {"e140.bracket", &Verification::check_e140_bracket},
            {"e140.display", &Verification::check_e140_display},
            {"operators.so-membership", &Verification::check_so_membership},
            {"operators.stabilizer-b0", &Verification::check_stabilizer_b0},
            {"mode.prune-soundness", &Verification::check_prune_soundness},
            {"holonomy.equality", &Verification::check_holonomy_equality},
            {"holonomy.permutation-invariance", &Verification::check_permutation},
            {"weakirr.isotropic-plane", &Verification::check_isotropic_plane},
            {"weakirr.probe", &Verification::check_probe},
            {"oracle.christoffel", &Verification::check_oracle_christoffel},
            {"oracle.riemann", &Verification::check_oracle_riemann},
            {"oracle.loop-transport", &Verification::check_oracle_transport},
            {"oracle.convergence", &Verification::check_oracle_convergence},
        };
        return t;
    }

    bool is_mid(int v) const { return v >= 3 && v <= n_ + 2; }

    // predicted Gamma^i_{j,n+4} for middle i, j: sum_a (A_a)_{ij} (x^{n+3})^a
    Poly rotation_poly(int i, int j) const {
        Poly p(dim_);
        for (int alpha = 1; alpha <= N_; ++alpha) {
            const Rational& c = spec_.basis[static_cast<size_t>(alpha - 1)].at(i - 3, j - 3);
            if (c == 0) continue;
            polycore::Monomial m(dim_);
            m.exps[static_cast<size_t>(q1_ - 1)] = alpha;
            p += Poly::term(dim_, c, m);
        }
        return p;
    }

    static std::string poly_witness(const std::string& what, const Poly& got, const Poly& want) {
        return what + " = " + got.str() + ", expected " + want.str();
    }

    Matrix<Rational> plane_op(const std::vector<int>& suffix) const {
        std::vector<int> tuple{q1_, q2_};
        tuple.insert(tuple.end(), suffix.begin(), suffix.end());
        return curvature::detail::origin_operator(tower_[suffix.size()], tuple);
    }

    Matrix<Rational> plane_pr(const std::vector<int>& suffix) const {
        return liealg::pr_so_n(plane_op(suffix));
    }

    static double to_double(const Rational& r) { return r.get_d(); }

    static bool close_rel(double got, double want, double rel) {
        return std::abs(got - want) <= rel * std::max(std::abs(want), 1.0);
    }

    CheckResult check_metric_eta_origin() {
        const std::string name = "metric.eta-origin";
        const std::string what =
            "g(0) is the flat pairing: ones at (1,n+3), (2,n+4) and mirrors, identity on the "
            "middle block";
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Rational got = mf_.g.at(i, j).at_origin();
                if (got != eta_.gram.at(i, j))
                    return detail::fail(name, what,
                                        "g_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "}(0) = " + polycore::rational_to_string(got) +
                                            ", expected " +
                                            polycore::rational_to_string(eta_.gram.at(i, j)));
            }
        return detail::pass(name, what);
    }

    CheckResult check_metric_det() {
        const std::string name = "metric.det-constant";
        const std::string what = "det g is the constant polynomial 1";
        Poly det = polycore::laplace_det(mf_.g, Poly(dim_));
        if (det != Poly::constant(dim_, 1))
            return detail::fail(name, what, "det g = " + det.str());
        return detail::pass(name, what);
    }

    CheckResult check_metric_degree() {
        const std::string name = "metric.degree-bound";
        const std::string what =
            "every entry of g has total degree at most max(N+1, 2): the u-coupling is bounded by "
            "N+1 and the squared-norm block by 2";
        int bound = std::max(N_ + 1, 2);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                if (mf_.g.at(i, j).degree() > bound)
                    return detail::fail(name, what,
                                        "g_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                            "} has degree " +
                                            std::to_string(mf_.g.at(i, j).degree()) + ": " +
                                            mf_.g.at(i, j).str());
        return detail::pass(name, what);
    }

    CheckResult check_metric_independence() {
        const std::string name = "metric.coeff-independence";
        const std::string what = "no entry of g depends on x^1, x^2, or x^{n+4}";
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int v : {1, 2, dim_})
                    if (!mf_.g.at(i, j).partial(v).is_zero())
                        return detail::fail(name, what,
                                            "g_{" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + "} depends on x^" +
                                                std::to_string(v) + ": " + mf_.g.at(i, j).str());
        return detail::pass(name, what);
    }

    CheckResult check_metric_inverse() {
        const std::string name = "metric.inverse-identity";
        const std::string what =
            "the closed-form block inverse multiplies back to the identity and evaluates to the "
            "flat pairing at the origin";
        Matrix<Poly> ginv;
        try {
            ginv = walker::invert_metric(mf_);
        } catch (const std::exception& e) {
            return detail::fail(name, what, e.what());
        }
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Poly prod(dim_);
                for (int f = 0; f < dim_; ++f) prod += mf_.g.at(i, f) * ginv.at(f, j);
                Poly want = Poly::constant(dim_, i == j ? 1 : 0);
                if (prod != want)
                    return detail::fail(name, what,
                                        poly_witness("(g g^{-1})_{" + std::to_string(i + 1) + "," +
                                                         std::to_string(j + 1) + "}",
                                                     prod, want));
                if (ginv.at(i, j).at_origin() != eta_.gram.at(i, j))
                    return detail::fail(
                        name, what,
                        "g^{-1}_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            "}(0) = " + polycore::rational_to_string(ginv.at(i, j).at_origin()));
            }
        return detail::pass(name, what);
    }

    CheckResult check_christoffel_e11() {
        const std::string name = "christoffel.e11";
        const std::string what = "Gamma^i_{jk} = 0 for middle indices i, j, k";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j)
                for (int k = 3; k <= n_ + 2; ++k)
                    if (!gamma_.at(i, j, k).is_zero())
                        return detail::fail(name, what,
                                            poly_witness("Gamma^" + std::to_string(i) + "_{" +
                                                             std::to_string(j) + "," +
                                                             std::to_string(k) + "}",
                                                         gamma_.at(i, j, k), Poly(dim_)));
        return detail::pass(name, what);
    }

    CheckResult check_christoffel_e22() {
        const std::string name = "christoffel.e22";
        const std::string what = "Gamma^i_{j,n+3} = 0 for middle i, j";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j)
                if (!gamma_.at(i, j, q1_).is_zero())
                    return detail::fail(name, what,
                                        poly_witness("Gamma^" + std::to_string(i) + "_{" +
                                                         std::to_string(j) + "," +
                                                         std::to_string(q1_) + "}",
                                                     gamma_.at(i, j, q1_), Poly(dim_)));
        return detail::pass(name, what);
    }

    CheckResult check_christoffel_e21() {
        const std::string name = "christoffel.e21";
        const std::string what =
            "Gamma^i_{j,n+4} equals the rotation polynomial sum_a (A_a)_{ij} (x^{n+3})^a";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Poly want = rotation_poly(i, j);
                if (gamma_.at(i, j, q2_) != want)
                    return detail::fail(name, what,
                                        poly_witness("Gamma^" + std::to_string(i) + "_{" +
                                                         std::to_string(j) + "," +
                                                         std::to_string(q2_) + "}",
                                                     gamma_.at(i, j, q2_), want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_christoffel_e10() {
        const std::string name = "christoffel.e10";
        const std::string what = "Gamma^{n+3}_{bc} = Gamma^{n+4}_{bc} = 0 for all b, c";
        for (int a : {q1_, q2_})
            for (int b = 1; b <= dim_; ++b)
                for (int c = 1; c <= dim_; ++c)
                    if (!gamma_.at(a, b, c).is_zero())
                        return detail::fail(name, what,
                                            poly_witness("Gamma^" + std::to_string(a) + "_{" +
                                                             std::to_string(b) + "," +
                                                             std::to_string(c) + "}",
                                                         gamma_.at(a, b, c), Poly(dim_)));
        return detail::pass(name, what);
    }

    CheckResult check_christoffel_e20() {
        const std::string name = "christoffel.e20";
        const std::string what = "Gamma^a_{bc} = 0 whenever a lower index is 1 or 2";
        for (int a = 1; a <= dim_; ++a)
            for (int b = 1; b <= dim_; ++b)
                for (int low : {1, 2}) {
                    if (!gamma_.at(a, low, b).is_zero())
                        return detail::fail(name, what,
                                            poly_witness("Gamma^" + std::to_string(a) + "_{" +
                                                             std::to_string(low) + "," +
                                                             std::to_string(b) + "}",
                                                         gamma_.at(a, low, b), Poly(dim_)));
                    if (!gamma_.at(a, b, low).is_zero())
                        return detail::fail(name, what,
                                            poly_witness("Gamma^" + std::to_string(a) + "_{" +
                                                             std::to_string(b) + "," +
                                                             std::to_string(low) + "}",
                                                         gamma_.at(a, b, low), Poly(dim_)));
                }
        return detail::pass(name, what);
    }

    CheckResult check_christoffel_e25() {
        const std::string name = "christoffel.e25";
        const std::string what = "Gamma^i_{n+3,n+3} = Gamma^i_{n+4,n+4} = -x^i for middle i";
        for (int i = 3; i <= n_ + 2; ++i) {
            Poly want = -Poly::variable(dim_, i);
            for (int q : {q1_, q2_})
                if (gamma_.at(i, q, q) != want)
                    return detail::fail(name, what,
                                        poly_witness("Gamma^" + std::to_string(i) + "_{" +
                                                         std::to_string(q) + "," +
                                                         std::to_string(q) + "}",
                                                     gamma_.at(i, q, q), want));
        }
        return detail::pass(name, what);
    }

    CheckResult check_torsion_free() {
        const std::string name = "christoffel.torsion-free";
        const std::string what = "Gamma^a_{bc} = Gamma^a_{cb} for all indices";
        for (int a = 1; a <= dim_; ++a)
            for (int b = 1; b <= dim_; ++b)
                for (int c = b + 1; c <= dim_; ++c)
                    if (gamma_.at(a, b, c) != gamma_.at(a, c, b))
                        return detail::fail(name, what,
                                            poly_witness("Gamma^" + std::to_string(a) + "_{" +
                                                             std::to_string(b) + "," +
                                                             std::to_string(c) + "}",
                                                         gamma_.at(a, b, c), gamma_.at(a, c, b)));
        return detail::pass(name, what);
    }

    // shared by christoffel.metric-compat and nabla.metric-parallel: the
    // covariant derivative of the metric, which both formulations equate
    // to zero
    std::string metric_compat_witness() const {
        for (int c = 1; c <= dim_; ++c)
            for (int a = 1; a <= dim_; ++a)
                for (int b = a; b <= dim_; ++b) {
                    Poly nab = mf_.g.at(a - 1, b - 1).partial(c);
                    for (int f = 1; f <= dim_; ++f) {
                        const Poly& gfa = gamma_.at(f, c, a);
                        if (!gfa.is_zero()) nab -= gfa * mf_.g.at(f - 1, b - 1);
                        const Poly& gfb = gamma_.at(f, c, b);
                        if (!gfb.is_zero()) nab -= gfb * mf_.g.at(a - 1, f - 1);
                    }
                    if (!nab.is_zero())
                        return "nabla_" + std::to_string(c) + " g_{" + std::to_string(a) + "," +
                               std::to_string(b) + "} = " + nab.str();
                }
        return "";
    }

    CheckResult check_metric_compat() {
        const std::string name = "christoffel.metric-compat";
        const std::string what =
            "d_c g_{ab} = g_{fb} Gamma^f_{ca} + g_{af} Gamma^f_{cb} for all indices";
        std::string w = metric_compat_witness();
        if (!w.empty()) return detail::fail(name, what, w);
        return detail::pass(name, what);
    }

    CheckResult check_metric_parallel() {
        const std::string name = "nabla.metric-parallel";
        const std::string what = "the covariant derivative of g vanishes identically";
        std::string w = metric_compat_witness();
        if (!w.empty()) return detail::fail(name, what, w);
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e50() {
        const std::string name = "curvature.e50";
        const std::string what =
            "for middle i, j the component R^i_{j,c,d} vanishes unless {c,d} = {n+3,n+4}, where "
            "it is d_{n+3} of the rotation polynomial";
        const CurvTensor& R = tower_[0];
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Poly want = rotation_poly(i, j).partial(q1_);
                Poly got = R.value({i, j, q1_, q2_});
                if (got != want)
                    return detail::fail(name, what,
                                        poly_witness("R^" + std::to_string(i) + "_{" +
                                                         std::to_string(j) + "," +
                                                         std::to_string(q1_) + "," +
                                                         std::to_string(q2_) + "}",
                                                     got, want));
            }
        for (const auto& [key, val] : R.entries) {
            if (!is_mid(key[0]) || !is_mid(key[1])) continue;
            bool plane = (key[2] == q1_ && key[3] == q2_) || (key[2] == q2_ && key[3] == q1_);
            if (!plane)
                return detail::fail(name, what,
                                    "R^" + std::to_string(key[0]) + "_" + detail::key_str({key[1],
                                        key[2], key[3]}) + " = " + val.str());
        }
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e30() {
        const std::string name = "curvature.e30";
        const std::string what = "R^{n+3}_{bcd} = R^{n+4}_{bcd} = 0";
        for (const auto& [key, val] : tower_[0].entries)
            if (key[0] == q1_ || key[0] == q2_)
                return detail::fail(name, what,
                                    "component " + detail::key_str(key) + " = " + val.str());
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e40() {
        const std::string name = "curvature.e40";
        const std::string what = "R^a_{bcd} = 0 whenever a lower index is 1 or 2";
        for (const auto& [key, val] : tower_[0].entries)
            for (size_t pos = 1; pos < key.size(); ++pos)
                if (key[pos] == 1 || key[pos] == 2)
                    return detail::fail(name, what,
                                        "component " + detail::key_str(key) + " = " + val.str());
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e70() {
        const std::string name = "curvature.e70";
        const std::string what = "R^1_{i,j,n+3} = delta_{ij} for middle i, j";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Poly want = Poly::constant(dim_, i == j ? 1 : 0);
                Poly got = tower_[0].value({1, i, j, q1_});
                if (got != want)
                    return detail::fail(name, what,
                                        poly_witness("R^1_{" + std::to_string(i) + "," +
                                                         std::to_string(j) + "," +
                                                         std::to_string(q1_) + "}",
                                                     got, want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e60_origin() {
        const std::string name = "curvature.e60.origin";
        const std::string what = "R^2_{i,j,n+4}(0) = delta_{ij} for middle i, j";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Rational got = tower_[0].value({2, i, j, q2_}).at_origin();
                Rational want(i == j ? 1 : 0);
                if (got != want)
                    return detail::fail(name, what,
                                        "R^2_{" + std::to_string(i) + "," + std::to_string(j) +
                                            "," + std::to_string(q2_) + "}(0) = " +
                                            polycore::rational_to_string(got));
            }
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e60_exact() {
        const std::string name = "curvature.e60.exact-form";
        const std::string what =
            "R^2_{i,j,n+4} = delta_{ij} - sum_l (d_i u^l)(d_j u^l) as polynomials";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Poly want = Poly::constant(dim_, i == j ? 1 : 0);
                for (int l = 0; l < n_; ++l)
                    want -= mf_.u[static_cast<size_t>(l)].partial(i) *
                            mf_.u[static_cast<size_t>(l)].partial(j);
                Poly got = tower_[0].value({2, i, j, q2_});
                if (got != want)
                    return detail::fail(name, what,
                                        poly_witness("R^2_{" + std::to_string(i) + "," +
                                                         std::to_string(j) + "," +
                                                         std::to_string(q2_) + "}",
                                                     got, want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e80_origin() {
        const std::string name = "curvature.e80.origin";
        const std::string what = "R^1_{n+4,i,j}(0) = -(A_1)_{ji} for middle i, j";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Rational want =
                    N_ >= 1 ? Rational(-spec_.basis[0].at(j - 3, i - 3)) : Rational(0);
                Rational got = tower_[0].value({1, q2_, i, j}).at_origin();
                if (got != want)
                    return detail::fail(name, what,
                                        "R^1_{" + std::to_string(q2_) + "," + std::to_string(i) +
                                            "," + std::to_string(j) + "}(0) = " +
                                            polycore::rational_to_string(got) + ", expected " +
                                            polycore::rational_to_string(want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_curvature_e80_exact() {
        const std::string name = "curvature.e80.exact-form";
        const std::string what = "R^1_{n+4,i,j} = -d_{n+3} d_i u^j as polynomials";
        for (int i = 3; i <= n_ + 2; ++i)
            for (int j = 3; j <= n_ + 2; ++j) {
                Poly want = -(mf_.u[static_cast<size_t>(j - 3)].partial(i).partial(q1_));
                Poly got = tower_[0].value({1, q2_, i, j});
                if (got != want)
                    return detail::fail(name, what,
                                        poly_witness("R^1_{" + std::to_string(q2_) + "," +
                                                         std::to_string(i) + "," +
                                                         std::to_string(j) + "}",
                                                     got, want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_antisymmetry() {
        const std::string name = "curvature.antisymmetry";
        const std::string what = "R^a_{bcd} = -R^a_{bdc} for every component";
        for (const auto& [key, val] : tower_[0].entries) {
            Poly other = tower_[0].value({key[0], key[1], key[3], key[2]});
            if (other != -val)
                return detail::fail(name, what,
                                    "components " + detail::key_str(key) + " and swapped pair do "
                                    "not cancel: " + val.str() + " vs " + other.str());
        }
        return detail::pass(name, what);
    }

    CheckResult check_first_bianchi() {
        const std::string name = "curvature.first-bianchi";
        const std::string what = "R^a_{bcd} + R^a_{cdb} + R^a_{dbc} = 0 for all indices";
        for (int a = 1; a <= dim_; ++a)
            for (int b = 1; b <= dim_; ++b)
                for (int c = 1; c <= dim_; ++c)
                    for (int d = 1; d <= dim_; ++d) {
                        Poly acc = tower_[0].value({a, b, c, d});
                        acc += tower_[0].value({a, c, d, b});
                        acc += tower_[0].value({a, d, b, c});
                        if (!acc.is_zero())
                            return detail::fail(name, what,
                                                "cyclic sum at " + detail::key_str({a, b, c, d}) +
                                                    " = " + acc.str());
                    }
        return detail::pass(name, what);
    }

    CheckResult check_lemma1() {
        const std::string name = "lemma1.contraction";
        const std::string what =
            "in every Gamma-R contraction the dummy index can be restricted to the middle range: "
            "the non-middle part of each dummy sum vanishes";
        // variant 0 contracts the upper curvature slot against the lower
        // pair of Gamma; variants 1..3 contract a lower curvature slot
        // against the upper Gamma index. Group terms by the free indices
        // and require each group to cancel.
        std::map<std::vector<int>, Poly> acc;
        for (const auto& [key, val] : tower_[0].entries) {
            if (!is_mid(key[0])) {
                int f = key[0];
                for (int a = 1; a <= dim_; ++a)
                    for (int b = 1; b <= dim_; ++b) {
                        const Poly& g = gamma_.at(a, b, f);
                        if (g.is_zero()) continue;
                        std::vector<int> cell{0, a, b, 0, key[1], key[2], key[3]};
                        auto [it, fresh] = acc.try_emplace(cell, Poly(dim_));
                        (void)fresh;
                        it->second += g * val;
                    }
            }
            for (int s = 1; s <= 3; ++s) {
                int f = key[static_cast<size_t>(s)];
                if (is_mid(f)) continue;
                for (int a = 1; a <= dim_; ++a)
                    for (int b = 1; b <= dim_; ++b) {
                        const Poly& g = gamma_.at(f, a, b);
                        if (g.is_zero()) continue;
                        std::vector<int> cell{s, a, b, key[0], key[1], key[2], key[3]};
                        cell[static_cast<size_t>(3 + s)] = 0;
                        auto [it, fresh] = acc.try_emplace(cell, Poly(dim_));
                        (void)fresh;
                        it->second += g * val;
                    }
            }
        }
        for (const auto& [cell, sum] : acc)
            if (!sum.is_zero())
                return detail::fail(name, what,
                                    "non-middle dummy sum at slot " + std::to_string(cell[0]) +
                                        ", free indices " + detail::key_str(cell) + " = " +
                                        sum.str());
        return detail::pass(name, what);
    }

    CheckResult check_lemma2() {
        const std::string name = "lemma2.slots12";
        const std::string what =
            "appending derivative direction 1 or 2 annihilates every middle-block component";
        for (int r = 1; r <= rMax_; ++r)
            for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
                if (!is_mid(key[0]) || !is_mid(key[1])) continue;
                if (key.back() == 1 || key.back() == 2)
                    return detail::fail(name, what,
                                        "component " + detail::key_str(key) + " = " + val.str());
            }
        return detail::pass(name, what);
    }

    CheckResult check_lemma3_i() {
        const std::string name = "lemma3.i";
        const std::string what =
            "no middle-block component of any order depends on a middle coordinate";
        for (int r = 0; r <= rMax_; ++r)
            for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
                if (!is_mid(key[0]) || !is_mid(key[1])) continue;
                for (int k = 3; k <= n_ + 2; ++k)
                    if (!val.partial(k).is_zero())
                        return detail::fail(name, what,
                                            "component " + detail::key_str(key) +
                                                " depends on x^" + std::to_string(k) + ": " +
                                                val.str());
            }
        return detail::pass(name, what);
    }

    CheckResult check_lemma3_ii() {
        const std::string name = "lemma3.ii";
        const std::string what =
            "appending a middle derivative direction annihilates every middle-block component";
        for (int r = 1; r <= rMax_; ++r)
            for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
                if (!is_mid(key[0]) || !is_mid(key[1])) continue;
                if (is_mid(key.back()))
                    return detail::fail(name, what,
                                        "component " + detail::key_str(key) + " = " + val.str());
            }
        return detail::pass(name, what);
    }

    CheckResult check_lemma3_iii() {
        const std::string name = "lemma3.iii";
        const std::string what =
            "the set of slot tuples carrying a nonzero middle block never grows: dropping the "
            "last slot of a supported tuple gives a supported tuple";
        std::vector<std::set<std::vector<int>>> support(static_cast<size_t>(rMax_) + 1);
        for (int r = 0; r <= rMax_; ++r)
            for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
                (void)val;
                if (!is_mid(key[0]) || !is_mid(key[1])) continue;
                support[static_cast<size_t>(r)].insert(
                    std::vector<int>(key.begin() + 2, key.end()));
            }
        for (int r = 1; r <= rMax_; ++r)
            for (const auto& tuple : support[static_cast<size_t>(r)]) {
                std::vector<int> parent(tuple.begin(), tuple.end() - 1);
                if (!support[static_cast<size_t>(r - 1)].count(parent))
                    return detail::fail(name, what,
                                        "slot tuple " + detail::key_str(tuple) + " at order " +
                                            std::to_string(r) +
                                            " has no supported parent at order " +
                                            std::to_string(r - 1));
            }
        return detail::pass(name, what);
    }

    CheckResult check_e100() {
        const std::string name = "e100.independence";
        const std::string what = "no middle-block component of any order depends on x^{n+4}";
        for (int r = 0; r <= rMax_; ++r)
            for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
                if (!is_mid(key[0]) || !is_mid(key[1])) continue;
                if (!val.partial(q2_).is_zero())
                    return detail::fail(name, what,
                                        "component " + detail::key_str(key) + " = " + val.str());
            }
        return detail::pass(name, what);
    }

    CheckResult check_e200() {
        const std::string name = "e200.support";
        const std::string what =
            "a nonzero middle-block component forces every slot into {n+3, n+4} with the first "
            "two slots distinct";
        for (int r = 0; r <= rMax_; ++r)
            for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
                if (!is_mid(key[0]) || !is_mid(key[1])) continue;
                bool ok = key[2] != key[3];
                for (size_t pos = 2; pos < key.size() && ok; ++pos)
                    ok = key[pos] == q1_ || key[pos] == q2_;
                if (!ok)
                    return detail::fail(name, what,
                                        "component " + detail::key_str(key) + " = " + val.str());
            }
        return detail::pass(name, what);
    }

    // middle-block keys of tower_[r-1] that have to be examined as parents
    // for an append rule: every stored parent, plus the parent of every
    // stored child ending in the appended direction (so the check cannot
    // miss a child whose parent is absent)
    std::set<std::vector<int>> append_parents(int r, int direction) const {
        std::set<std::vector<int>> parents;
        for (const auto& [key, val] : tower_[static_cast<size_t>(r - 1)].entries) {
            (void)val;
            if (is_mid(key[0]) && is_mid(key[1])) parents.insert(key);
        }
        for (const auto& [key, val] : tower_[static_cast<size_t>(r)].entries) {
            (void)val;
            if (is_mid(key[0]) && is_mid(key[1]) && key.back() == direction)
                parents.insert(std::vector<int>(key.begin(), key.end() - 1));
        }
        return parents;
    }

    CheckResult check_e110() {
        const std::string name = "e110.partial";
        const std::string what =
            "appending direction n+3 acts on middle-block components as d/dx^{n+3}";
        for (int r = 1; r <= rMax_; ++r)
            for (const auto& parent : append_parents(r, q1_)) {
                std::vector<int> child = parent;
                child.push_back(q1_);
                Poly got = tower_[static_cast<size_t>(r)].value(child);
                Poly want = tower_[static_cast<size_t>(r - 1)].value(parent).partial(q1_);
                if (got != want)
                    return detail::fail(name, what,
                                        poly_witness("component " + detail::key_str(child), got,
                                                     want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_e111() {
        const std::string name = "e111.commutator";
        const std::string what =
            "appending direction n+4 acts on middle-block components as the commutator with the "
            "rotation matrix Gamma^i_{n+4,j}";
        for (int r = 1; r <= rMax_; ++r)
            for (const auto& parent : append_parents(r, q2_)) {
                std::vector<int> child = parent;
                child.push_back(q2_);
                Poly got = tower_[static_cast<size_t>(r)].value(child);
                Poly want(dim_);
                for (int l = 3; l <= n_ + 2; ++l) {
                    std::vector<int> up = parent;
                    up[0] = l;
                    const Poly& gil = gamma_.at(parent[0], q2_, l);
                    if (!gil.is_zero())
                        want += gil * tower_[static_cast<size_t>(r - 1)].value(up);
                    std::vector<int> low = parent;
                    low[1] = l;
                    const Poly& glj = gamma_.at(l, q2_, parent[1]);
                    if (!glj.is_zero())
                        want -= glj * tower_[static_cast<size_t>(r - 1)].value(low);
                }
                if (got != want)
                    return detail::fail(name, what,
                                        poly_witness("component " + detail::key_str(child), got,
                                                     want));
            }
        return detail::pass(name, what);
    }

    CheckResult check_e130_factorial() {
        const std::string name = "e130.factorial";
        const std::string what =
            "the plane operator with suffix (n+3)^{r-1} projects onto r! A_r for r = 1..N";
        int top = std::min(N_, rMax_);
        for (int r = 1; r <= top; ++r) {
            std::vector<int> suffix(static_cast<size_t>(r - 1), q1_);
            Matrix<Rational> got = plane_pr(suffix);
            Matrix<Rational> want =
                spec_.basis[static_cast<size_t>(r - 1)].scaled(detail::factorial(r));
            if (!(got == want))
                return detail::fail(name, what,
                                    "projection at order " + std::to_string(r) +
                                        " differs from r! A_r");
        }
        if (rMax_ < N_)
            return detail::pass(name, what + " (orders above the max order were not computed)");
        return detail::pass(name, what);
    }

    CheckResult check_e130_beyond() {
        const std::string name = "e130.beyond-basis";
        const std::string what = "the projection of the plane operator vanishes at order N + 1";
        std::vector<int> suffix(static_cast<size_t>(N_), q1_);
        Matrix<Rational> got = plane_pr(suffix);
        if (!got.all_equal(Rational(0)))
            return detail::fail(name, what, "projection at order " + std::to_string(N_ + 1) +
                                                " is nonzero");
        return detail::pass(name, what);
    }

    CheckResult check_e140_bracket() {
        const std::string name = "e140.bracket";
        const std::string what =
            "for every suffix over {n+3, n+4} with a final n+4 segment of length m, the "
            "projection equals sum_k C(m,k) k! [A_k, lower-order projection]";
        Matrix<Rational> zero(n_, n_, Rational(0));
        for (int r = 1; r <= rMax_; ++r) {
            for (unsigned mask = 1; mask < (1u << r); ++mask) {
                std::vector<int> suffix(static_cast<size_t>(r));
                int last_q2 = -1;
                for (int i = 0; i < r; ++i) {
                    bool two = (mask >> i) & 1u;
                    suffix[static_cast<size_t>(i)] = two ? q2_ : q1_;
                    if (two) last_q2 = i;
                }
                int m = r - 1 - last_q2;
                std::vector<int> prefix(suffix.begin(), suffix.begin() + last_q2);
                Matrix<Rational> lhs = plane_pr(suffix);
                Matrix<Rational> rhs = zero;
                for (int k = 1; k <= std::min(m, N_); ++k) {
                    std::vector<int> inner = prefix;
                    inner.insert(inner.end(), static_cast<size_t>(m - k), q1_);
                    Matrix<Rational> term =
                        liealg::bracket(spec_.basis[static_cast<size_t>(k - 1)], plane_pr(inner));
                    rhs = rhs + term.scaled(Rational(detail::binomial(m, k)) *
                                            detail::factorial(k));
                }
                if (!(lhs == rhs))
                    return detail::fail(name, what,
                                        "suffix " + detail::key_str(suffix) +
                                            ": projection differs from the bracket reduction");
            }
        }
        return detail::pass(name, what);
    }

    CheckResult check_e140_display() {
        const std::string name = "e140.display";
        const std::string what =
            "the single-bracket form m! [A_m, projection at order r0] holds on its derivable "
            "domain: m = 1 always, every admissible m when h is abelian";
        for (int r0 = 1; r0 <= rMax_ - 1; ++r0)
            for (int m = 1; m <= std::min(N_, rMax_ - r0); ++m) {
                if (m > 1 && !abelian_) continue;
                std::vector<int> suffix(static_cast<size_t>(r0 - 1), q1_);
                suffix.push_back(q2_);
                suffix.insert(suffix.end(), static_cast<size_t>(m), q1_);
                Matrix<Rational> lhs = plane_pr(suffix);
                std::vector<int> inner(static_cast<size_t>(r0 - 1), q1_);
                Matrix<Rational> rhs =
                    liealg::bracket(spec_.basis[static_cast<size_t>(m - 1)], plane_pr(inner))
                        .scaled(detail::factorial(m));
                if (!(lhs == rhs))
                    return detail::fail(name, what,
                                        "suffix " + detail::key_str(suffix) +
                                            ": projection differs from m! [A_m, pr]");
            }
        return detail::pass(name, what);
    }

    CheckResult check_so_membership() {
        const std::string name = "operators.so-membership";
        const std::string what = "every origin operator is skew for the flat pairing";
        for (const auto& [tuple, m] : gens_.ops)
            if (!liealg::so_check(m, eta_))
                return detail::fail(name, what, "operator " + detail::key_str(tuple));
        return detail::pass(name, what);
    }

    CheckResult check_stabilizer_b0() {
        const std::string name = "operators.stabilizer-b0";
        const std::string what =
            "every origin operator fits the plane-stabilizer pattern with vanishing corner block "
            "and rotation part inside h";
        liealg::RowSpan hspan(n_ * n_);
        for (const auto& a : spec_.basis) hspan.insert(a.flat());
        for (const auto& [tuple, m] : gens_.ops) {
            try {
                liealg::ParabolicElement p = liealg::decompose_parabolic(m);
                if (!p.B.all_equal(Rational(0)))
                    return detail::fail(name, what,
                                        "operator " + detail::key_str(tuple) +
                                            " has a nonzero corner block");
                if (!hspan.contains(p.A.flat()))
                    return detail::fail(name, what,
                                        "operator " + detail::key_str(tuple) +
                                            " has rotation part outside h");
            } catch (const std::exception& e) {
                return detail::fail(name, what,
                                    "operator " + detail::key_str(tuple) + ": " + e.what());
            }
        }
        return detail::pass(name, what);
    }

    CheckResult check_prune_soundness() {
        const std::string name = "mode.prune-soundness";
        const std::string what =
            "every tuple the pruned enumeration skips (one containing direction 1 or 2) has a "
            "vanishing operator";
        if (!gens_.prune_sound || !gens_.violations.empty()) {
            std::string w = "violating tuples:";
            for (const auto& t : gens_.violations) w += " " + detail::key_str(t);
            return detail::fail(name, what, w);
        }
        return detail::pass(name, what);
    }

    CheckResult check_holonomy_equality() {
        const std::string name = "holonomy.equality";
        const std::string what =
            "the bracket-closed span of the origin operators equals the stabilizer family over "
            "h, of dimension N + 2n + 1";
        if (!hol_ok_) return detail::fail(name, what, hol_error_);
        if (!liealg::equal_span(hol_, target_))
            return detail::fail(name, what,
                                "computed dimension " + std::to_string(hol_.dim()) +
                                    ", stabilizer dimension " + std::to_string(target_.dim()) +
                                    ", expected " + std::to_string(N_ + 2 * n_ + 1));
        return detail::pass(name, what + " (dimension " + std::to_string(hol_.dim()) + ")");
    }

    CheckResult check_permutation() {
        const std::string name = "holonomy.permutation-invariance";
        const std::string what =
            "reordering the generators changes the metric but spans the same holonomy algebra";
        if (N_ < 2)
            return detail::pass(name,
                                "the basis has at most one element, so every reordering is the "
                                "identity");
        if (!hol_ok_) return detail::fail(name, what, hol_error_);
        walker::HSpec rev = spec_;
        std::reverse(rev.basis.begin(), rev.basis.end());
        walker::MetricField mf2 = walker::build_metric(rev, cfg_.corrupt_u);
        if (mf2.g == mf_.g)
            return detail::fail(name, what, "reversing the generator order left the metric fixed");
        curvature::ChristoffelField gamma2 = curvature::christoffel(mf2);
        std::vector<CurvTensor> tower2;
        tower2.push_back(curvature::riemann(gamma2));
        for (int r = 1; r <= rMax_; ++r) tower2.push_back(curvature::nabla(tower2.back(), gamma2));
        curvature::HolonomyGenerators gens2 =
            curvature::enumerate_generators(tower2, n_, cfg_.mode);
        if (gens2.ops.empty())
            return detail::fail(name, what, "the reordered input produced no nonzero operator");
        liealg::AlgebraSpan hol2 = curvature::span_of(gens2);
        if (!liealg::equal_span(hol2, hol_))
            return detail::fail(name, what,
                                "reordered span has dimension " + std::to_string(hol2.dim()) +
                                    ", original has " + std::to_string(hol_.dim()));
        return detail::pass(name, what);
    }

    CheckResult check_isotropic_plane() {
        const std::string name = "weakirr.isotropic-plane";
        const std::string what =
            "the plane of the two leading null directions is invariant under the holonomy "
            "algebra and isotropic for the flat pairing";
        if (!hol_ok_) return detail::fail(name, what, hol_error_);
        if (!probe_.plane_invariant)
            return detail::fail(name, what, "a basis element moves the plane");
        if (!probe_.plane_isotropic)
            return detail::fail(name, what, "the pairing does not vanish on the plane");
        return detail::pass(name, what);
    }

    CheckResult check_probe() {
        const std::string name = "weakirr.probe";
        const std::string what =
            "sampling search for a proper nondegenerate invariant subspace (evidence only, not a "
            "proof of weak irreducibility)";
        if (!hol_ok_) return detail::fail(name, what, hol_error_);
        if (probe_.counterexample_found)
            return detail::fail(name, what, probe_.note);
        return detail::heuristic(name, what + ": " + probe_.note);
    }

    CheckResult check_oracle_christoffel() {
        const std::string name = "oracle.christoffel";
        const std::string what =
            "finite-difference Christoffel symbols match the exact ones at seeded points";
        for (unsigned seed : cfg_.oracle.point_seeds) {
            oracle::FloatPoint x = oracle::seeded_point(dim_, seed);
            std::vector<double> fd = oracle::fd_christoffel(spec_, x, cfg_.oracle.fd_step);
            for (int a = 1; a <= dim_; ++a)
                for (int b = 1; b <= dim_; ++b)
                    for (int c = 1; c <= dim_; ++c) {
                        double exact = gamma_.at(a, b, c).eval_double(x);
                        double got = fd[oracle::flat3(dim_, a, b, c)];
                        if (!close_rel(got, exact, cfg_.oracle.fd_rel_tol))
                            return detail::fail(
                                name, what,
                                "seed " + std::to_string(seed) + ", Gamma^" + std::to_string(a) +
                                    "_{" + std::to_string(b) + "," + std::to_string(c) +
                                    "}: fd " + detail::num_str(got) + " vs exact " +
                                    detail::num_str(exact));
                    }
        }
        return detail::pass(name, what);
    }

    CheckResult check_oracle_riemann() {
        const std::string name = "oracle.riemann";
        const std::string what =
            "finite-difference curvature components match the exact ones at seeded points";
        for (unsigned seed : cfg_.oracle.point_seeds) {
            oracle::FloatPoint x = oracle::seeded_point(dim_, seed + 10);
            std::vector<double> fd = oracle::fd_riemann(spec_, x, cfg_.oracle.fd_step);
            for (int a = 1; a <= dim_; ++a)
                for (int b = 1; b <= dim_; ++b)
                    for (int c = 1; c <= dim_; ++c)
                        for (int d = 1; d <= dim_; ++d) {
                            auto it = tower_[0].entries.find({a, b, c, d});
                            double exact =
                                it == tower_[0].entries.end() ? 0.0 : it->second.eval_double(x);
                            double got = fd[oracle::flat4(dim_, a, b, c, d)];
                            if (!close_rel(got, exact, cfg_.oracle.fd_rel_tol))
                                return detail::fail(
                                    name, what,
                                    "seed " + std::to_string(seed + 10) + ", component " +
                                        detail::key_str({a, b, c, d}) + ": fd " +
                                        detail::num_str(got) + " vs exact " +
                                        detail::num_str(exact));
                        }
        }
        return detail::pass(name, what);
    }

    CheckResult check_oracle_transport() {
        const std::string name = "oracle.loop-transport";
        const std::string what =
            "numerical parallel transport around a small rectangle in the (n+3, n+4) plane "
            "recovers the curvature operator within 5 eps";
        double eps = cfg_.oracle.loop_eps;
        Eigen::MatrixXd est =
            oracle::loop_transport(spec_, q1_, q2_, eps, cfg_.oracle.loop_steps);
        Matrix<Rational> want = curvature::detail::origin_operator(tower_[0], {q1_, q2_});
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                double diff = std::abs(est(i, j) - to_double(want.at(i, j)));
                if (diff > 5.0 * eps)
                    return detail::fail(name, what,
                                        "entry (" + std::to_string(i + 1) + "," +
                                            std::to_string(j + 1) + ") differs by " +
                                            detail::num_str(diff));
            }
        return detail::pass(name, what);
    }

    CheckResult check_oracle_convergence() {
        const std::string name = "oracle.convergence";
        const std::string what =
            "the dominant finite-difference error shrinks about fourfold when the step is "
            "halved, as second-order differences must";
        const double h0 = 1e-3;
        oracle::FloatPoint x = oracle::seeded_point(dim_, 31);
        std::vector<double> exact(static_cast<size_t>(dim_) * dim_ * dim_);
        for (int a = 1; a <= dim_; ++a)
            for (int b = 1; b <= dim_; ++b)
                for (int c = 1; c <= dim_; ++c)
                    exact[oracle::flat3(dim_, a, b, c)] = gamma_.at(a, b, c).eval_double(x);
        auto errors = [&](double h) {
            std::vector<double> fd = oracle::fd_christoffel(spec_, x, h);
            for (size_t t = 0; t < fd.size(); ++t) fd[t] = std::abs(fd[t] - exact[t]);
            return fd;
        };
        std::vector<double> e1 = errors(h0);
        size_t comp = 0;
        for (size_t t = 1; t < e1.size(); ++t)
            if (e1[t] > e1[comp]) comp = t;
        if (e1[comp] < 1e-12)
            return detail::pass(name, what + " (errors already at the floating-point floor)");
        double v1 = e1[comp];
        double v2 = errors(h0 / 2)[comp];
        double v3 = errors(h0 / 4)[comp];
        if (v2 < 1e-13 || v3 < 1e-13)
            return detail::pass(name, what + " (halved errors reach the floating-point floor)");
        double r1 = v1 / v2;
        double r2 = v2 / v3;
        if (r1 < 2.5 || r1 > 6.0 || r2 < 2.5 || r2 > 6.0)
            return detail::fail(name, what,
                                "error ratios " + detail::num_str(r1) + " and " +
                                    detail::num_str(r2) + " fall outside [2.5, 6]");
        return detail::pass(name, what);
    }

    RunConfig cfg_;
    walker::HSpec spec_;
    int n_, dim_, q1_, q2_, N_, rMax_;
    liealg::EtaForm eta_;
    walker::MetricField mf_;
    curvature::ChristoffelField gamma_;
    std::vector<CurvTensor> tower_;
    curvature::HolonomyGenerators gens_;
    liealg::AlgebraSpan hol_, target_;
    bool hol_ok_ = false;
    std::string hol_error_;
    liealg::ProbeReport probe_;
    bool abelian_ = true;
};

}  // namespace verifier
