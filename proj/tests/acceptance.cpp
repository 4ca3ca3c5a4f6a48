// Acceptance gate: one line per criterion, exit code = number of failed
// criteria. Each criterion is evaluated from full verification runs, so a
// failure here always corresponds to a named check failing on a named
// input (or a time bound being missed).

#include "verifier/report.hpp"

#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using verifier::RunConfig;
using verifier::RunReport;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string status_of(const RunReport& rep, const std::string& name) {
    for (const auto& r : rep.results)
        if (r.name == name) return r.status;
    return "missing";
}

// appends "label: check" to why when the check did not pass
bool need_pass(const RunReport& rep, const std::string& name, const std::string& label,
               std::string& why) {
    if (status_of(rep, name) == "pass") return true;
    if (!why.empty()) why += ", ";
    why += label + ": " + name + " " + status_of(rep, name);
    return false;
}

int failures = 0;

void report(int criterion, bool ok, const std::string& text, const std::string& why) {
    if (ok) {
        std::cout << "PASS  " << criterion << ": " << text << "\n";
    } else {
        std::cout << "FAIL  " << criterion << ": " << text << " [" << why << "]\n";
        ++failures;
    }
}

}  // namespace

int main() {
    const std::vector<std::string> fixtures = {"F0", "F1", "F2", "F3", "F4"};
    const std::map<std::string, int> expected_dim = {
        {"F0", 5}, {"F1", 6}, {"F2", 10}, {"F3", 11}, {"F4", 10}};

    // one exhaustive full run per fixture (covers prune soundness), plus a
    // separately timed pruned holonomy computation
    std::map<std::string, RunReport> rep;
    std::map<std::string, double> exhaustive_time, pruned_time;
    std::map<std::string, bool> pruned_equal;
    for (const auto& f : fixtures) {
        RunConfig cfg;
        cfg.fixture = f;
        cfg.mode = curvature::EnumMode::exhaustive;
        auto t0 = std::chrono::steady_clock::now();
        rep.emplace(f, verifier::run_checks(cfg));
        exhaustive_time[f] = seconds_since(t0);

        walker::HSpec spec = walker::fixture(f);
        t0 = std::chrono::steady_clock::now();
        liealg::AlgebraSpan hol = curvature::holonomy_algebra(spec);
        liealg::EtaForm eta = liealg::gram_eta(spec.n);
        liealg::AlgebraSpan target =
            liealg::span_lie_closure(liealg::gh_basis(spec.n, spec.basis), &eta);
        pruned_equal[f] = liealg::equal_span(hol, target);
        pruned_time[f] = seconds_since(t0);
    }

    std::map<unsigned, RunReport> random_rep;
    for (unsigned seed = 1; seed <= 5; ++seed) {
        RunConfig cfg;
        cfg.fixture = "random";
        cfg.seed = seed;
        random_rep.emplace(seed, verifier::run_checks(cfg));
    }

    RunConfig corrupt_cfg;
    corrupt_cfg.fixture = "F1";
    corrupt_cfg.corrupt_u = true;
    RunReport corrupt = verifier::run_checks(corrupt_cfg);

    // 1: the holonomy algebra equals the stabilizer family
    {
        bool ok = true;
        std::string why;
        for (const auto& f : fixtures) {
            ok &= need_pass(rep.at(f), "holonomy.equality", f, why);
            if (rep.at(f).holonomy_dim != expected_dim.at(f)) {
                ok = false;
                why += (why.empty() ? "" : ", ") + f + ": dimension " +
                       std::to_string(rep.at(f).holonomy_dim) + ", expected " +
                       std::to_string(expected_dim.at(f));
            }
            if (!pruned_equal.at(f)) {
                ok = false;
                why += (why.empty() ? "" : ", ") + f + ": pruned span differs";
            }
            if (pruned_time.at(f) > 60.0) {
                ok = false;
                why += (why.empty() ? "" : ", ") + f + ": pruned run took " +
                       std::to_string(pruned_time.at(f)) + " s";
            }
            if (exhaustive_time.at(f) > 600.0) {
                ok = false;
                why += (why.empty() ? "" : ", ") + f + ": exhaustive run took " +
                       std::to_string(exhaustive_time.at(f)) + " s";
            }
        }
        report(1, ok,
               "the computed holonomy algebra equals the expected stabilizer family on F0..F4, "
               "with dimensions 5, 6, 10, 11, 10, within the time bounds",
               why);
    }

    // 2: Christoffel identities on fixtures and seeded random inputs
    {
        bool ok = true;
        std::string why;
        const std::vector<std::string> names = {
            "christoffel.e11", "christoffel.e22", "christoffel.e21",
            "christoffel.e10", "christoffel.e20", "christoffel.e25",
            "christoffel.torsion-free", "christoffel.metric-compat"};
        for (const auto& f : fixtures)
            for (const auto& nm : names) ok &= need_pass(rep.at(f), nm, f, why);
        for (const auto& [seed, r] : random_rep)
            for (const auto& nm : names)
                ok &= need_pass(r, nm, "random seed " + std::to_string(seed), why);
        report(2, ok,
               "every Christoffel symbol family matches its closed form on F0..F4 and on five "
               "seeded single-generator inputs with n up to 6",
               why);
    }

    // 3: curvature identities including the exact forms behind the origin values
    {
        bool ok = true;
        std::string why;
        const std::vector<std::string> names = {
            "curvature.e50", "curvature.e30", "curvature.e40", "curvature.e70",
            "curvature.e60.origin", "curvature.e60.exact-form", "curvature.e80.origin",
            "curvature.e80.exact-form", "curvature.antisymmetry", "curvature.first-bianchi"};
        for (const auto& f : fixtures)
            for (const auto& nm : names) ok &= need_pass(rep.at(f), nm, f, why);
        report(3, ok,
               "every curvature component family matches its closed form on F0..F4, with the "
               "origin values split from their exact polynomial forms",
               why);
    }

    // 4: block-structure lemmas at every order, with prune soundness
    {
        bool ok = true;
        std::string why;
        const std::vector<std::string> names = {
            "lemma1.contraction", "lemma2.slots12", "lemma3.i", "lemma3.ii", "lemma3.iii",
            "e100.independence", "e200.support", "e110.partial", "e111.commutator",
            "mode.prune-soundness"};
        for (const auto& f : fixtures)
            for (const auto& nm : names) ok &= need_pass(rep.at(f), nm, f, why);
        report(4, ok,
               "the contraction and middle-block structure lemmas hold at every derivative order "
               "up to N + 1 on F0..F4, and the exhaustive sweep certifies the pruned enumeration",
               why);
    }

    // 5: factorial normalization of the plane operators
    {
        bool ok = true;
        std::string why;
        for (const std::string f : {"F1", "F3", "F4"}) {
            ok &= need_pass(rep.at(f), "e130.factorial", f, why);
            ok &= need_pass(rep.at(f), "e130.beyond-basis", f, why);
        }
        report(5, ok,
               "the plane operator differentiated r - 1 times along x^{n+3} projects onto r! A_r "
               "for r = 1..N and vanishes at r = N + 1, on F1, F3, F4",
               why);
    }

    // 6: mixed-suffix bracket reduction
    {
        bool ok = true;
        std::string why;
        for (const std::string f : {"F3", "F4"}) {
            ok &= need_pass(rep.at(f), "e140.bracket", f, why);
            ok &= need_pass(rep.at(f), "e140.display", f, why);
        }
        report(6, ok,
               "the bracket reduction of mixed derivative suffixes holds for every admissible "
               "suffix on the multi-generator fixtures F3 and F4",
               why);
    }

    // 7: numerical oracles
    {
        bool ok = true;
        std::string why;
        const std::vector<std::string> names = {"oracle.christoffel", "oracle.riemann",
                                                "oracle.loop-transport", "oracle.convergence"};
        for (const auto& f : fixtures)
            for (const auto& nm : names) ok &= need_pass(rep.at(f), nm, f, why);
        report(7, ok,
               "finite-difference and loop-transport oracles agree with the exact values on "
               "F0..F4, and the finite-difference error contracts under step halving",
               why);
    }

    // 8: operator normal form and metric invariants
    {
        bool ok = true;
        std::string why;
        const std::vector<std::string> names = {
            "operators.so-membership", "operators.stabilizer-b0", "metric.eta-origin",
            "metric.det-constant", "metric.degree-bound", "nabla.metric-parallel"};
        for (const auto& f : fixtures)
            for (const auto& nm : names) ok &= need_pass(rep.at(f), nm, f, why);
        report(8, ok,
               "every origin operator is skew and stabilizes the null plane with rotation part "
               "in h, and the metric has flat origin value, unit determinant, bounded degree, "
               "and vanishing covariant derivative",
               why);
    }

    // 9: permutation invariance and the negative control
    {
        bool ok = true;
        std::string why;
        for (const std::string f : {"F3", "F4"})
            ok &= need_pass(rep.at(f), "holonomy.permutation-invariance", f, why);
        if (corrupt.fail_count < 1 || corrupt.exit_code() == 0) {
            ok = false;
            why += (why.empty() ? "" : ", ");
            why += "corrupted F1 reported no failure";
        }
        if (status_of(corrupt, "christoffel.e21") != "fail") {
            ok = false;
            why += (why.empty() ? "" : ", ");
            why += "corrupted F1 did not fail christoffel.e21";
        }
        report(9, ok,
               "reordering the generators changes the metric but not the holonomy algebra, and "
               "a corrupted input yields at least one failed check and a nonzero exit code",
               why);
    }

    std::cout << "acceptance: " << (9 - failures) << " of 9 criteria passed\n";
    return failures;
}
