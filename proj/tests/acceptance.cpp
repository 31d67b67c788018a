// Copyright 2026 The catrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance checks. One PASS/FAIL line per criterion; the exit
// status is non-zero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "catrep/audit.hpp"
#include "catrep/chain.hpp"
#include "catrep/fock_oracle.hpp"
#include "catrep/sweep.hpp"

namespace {

using namespace catrep;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    Outcome out;
    void require(bool ok, const std::string &why) {
        if (!ok && out.pass) {
            out.pass = false;
            out.detail = why;
        }
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// QBS production from an odd cat and a 50:50 beam splitter.
Outcome ac1() {
    constexpr double kTol = 1e-12;
    constexpr double kMaxSeconds = 1e-3;
    Check c;
    double worst = 0, slowest = 0;
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        const auto t0 = Clock::now();
        const PureState pair = entangle_pair(a, "A", "B");
        const double ov = std::abs(inner(pair, qbs_state(alpha_prime(a), "A", "B")));
        const double dt = seconds_since(t0);
        worst = std::max(worst, std::abs(ov - 1.0));
        slowest = std::max(slowest, dt);
        c.require(std::abs(ov - 1.0) < kTol, "alpha=" + fmt(a) + " |<qbs|pair>|-1=" + fmt(ov - 1.0));
        c.require(dt < kMaxSeconds, "alpha=" + fmt(a) + " took " + fmt(dt) + " s");
    }
    if (c.out.pass) c.out.detail = "max ||<qbs|pair>|-1| " + fmt(worst) + ", slowest " + fmt(slowest) + " s";
    return c.out;
}

// Lossless swap gives QBS_AD; anti-correlated branches cancel.
Outcome ac2() {
    constexpr double kFidTol = 1e-10;
    constexpr double kCrossTol = 1e-12;
    Check c;
    double worst_f = 0, worst_cross = 0;
    for (double a : {0.5, 1.0, 2.0}) {
        for (double b : {0.5, 1.3}) {
            const Complex ap = alpha_prime(a);
            const PureState x = tensor(qbs_state(ap, "A", "B"), qbs_state(ap, "C", "D"));
            const QbsmOutcome o = qbsm_project(x, "B", "C", b);
            const double f = std::norm(inner(qbs_state(ap, "A", "D"), o.normalized));
            worst_f = std::max(worst_f, std::abs(f - 1.0));
            c.require(std::abs(f - 1.0) < kFidTol, "alpha=" + fmt(a) + " beta=" + fmt(b) + " F=" + fmt(f));

            // Unmerged projection coefficients, summed per (A, D) branch.
            const PureState probe = qbs_state(b, "B", "C");
            std::map<std::pair<int, int>, Complex> branch;
            for (const auto &t : x.terms()) {
                Complex coeff = 0;
                for (const auto &q : probe.terms()) {
                    coeff += std::conj(q.coeff) * t.coeff * overlap(q.amps[0], t.amps[1]) * overlap(q.amps[1], t.amps[2]);
                }
                branch[{t.amps[0].real() > 0 ? 1 : -1, t.amps[3].real() > 0 ? 1 : -1}] += coeff;
            }
            const double scale = std::abs(branch[{1, 1}]);
            const double cross = std::max(std::abs(branch[{1, -1}]), std::abs(branch[{-1, 1}])) / scale;
            worst_cross = std::max(worst_cross, cross);
            c.require(cross < kCrossTol, "alpha=" + fmt(a) + " beta=" + fmt(b) + " cross=" + fmt(cross));
            c.require(o.residual.term_count() == 2, "residual keeps anti-correlated terms");
        }
    }
    if (c.out.pass) c.out.detail = "max |F-1| " + fmt(worst_f) + ", max relative cross term " + fmt(worst_cross);
    return c.out;
}

// Lossy structure: cross dyad damping and unit trace.
Outcome ac3() {
    constexpr double kTol = 1e-12;
    Check c;
    double worst = 0;
    for (double a : {1.0, 2.0}) {
        for (double eta : {0.3, 0.7}) {
            const MixedState rho = lossy_swap_pipeline(a, eta).rho_ad;
            const double tr_err = std::abs(trace(rho) - 1.0);
            c.require(tr_err < kTol, "trace error " + fmt(tr_err));
            Complex diag = 0, cross = 0;
            for (const auto &d : rho.dyads()) {
                const bool kp = d.ket[0].real() > 0, bp = d.bra[0].real() > 0;
                if (kp && bp) diag = d.coeff;
                if (kp && !bp) cross = d.coeff;
            }
            const double expected = std::exp(-8.0 * (1.0 - eta) * std::pow(alpha_prime(a), 2));
            const double err = std::abs(-cross / diag - expected);
            worst = std::max(worst, err);
            c.require(rho.dyad_count() == 4, "expected four dyads");
            c.require(err < kTol, "alpha=" + fmt(a) + " eta=" + fmt(eta) + " factor error " + fmt(err));
        }
    }
    if (c.out.pass) c.out.detail = "max factor error " + fmt(worst);
    return c.out;
}

// Entropy endpoints.
Outcome ac4() {
    constexpr double kTol = 1e-10;
    Check c;
    double worst = 0;
    for (int k = 0; k <= 58; ++k) {
        const double a = 0.1 + 0.05 * k;
        const double s1 = entropy_AD(a, 1.0);
        const double s0 = entropy_AD(a, 0.0);
        worst = std::max({worst, std::abs(s1 - 0.5), std::abs(s0)});
        c.require(std::abs(s1 - 0.5) < kTol, "alpha=" + fmt(a) + " S(eta=1)=" + fmt(s1));
        c.require(std::abs(s0) < kTol, "alpha=" + fmt(a) + " S(eta=0)=" + fmt(s0));
    }
    if (c.out.pass) c.out.detail = "max endpoint error " + fmt(worst) + " on 59 alphas in [0.1, 3]";
    return c.out;
}

// Engine versus number-basis oracle.
Outcome ac5() {
    constexpr double kTol = 1e-8;
    constexpr double kMaxSeconds = 60.0;
    Check c;
    const auto t0 = Clock::now();
    double worst = 0;
    const std::vector<fock::Scenario> scenarios{fock::Scenario::Entangle,  fock::Scenario::Swap,
                                                fock::Scenario::Entropy,   fock::Scenario::FidelityA,
                                                fock::Scenario::FidelityB, fock::Scenario::FidelityC};
    for (double a : {0.5, 1.0, 2.0}) {
        for (double eta : {0.0, 0.3, 0.7, 1.0}) {
            fock::CrossChecker checker(a, eta, alpha_prime(a), fock::cutoff_rule(a));
            for (auto s : scenarios) {
                const auto r = checker.run(s);
                worst = std::max(worst, r.max_deviation);
                c.require(r.max_deviation < kTol, fock::scenario_name(s) + " alpha=" + fmt(a) + " eta=" + fmt(eta) +
                                                      " deviation " + fmt(r.max_deviation));
            }
        }
    }
    const double dt = seconds_since(t0);
    c.require(dt < kMaxSeconds, "took " + fmt(dt) + " s");
    if (c.out.pass) c.out.detail = "max deviation " + fmt(worst) + " in " + fmt(dt) + " s";
    return c.out;
}

// Fidelity claims.
Outcome ac6() {
    constexpr double kOneTol = 1e-10;
    constexpr double kZeroTol = 1e-12;
    Check c;
    double worst_one = 0, worst_zero = 0;
    for (int k = 0; k <= 29; ++k) {
        const double a = 0.1 + 0.1 * k;
        const double f = fidelity_AD(a, 1.0, fig4a_target(alpha_prime(a)));
        worst_one = std::max(worst_one, std::abs(f - 1.0));
        c.require(std::abs(f - 1.0) < kOneTol, "fig4a alpha=" + fmt(a) + " F=" + fmt(f));
        for (double eta : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0}) {
            const double z = fidelity_AD(a, eta, zero_fidelity_target(alpha_prime(a)));
            worst_zero = std::max(worst_zero, std::abs(z));
            c.require(std::abs(z) < kZeroTol, "zero target alpha=" + fmt(a) + " eta=" + fmt(eta) + " F=" + fmt(z));
        }
    }
    if (c.out.pass) c.out.detail = "max |F-1| " + fmt(worst_one) + ", max |F_zero| " + fmt(worst_zero);
    return c.out;
}

// Fidelity decreasing in alpha for the fig4b/fig4c targets; deterministic CSVs.
Outcome ac7() {
    constexpr double kSlack = 1e-12;
    Check c;
    std::string violations;
    for (SweepCase sc : {SweepCase::Fig4b, SweepCase::Fig4c}) {
        SweepSpec s;
        s.sweep_case = sc;
        s.alpha_min = 0.5;
        s.alpha_max = 3.0;
        s.alpha_steps = 11;
        s.etas = {0.1, 0.4, 0.7};
        const Table t = fidelity_sweep(s);
        for (std::size_t i = 1; i < t.rows.size(); ++i) {
            if (t.rows[i][1] != t.rows[i - 1][1]) continue;
            const double prev = std::stod(t.rows[i - 1][2]);
            const double cur = std::stod(t.rows[i][2]);
            if (cur > prev + kSlack) {
                violations += " " + case_name(sc) + "@eta=" + t.rows[i][1] + ":F(" + t.rows[i - 1][0] + ")=" +
                              t.rows[i - 1][2] + "<F(" + t.rows[i][0] + ")=" + t.rows[i][2];
            }
        }
        std::ostringstream one, many;
        write_csv(one, fidelity_sweep(s, 1));
        write_csv(many, fidelity_sweep(s, 4));
        c.require(one.str() == many.str(), case_name(sc) + " CSV differs between thread counts");
    }
    c.require(violations.empty(), "increasing steps:" + violations);
    if (c.out.pass) c.out.detail = "fig4b/fig4c nonincreasing on 11 alphas x 3 etas; CSVs byte-identical";
    return c.out;
}

// Formula audit: oracle agreement everywhere, entropy discrepancy flagged at eta = 1.
Outcome ac8() {
    Check c;
    const auto rows = audit_formulas(default_audit_grid());
    std::ostringstream csv;
    write_csv(csv, audit_table(rows));
    c.require(csv.str().rfind("alpha,eta,engine,paper_formula,oracle,flag\n", 0) == 0, "unexpected CSV header");
    c.require(rows.size() == 16, "expected 16 rows");
    double worst = 0;
    for (const auto &r : rows) {
        worst = std::max(worst, std::abs(r.engine - r.oracle));
        c.require(r.valid, "alpha=" + fmt(r.alpha) + " eta=" + fmt(r.eta) + " engine/oracle " +
                               fmt(std::abs(r.engine - r.oracle)));
        if (r.eta == 1.0) {
            c.require(r.discrepancy, "eta=1 row not flagged at alpha=" + fmt(r.alpha));
            c.require(std::abs(r.engine - 0.5) < 1e-10, "eta=1 engine " + fmt(r.engine));
            c.require(std::abs(r.paper_formula - std::exp(-2.0 * r.alpha * r.alpha)) < 1e-12,
                      "eta=1 closed form " + fmt(r.paper_formula));
        }
    }
    if (c.out.pass) c.out.detail = "16 rows, max engine/oracle " + fmt(worst) + ", eta=1 rows flagged (0.5 vs e^-2a^2)";
    return c.out;
}

// Eight-location chain.
Outcome ac9() {
    constexpr double kTol = 1e-9;
    constexpr double kMaxSeconds = 1.0;
    Check c;
    const auto t0 = Clock::now();
    double worst = 0;
    for (double a : {0.5, 1.0, 2.0}) {
        for (auto order : {SwapOrder::Hierarchical, SwapOrder::LeftToRight, SwapOrder::RightToLeft}) {
            const ChainReport r = run_chain(3, a, alpha_prime(a), 1.0, order);
            worst = std::max(worst, std::abs(r.fidelity_vs_ideal_qbs - 1.0));
            c.require(r.location_count == 8 && r.swap_count == 3, "wrong chain shape");
            c.require(std::abs(r.fidelity_vs_ideal_qbs - 1.0) < kTol, "alpha=" + fmt(a) + " F=" + fmt(r.fidelity_vs_ideal_qbs));
        }
    }
    const double dt = seconds_since(t0);
    c.require(dt < kMaxSeconds, "took " + fmt(dt) + " s");
    if (c.out.pass) c.out.detail = "max |F-1| " + fmt(worst) + " over 3 orders x 3 alphas in " + fmt(dt) + " s";
    return c.out;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
        {"AC1 QBS production", ac1},          {"AC2 lossless swap", ac2},      {"AC3 lossy structure", ac3},
        {"AC4 entropy endpoints", ac4},       {"AC5 oracle equivalence", ac5}, {"AC6 fidelity claims", ac6},
        {"AC7 fidelity vs alpha shape", ac7}, {"AC8 formula audit", ac8},      {"AC9 chain scaling", ac9},
    };
    int failed = 0;
    for (const auto &[name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
