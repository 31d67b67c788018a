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

#pragma once

#include <optional>
#include <vector>

#include "catrep/fock_oracle.hpp"
#include "catrep/metrics.hpp"
#include "catrep/sweep.hpp"

namespace catrep {

/// Engine, printed closed form and Fock oracle at one grid point.
struct AuditRow {
    double alpha = 0.0;
    double eta = 0.0;
    double engine = 0.0;
    double paper_formula = 0.0;
    double oracle = 0.0;
    /// Engine and closed form disagree beyond the discrepancy tolerance.
    bool discrepancy = false;
    /// Engine and oracle agree within the oracle tolerance.
    bool valid = false;
};

/// Audits the entropy (case entropy) or the fidelity of the chosen case on every grid point.
/// `cutoff` overrides the per-point tail rule; a too-small cutoff throws NumericGuard.
inline std::vector<AuditRow> audit_formulas(const SweepSpec &grid, const Tolerances &tol = {}, int threads = 1,
                                            std::optional<int> cutoff = std::nullopt) {
    validate(grid);
    const auto points = grid_points(grid);
    return parallel_map(points.size(), threads, [&](std::size_t i) {
        const auto [a, eta] = points[i];
        const int c = cutoff.value_or(fock::cutoff_rule(a));
        fock::CrossChecker checker(a, eta, point_beta(grid, a), c);
        AuditRow row{a, eta};
        if (grid.sweep_case == SweepCase::Entropy) {
            row.engine = reduced_linear_entropy(checker.engine().rho_ad, "A");
            row.paper_formula = paper_entropy_formula(a, eta);
            row.oracle = 1.0 - fock::fock_purity(fock::fock_partial_trace(checker.oracle().rho_ad, {"D"}));
        } else {
            const FidelityTarget t = case_target(grid, alpha_prime(a));
            row.engine = fidelity(checker.engine().rho_ad, t);
            row.paper_formula = paper_fidelity_formula(a, eta, t);
            row.oracle = fock::fock_fidelity(checker.oracle().rho_ad, fock::fock_target(t, "A", "D", c));
        }
        row.discrepancy = std::abs(row.engine - row.paper_formula) > tol.discrepancy;
        row.valid = std::abs(row.engine - row.oracle) < tol.oracle;
        return row;
    });
}

inline Table audit_table(const std::vector<AuditRow> &rows) {
    Table t{{"alpha", "eta", "engine", "paper_formula", "oracle", "flag"}, {}};
    for (const auto &r : rows) {
        t.rows.push_back({format_number(r.alpha), format_number(r.eta), format_number(r.engine),
                          format_number(r.paper_formula), format_number(r.oracle), r.discrepancy ? "true" : "false"});
    }
    return t;
}

/// Default audit grid: alpha in {0.5, 1, 1.5, 2}, eta in {0, 0.3, 0.7, 1}.
inline SweepSpec default_audit_grid() {
    SweepSpec s;
    s.alpha_min = 0.5;
    s.alpha_max = 2.0;
    s.alpha_steps = 4;
    s.etas = {0.0, 0.3, 0.7, 1.0};
    s.sweep_case = SweepCase::Entropy;
    return s;
}

}  // namespace catrep
