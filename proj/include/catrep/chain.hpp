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

// Repeater chain over 2^N locations L0 .. L{2^N - 1}. Locations (2k, 2k+1)
// share an elementary QBS pair; every location mode loses signal into its
// own environment mode E<k>; 2^(N-1) - 1 QBSMs on the inner neighbours leave
// L0 and the last location entangled.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catrep/metrics.hpp"
#include "catrep/protocol.hpp"

namespace catrep {

inline constexpr int kMaxChainExponent = 16;

enum class SwapOrder {
    /// Swap inside each half first, then join the halves (recursively).
    Hierarchical,
    LeftToRight,
    RightToLeft,
};

struct ChainReport {
    int n = 0;
    int location_count = 0;
    int swap_count = 0;
    /// Conditional success weight of each swap, in execution order.
    std::vector<double> per_swap_weights;
    /// Unit-trace operator on (first, last) location after tracing environments.
    MixedState final_state;
    /// Linear entropy of the first location.
    double entropy = 0.0;
    /// <QBS(alpha')| final_state |QBS(alpha')> on the end locations.
    double fidelity_vs_ideal_qbs = 0.0;
};

inline ModeId location_mode(int k) { return ModeId("L" + std::to_string(k)); }
inline ModeId environment_mode(int k) { return ModeId("E" + std::to_string(k)); }

inline ChainReport run_chain(int n, Complex alpha, Complex beta, double eta, SwapOrder order = SwapOrder::Hierarchical) {
    if (n < 2 || n > kMaxChainExponent) {
        throw InvalidArgument("chain exponent N must lie in [2, " + std::to_string(kMaxChainExponent) + "]");
    }
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("transmittance must lie in [0, 1]");
    }
    detail::require_cat_amplitude(alpha, "run_chain");
    detail::require_cat_amplitude(beta, "run_chain");

    const int locations = 1 << n;
    const int pairs = locations / 2;
    const ModeId first = location_mode(0);
    const ModeId last = location_mode(locations - 1);
    const PureState ideal = qbs_state(alpha_prime(alpha), first, last);

    ChainReport report;
    report.n = n;
    report.location_count = locations;
    report.swap_count = pairs - 1;

    if (eta == 0.0) {
        // Same eta -> 0+ limit as lossy_swap_pipeline: the end locations are in vacuum.
        report.per_swap_weights.assign(static_cast<std::size_t>(pairs - 1), 0.0);
        report.final_state = to_density(vacuum({first, last}));
        report.entropy = reduced_linear_entropy(report.final_state, first);
        report.fidelity_vs_ideal_qbs = expectation(report.final_state, ideal).real();
        return report;
    }

    auto elementary = [&](int p) {
        const ModeId x = location_mode(2 * p);
        const ModeId y = location_mode(2 * p + 1);
        PureState s = entangle_pair(alpha, x, y);
        s = loss_apply(s, pure_loss(eta, x, environment_mode(2 * p)));
        return loss_apply(s, pure_loss(eta, y, environment_mode(2 * p + 1)));
    };
    // Joins a segment ending at location 2*mid - 1 with one starting at 2*mid.
    auto join = [&](const PureState &left, const PureState &right, int mid) {
        auto outcome = qbsm_project(tensor(left, right), location_mode(2 * mid - 1), location_mode(2 * mid), beta);
        report.per_swap_weights.push_back(outcome.success_weight);
        return std::move(outcome.normalized);
    };

    PureState end_to_end;
    switch (order) {
        case SwapOrder::Hierarchical: {
            std::function<PureState(int, int)> segment = [&](int lo, int hi) -> PureState {
                if (hi - lo == 1) {
                    return elementary(lo);
                }
                const int mid = (lo + hi) / 2;
                PureState left = segment(lo, mid);
                PureState right = segment(mid, hi);
                return join(left, right, mid);
            };
            end_to_end = segment(0, pairs);
            break;
        }
        case SwapOrder::LeftToRight: {
            end_to_end = elementary(0);
            for (int p = 1; p < pairs; ++p) {
                end_to_end = join(end_to_end, elementary(p), p);
            }
            break;
        }
        case SwapOrder::RightToLeft: {
            end_to_end = elementary(pairs - 1);
            for (int p = pairs - 2; p >= 0; --p) {
                end_to_end = join(elementary(p), end_to_end, p + 1);
            }
            break;
        }
    }

    report.final_state = normalize_trace(reduce_to(to_density(end_to_end), {first, last}));
    report.entropy = reduced_linear_entropy(report.final_state, first);
    report.fidelity_vs_ideal_qbs = expectation(report.final_state, ideal).real();
    return report;
}

}  // namespace catrep
