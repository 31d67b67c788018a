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

// Repeater building blocks: odd cat preparation, quasi-Bell state (QBS)
// production on a 50:50 beam splitter, and the quasi-Bell-state measurement
// (QBSM) that swaps entanglement onto the outer modes.

#pragma once

#include <cmath>
#include <numbers>

#include "catrep/cs_algebra.hpp"
#include "catrep/optics.hpp"

namespace catrep {

/// Amplitudes below this make a cat or QBS degenerate (its two branches coincide).
inline constexpr double kMinCatAmplitude = 1e-8;
/// Projection weights below this are treated as a failed post-selection.
inline constexpr double kDegenerateWeight = 1e-30;

namespace detail {

inline void require_cat_amplitude(Complex alpha, const char *what) {
    if (!(std::abs(alpha) > kMinCatAmplitude)) {
        throw DegenerateState(std::string(what) + ": amplitude too small for a cat superposition");
    }
}

}  // namespace detail

/// (|alpha> - |-alpha>) / sqrt(N), with N obtained from the state's own norm.
inline PureState odd_cat(Complex alpha, const ModeId &mode) {
    detail::require_cat_amplitude(alpha, "odd_cat");
    PureState raw({mode}, {{1.0, {alpha}}, {-1.0, {-alpha}}});
    return normalize(raw);
}

/// (|a>|a> - |-a>|-a>) / sqrt(N) on (mode_x, mode_y).
inline PureState qbs_state(Complex alpha_prime, const ModeId &mode_x, const ModeId &mode_y) {
    detail::require_cat_amplitude(alpha_prime, "qbs_state");
    PureState raw({mode_x, mode_y}, {{1.0, {alpha_prime, alpha_prime}}, {-1.0, {-alpha_prime, -alpha_prime}}});
    return normalize(raw);
}

/// Odd cat on mode_a and vacuum on mode_b sent through a 50:50 beam splitter.
inline PureState entangle_pair(Complex alpha, const ModeId &mode_a, const ModeId &mode_b) {
    const PureState input = tensor(odd_cat(alpha, mode_a), vacuum({mode_b}));
    return bs_apply(input, {std::numbers::pi / 4, mode_a, mode_b});
}

struct QbsmOutcome {
    /// <QBS|_{BC} x, unnormalized, over x's remaining modes.
    PureState residual;
    /// Squared norm of the residual.
    double success_weight = 0.0;
    PureState normalized;
};

struct MixedQbsmOutcome {
    /// <QBS|_{BC} rho |QBS>_{BC}, unnormalized.
    MixedState residual;
    double success_weight = 0.0;
    MixedState normalized;
};

namespace detail {

inline std::vector<std::size_t> remaining_indices(const ModeList &modes, std::size_t ib, std::size_t ic) {
    std::vector<std::size_t> keep;
    for (std::size_t k = 0; k < modes.size(); ++k) {
        if (k != ib && k != ic) {
            keep.push_back(k);
        }
    }
    return keep;
}

inline Amplitudes pick(const Amplitudes &amps, const std::vector<std::size_t> &idx) {
    Amplitudes out;
    out.reserve(idx.size());
    for (auto k : idx) {
        out.push_back(amps[k]);
    }
    return out;
}

inline ModeList pick_modes(const ModeList &modes, const std::vector<std::size_t> &idx) {
    ModeList out;
    out.reserve(idx.size());
    for (auto k : idx) {
        out.push_back(modes[k]);
    }
    return out;
}

}  // namespace detail

/// Projects modes (mode_b, mode_c) of x onto the quasi-Bell state with amplitude beta.
inline QbsmOutcome qbsm_project(const PureState &x, const ModeId &mode_b, const ModeId &mode_c, Complex beta) {
    if (mode_b == mode_c) {
        throw ModeError("QBSM needs two distinct modes");
    }
    const std::size_t ib = x.index_of(mode_b);
    const std::size_t ic = x.index_of(mode_c);
    const PureState probe = qbs_state(beta, mode_b, mode_c);
    const auto keep = detail::remaining_indices(x.modes(), ib, ic);

    std::vector<CoherentTerm> terms;
    terms.reserve(x.term_count());
    for (const auto &t : x.terms()) {
        Complex c = 0;
        for (const auto &q : probe.terms()) {
            c += std::conj(q.coeff) * t.coeff *
                 std::exp(overlap_exponent(q.amps[0], t.amps[ib]) + overlap_exponent(q.amps[1], t.amps[ic]));
        }
        terms.push_back({c, detail::pick(t.amps, keep)});
    }
    PureState residual = merge_terms(PureState(detail::pick_modes(x.modes(), keep), std::move(terms)));
    const double weight = inner(residual, residual).real();
    if (!(weight > kDegenerateWeight)) {
        throw DegenerateProjection("QBSM success weight vanished");
    }
    PureState normalized = scale(residual, 1.0 / std::sqrt(weight));
    return {std::move(residual), weight, std::move(normalized)};
}

/// Mixed-state QBSM: <QBS| rho |QBS> on (mode_b, mode_c), renormalized by its trace.
inline MixedQbsmOutcome qbsm_project(const MixedState &rho, const ModeId &mode_b, const ModeId &mode_c, Complex beta) {
    if (mode_b == mode_c) {
        throw ModeError("QBSM needs two distinct modes");
    }
    const std::size_t ib = rho.index_of(mode_b);
    const std::size_t ic = rho.index_of(mode_c);
    const PureState probe = qbs_state(beta, mode_b, mode_c);
    const auto keep = detail::remaining_indices(rho.modes(), ib, ic);

    std::vector<Dyad> dyads;
    dyads.reserve(rho.dyad_count());
    for (const auto &d : rho.dyads()) {
        Complex left = 0;
        Complex right = 0;
        for (const auto &q : probe.terms()) {
            left += std::conj(q.coeff) * std::exp(overlap_exponent(q.amps[0], d.ket[ib]) + overlap_exponent(q.amps[1], d.ket[ic]));
            right += q.coeff * std::exp(overlap_exponent(d.bra[ib], q.amps[0]) + overlap_exponent(d.bra[ic], q.amps[1]));
        }
        dyads.push_back({d.coeff * left * right, detail::pick(d.ket, keep), detail::pick(d.bra, keep)});
    }
    MixedState residual = merge_dyads(MixedState(detail::pick_modes(rho.modes(), keep), std::move(dyads)));
    const double weight = trace(residual).real();
    if (!(weight > kDegenerateWeight)) {
        throw DegenerateProjection("QBSM success weight vanished");
    }
    MixedState normalized = scale(residual, 1.0 / weight);
    return {std::move(residual), weight, std::move(normalized)};
}

}  // namespace catrep
