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

// Entanglement and quality metrics on coherent-state density operators, the
// lossy two-pair swap pipeline, and verbatim transcriptions of the published
// closed forms for entropy and fidelity (kept apart from the engine so the
// two can be compared).

#pragma once

#include <cmath>
#include <numbers>
#include <optional>

#include "catrep/cs_algebra.hpp"
#include "catrep/optics.hpp"
#include "catrep/protocol.hpp"

namespace catrep {

/// Traces below/above 1 by more than this are rejected by purity().
inline constexpr double kTraceGuard = 1e-8;

/// Removes `traced` modes; each dyad picks up prod_k <bra_k|ket_k> over them.
inline MixedState partial_trace(const MixedState &rho, const ModeList &traced) {
    std::vector<bool> drop(rho.mode_count(), false);
    for (const auto &m : traced) {
        drop[rho.index_of(m)] = true;
    }
    ModeList modes;
    for (std::size_t k = 0; k < rho.mode_count(); ++k) {
        if (!drop[k]) {
            modes.push_back(rho.modes()[k]);
        }
    }
    std::vector<Dyad> dyads;
    dyads.reserve(rho.dyad_count());
    for (const auto &d : rho.dyads()) {
        Complex e = 0;
        Dyad out{d.coeff, {}, {}};
        for (std::size_t k = 0; k < rho.mode_count(); ++k) {
            if (drop[k]) {
                e += overlap_exponent(d.bra[k], d.ket[k]);
            } else {
                out.ket.push_back(d.ket[k]);
                out.bra.push_back(d.bra[k]);
            }
        }
        out.coeff *= std::exp(e);
        dyads.push_back(std::move(out));
    }
    return merge_dyads(MixedState(std::move(modes), std::move(dyads)));
}

/// Reduced operator on `kept` (in rho's mode order).
inline MixedState reduce_to(const MixedState &rho, const ModeList &kept) {
    for (const auto &m : kept) {
        (void)rho.index_of(m);
    }
    ModeList traced;
    for (const auto &m : rho.modes()) {
        if (std::find(kept.begin(), kept.end(), m) == kept.end()) {
            traced.push_back(m);
        }
    }
    return partial_trace(rho, traced);
}

/// Tr(rho^2) = sum_ij w_i w_j <b_i|a_j> <b_j|a_i>.
inline double purity(const MixedState &rho) {
    const Complex t = trace(rho);
    if (std::abs(t - 1.0) > kTraceGuard) {
        throw NumericGuard("purity: operator trace " + detail::format17(t.real()) + " is not 1");
    }
    Complex s = 0;
    for (const auto &di : rho.dyads()) {
        for (const auto &dj : rho.dyads()) {
            s += di.coeff * dj.coeff * overlap(di.bra, dj.ket) * overlap(dj.bra, di.ket);
        }
    }
    return s.real();
}

/// S = 1 - Tr(rho^2).
inline double linear_entropy(const MixedState &rho) { return 1.0 - purity(rho); }

/// Linear entropy of the reduced state on a single mode.
inline double reduced_linear_entropy(const MixedState &rho, const ModeId &mode) {
    return linear_entropy(reduce_to(rho, {mode}));
}

/// <phi| rho |phi> for a pure phi over the same mode list.
inline Complex expectation(const MixedState &rho, const PureState &phi) {
    if (rho.modes() != phi.modes()) {
        throw ModeError("expectation: mode lists differ");
    }
    Complex s = 0;
    for (const auto &d : rho.dyads()) {
        Complex left = 0;
        Complex right = 0;
        for (const auto &t : phi.terms()) {
            left += std::conj(t.coeff) * overlap(t.amps, d.ket);
            right += t.coeff * overlap(d.bra, t.amps);
        }
        s += d.coeff * left * right;
    }
    return s;
}

/// Two-mode target (|beta>|gamma> + e^{i phi} |omega>|mu>) / sqrt(L).
struct FidelityTarget {
    Complex beta;
    Complex gamma;
    Complex omega;
    Complex mu;
    double phi = 0.0;
};

/// Normalized target over (mode_a, mode_d); L comes from the norm, never a closed form.
inline PureState target_state(const FidelityTarget &t, const ModeId &mode_a, const ModeId &mode_d) {
    PureState raw({mode_a, mode_d}, {{1.0, {t.beta, t.gamma}}, {std::polar(1.0, t.phi), {t.omega, t.mu}}});
    try {
        return normalize(raw);
    } catch (const DegenerateState &) {
        throw DegenerateState("fidelity target has vanishing normalization L");
    }
}

/// F = <Phi| rho |Phi> for a two-mode rho.
inline double fidelity(const MixedState &rho, const FidelityTarget &target) {
    if (rho.mode_count() != 2) {
        throw ModeError("fidelity expects a two-mode operator");
    }
    return expectation(rho, target_state(target, rho.modes()[0], rho.modes()[1])).real();
}

// Figure presets, expressed through alpha' = alpha / sqrt(2).

inline FidelityTarget fig4a_target(Complex ap) { return {ap, ap, -ap, -ap, std::numbers::pi}; }
inline FidelityTarget fig4b_target(Complex ap) { return {ap, ap, -ap, -ap, 0.0}; }
inline FidelityTarget fig4c_target(Complex ap) { return {ap, -ap, -ap, ap, 0.0}; }
/// Antisymmetric target with zero overlap on any A<->D symmetric state.
inline FidelityTarget zero_fidelity_target(Complex ap) { return {ap, -ap, -ap, ap, std::numbers::pi}; }

inline double alpha_prime(double alpha) { return alpha / std::numbers::sqrt2; }
inline Complex alpha_prime(Complex alpha) { return alpha / std::numbers::sqrt2; }

/// Swapped state of two lossy QBS pairs.
struct LossySwapResult {
    /// Normalized post-selected pure state over A, E1, E2, D, E1', E2'
    /// (absent at eta = 0, where only the limit operator is defined).
    std::optional<PureState> post_selected;
    double success_weight = 0.0;
    /// Unit-trace operator over (A, D) after the environments are traced out.
    MixedState rho_ad;
};

/// QBS pairs on (A,B) and (C,D), loss eta on all four modes, QBSM on (B,C),
/// environments traced. beta defaults to alpha / sqrt(2).
///
/// At eta = 0 every system amplitude is zero and the projection weight is
/// exactly zero. The normalized post-selected state still has a limit as
/// eta -> 0+ in which A and D are in vacuum, so rho_ad = |0,0><0,0| is
/// returned with weight 0.
inline LossySwapResult lossy_swap_pipeline(Complex alpha, double eta, std::optional<Complex> beta = std::nullopt) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("transmittance must lie in [0, 1]");
    }
    const Complex b = beta.value_or(alpha_prime(alpha));
    detail::require_cat_amplitude(alpha, "lossy_swap_pipeline");
    detail::require_cat_amplitude(b, "lossy_swap_pipeline");
    if (eta == 0.0) {
        return {std::nullopt, 0.0, to_density(vacuum({"A", "D"}))};
    }

    auto lossy_pair = [&](const ModeId &x, const ModeId &y, const ModeId &ex, const ModeId &ey) {
        PureState s = entangle_pair(alpha, x, y);
        s = loss_apply(s, pure_loss(eta, x, ex));
        return loss_apply(s, pure_loss(eta, y, ey));
    };
    const PureState ab = lossy_pair("A", "B", "E1", "E2");
    const PureState cd = lossy_pair("C", "D", "E1'", "E2'");

    auto outcome = qbsm_project(tensor(ab, cd), "B", "C", b);
    MixedState rho = partial_trace(to_density(outcome.normalized), {"E1", "E2", "E1'", "E2'"});
    return {std::move(outcome.normalized), outcome.success_weight, normalize_trace(rho)};
}

/// Engine linear entropy of A for the lossy swapped state (A versus D and environments).
inline double entropy_AD(Complex alpha, double eta, std::optional<Complex> beta = std::nullopt) {
    return reduced_linear_entropy(lossy_swap_pipeline(alpha, eta, beta).rho_ad, "A");
}

/// Engine fidelity of the lossy swapped (A, D) state with `target`.
inline double fidelity_AD(Complex alpha, double eta, const FidelityTarget &target,
                          std::optional<Complex> beta = std::nullopt) {
    return fidelity(lossy_swap_pipeline(alpha, eta, beta).rho_ad, target);
}

/// Published closed form for the entropy, transcribed as printed (alpha real).
inline double paper_entropy_formula(double alpha, double eta) {
    const double a2 = alpha * alpha;
    const double ap2 = a2 / 2.0;
    const double n_prime = 2.0 * (1.0 - std::exp(4.0 * (eta - 2.0) * ap2));
    if (!(std::abs(n_prime) > kDegenerateNorm)) {
        throw DegenerateState("entropy formula: vanishing normalization");
    }
    const double bracket = 1.0 - 4.0 * std::exp(-4.0 * a2) * std::exp(2.0 * eta * a2) +
                           std::exp(-8.0 * a2) * std::exp(6.0 * eta * a2) + std::exp(-2.0 * eta * a2) +
                           std::exp(-8.0 * a2) * std::exp(4.0 * eta * a2);
    return 1.0 - (2.0 / n_prime) * bracket;
}

/// Published closed form for the fidelity, transcribed as printed, with
/// sigma = alpha' sqrt(eta).
inline double paper_fidelity_formula(double alpha, double eta, const FidelityTarget &t) {
    const double ap = alpha / std::numbers::sqrt2;
    const double ap2 = ap * ap;
    const double sigma = ap * std::sqrt(eta);
    const double n_prime = 2.0 * (1.0 - std::exp(4.0 * (eta - 2.0) * ap2));
    const double el = 2.0 * (1.0 + std::exp(-0.5 * std::norm(t.beta - t.omega)) *
                                       std::exp(-0.5 * std::norm(t.gamma - t.mu)) * std::cos(t.phi));
    if (!(std::abs(el) > kDegenerateNorm) || !(std::abs(n_prime) > kDegenerateNorm)) {
        throw DegenerateState("fidelity formula: vanishing normalization");
    }
    const double decay = std::exp(-8.0 * (1.0 - eta) * ap2);
    // e^{-|z|^2} and e^{-|z|^2 / 2}
    auto full = [](Complex z) { return std::exp(-std::norm(z)); };
    auto half = [](Complex z) { return std::exp(-0.5 * std::norm(z)); };
    const Complex b = t.beta, g = t.gamma, w = t.omega, m = t.mu;
    const double s = sigma;

    const double sum = full(b - s) * full(g - s) + full(b + s) * full(g + s) -
                       2.0 * half(b - s) * half(b + s) * half(g - s) * half(g + s) * decay +
                       2.0 * std::cos(t.phi) *
                           (half(b - s) * half(w - s) * half(g - s) * half(m - s) +
                            half(b + s) * half(w + s) * half(g + s) * half(m + s) -
                            (half(b - s) * half(w + s) * half(g - s) * half(m + s) +
                             half(b + s) * half(w - s) * half(g + s) * half(m - s)) *
                                decay) +
                       full(w - s) * full(m - s) + full(w + s) * full(m + s) -
                       2.0 * half(w - s) * half(w + s) * half(m - s) * half(m + s) * decay;
    return sum / (el * n_prime);
}

}  // namespace catrep
