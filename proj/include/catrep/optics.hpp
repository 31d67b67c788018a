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

#include <cmath>
#include <optional>

#include "catrep/cs_algebra.hpp"

namespace catrep {

/// Two-mode beam splitter exp(theta (a b^dag - a^dag b)); cos^2(theta) is the transmissivity.
struct BeamSplitterParams {
    double theta = 0.0;
    ModeId mode_a;
    ModeId mode_b;
};

/// Pure-loss channel on `sys_mode`: the signal is split against a fresh vacuum `env_mode`.
struct ChannelParams {
    double eta = 1.0;
    ModeId sys_mode;
    ModeId env_mode;
    /// Optional propagation length and attenuation length the transmittance came from.
    std::optional<double> length;
    std::optional<double> attenuation_length;
};

/// Transmittance exp(-L / L_att) of a fibre of length L.
inline double eta_from_distance(double length, double attenuation_length) {
    if (!(attenuation_length > 0)) {
        throw InvalidArgument("attenuation length must be positive");
    }
    if (!(length >= 0)) {
        throw InvalidArgument("propagation length must be non-negative");
    }
    return std::exp(-length / attenuation_length);
}

inline ChannelParams pure_loss(double eta, ModeId sys, ModeId env) {
    return {eta, std::move(sys), std::move(env), std::nullopt, std::nullopt};
}

inline ChannelParams channel_from_distance(double length, double attenuation_length, ModeId sys, ModeId env) {
    return {eta_from_distance(length, attenuation_length), std::move(sys), std::move(env), length, attenuation_length};
}

/// Each term's amplitudes (x, y) on (mode_a, mode_b) become
/// (x cos(theta) - y sin(theta), x sin(theta) + y cos(theta)); coefficients untouched.
inline PureState bs_apply(const PureState &x, const BeamSplitterParams &p) {
    if (p.mode_a == p.mode_b) {
        throw ModeError("beam splitter needs two distinct modes");
    }
    const std::size_t ia = x.index_of(p.mode_a);
    const std::size_t ib = x.index_of(p.mode_b);
    const double c = std::cos(p.theta);
    const double s = std::sin(p.theta);
    auto terms = x.terms();
    for (auto &t : terms) {
        const Complex a = t.amps[ia];
        const Complex b = t.amps[ib];
        t.amps[ia] = a * c - b * s;
        t.amps[ib] = a * s + b * c;
    }
    return PureState(x.modes(), std::move(terms));
}

/// Appends `env_mode` and splits each term's system amplitude a into
/// (a sqrt(eta) on the system, a sqrt(1 - eta) on the environment).
inline PureState loss_apply(const PureState &x, const ChannelParams &p) {
    if (!(p.eta >= 0.0 && p.eta <= 1.0)) {
        throw InvalidArgument("transmittance must lie in [0, 1]");
    }
    if (x.has_mode(p.env_mode)) {
        throw ModeError("environment mode '" + p.env_mode.label() + "' already present");
    }
    const std::size_t is = x.index_of(p.sys_mode);
    const double kept = std::sqrt(p.eta);
    const double lost = std::sqrt(1.0 - p.eta);
    ModeList modes = x.modes();
    modes.push_back(p.env_mode);
    auto terms = x.terms();
    for (auto &t : terms) {
        const Complex a = t.amps[is];
        t.amps[is] = a * kept;
        t.amps.push_back(a * lost);
    }
    return PureState(std::move(modes), std::move(terms));
}

}  // namespace catrep
