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

// Parameter grids and deterministic CSV tables for the entropy and fidelity
// sweeps. Grid points are independent and may be evaluated on several
// threads; rows are always assembled in grid order.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "catrep/metrics.hpp"

namespace catrep {

enum class SweepCase { Entropy, Fig4a, Fig4b, Fig4c, Custom };

inline std::string case_name(SweepCase c) {
    switch (c) {
        case SweepCase::Entropy: return "entropy";
        case SweepCase::Fig4a: return "fig4a";
        case SweepCase::Fig4b: return "fig4b";
        case SweepCase::Fig4c: return "fig4c";
        case SweepCase::Custom: return "custom";
    }
    return "unknown";
}

inline SweepCase parse_case(const std::string &s) {
    for (auto c : {SweepCase::Entropy, SweepCase::Fig4a, SweepCase::Fig4b, SweepCase::Fig4c, SweepCase::Custom}) {
        if (case_name(c) == s) {
            return c;
        }
    }
    throw InvalidArgument("unknown case '" + s + "'");
}

/// Custom fidelity target in units of alpha' (amplitudes) plus the relative phase.
struct RelativeTarget {
    double beta = 1.0;
    double gamma = -1.0;
    double omega = -1.0;
    double mu = 1.0;
    double phi = std::numbers::pi;

    FidelityTarget at(double ap) const { return {beta * ap, gamma * ap, omega * ap, mu * ap, phi}; }
};

struct SweepSpec {
    double alpha_min = 0.05;
    double alpha_max = 3.0;
    int alpha_steps = 60;
    std::vector<double> etas{0.1, 0.4, 0.7, 1.0};
    SweepCase sweep_case = SweepCase::Fig4a;
    std::optional<RelativeTarget> custom_target;
    /// QBSM amplitude; alpha / sqrt(2) at each grid point when unset.
    std::optional<double> beta;
    std::string output_path;
};

struct Tolerances {
    /// Maximum allowed |engine - oracle|.
    double oracle = 1e-8;
    /// |engine - transcription| above this raises the audit flag.
    double discrepancy = 1e-6;
};

inline void validate(const SweepSpec &spec) {
    if (!(spec.alpha_min > 0)) {
        throw InvalidArgument("alpha-min must be positive");
    }
    if (!(spec.alpha_max >= spec.alpha_min)) {
        throw InvalidArgument("alpha-max must not be below alpha-min");
    }
    if (spec.alpha_steps < 2) {
        throw InvalidArgument("alpha-steps must be at least 2");
    }
    if (spec.etas.empty()) {
        throw InvalidArgument("eta list is empty");
    }
    for (double eta : spec.etas) {
        if (!(eta >= 0.0 && eta <= 1.0)) {
            throw InvalidArgument("every eta must lie in [0, 1]");
        }
    }
    if (spec.beta && !(std::abs(*spec.beta) > kMinCatAmplitude)) {
        throw InvalidArgument("beta must be non-zero");
    }
    if (spec.sweep_case == SweepCase::Custom && !spec.custom_target) {
        throw InvalidArgument("case 'custom' needs a target");
    }
}

/// alpha_min + k (alpha_max - alpha_min) / (steps - 1), k = 0 .. steps - 1.
inline std::vector<double> alpha_grid(const SweepSpec &spec) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(spec.alpha_steps));
    const double step = (spec.alpha_max - spec.alpha_min) / (spec.alpha_steps - 1);
    for (int k = 0; k < spec.alpha_steps; ++k) {
        out.push_back(k + 1 == spec.alpha_steps ? spec.alpha_max : spec.alpha_min + k * step);
    }
    return out;
}

struct GridPoint {
    double alpha;
    double eta;
};

/// Points ordered by eta (in list order), then by increasing alpha.
inline std::vector<GridPoint> grid_points(const SweepSpec &spec) {
    std::vector<GridPoint> out;
    const auto alphas = alpha_grid(spec);
    for (double eta : spec.etas) {
        for (double a : alphas) {
            out.push_back({a, eta});
        }
    }
    return out;
}

inline FidelityTarget case_target(const SweepSpec &spec, double ap) {
    switch (spec.sweep_case) {
        case SweepCase::Fig4a: return fig4a_target(ap);
        case SweepCase::Fig4b: return fig4b_target(ap);
        case SweepCase::Fig4c: return fig4c_target(ap);
        case SweepCase::Custom: return spec.custom_target.value().at(ap);
        case SweepCase::Entropy: break;
    }
    throw InvalidArgument("case '" + case_name(spec.sweep_case) + "' has no fidelity target");
}

inline Complex point_beta(const SweepSpec &spec, double alpha) {
    return spec.beta ? Complex(*spec.beta) : Complex(alpha_prime(alpha));
}

/// out[i] = fn(i), evaluated on up to `threads` workers; order never depends on scheduling.
template <typename Fn>
auto parallel_map(std::size_t n, int threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<std::optional<T>> slots(n);
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, std::max<std::size_t>(n, 1));
    auto work = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    std::vector<T> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (errors[i]) {
            std::rethrow_exception(errors[i]);
        }
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

/// 12 significant digits, '.' separator, no negative zero.
inline std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

inline void write_csv(std::ostream &os, const Table &t) {
    auto line = [&](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    };
    line(t.header);
    for (const auto &r : t.rows) {
        line(r);
    }
}

inline Table entropy_sweep(const SweepSpec &spec, int threads = 1) {
    validate(spec);
    const auto points = grid_points(spec);
    auto rows = parallel_map(points.size(), threads, [&](std::size_t i) {
        const auto [a, eta] = points[i];
        const double engine = entropy_AD(a, eta, point_beta(spec, a));
        const double paper = paper_entropy_formula(a, eta);
        return std::vector<std::string>{format_number(a), format_number(eta), format_number(engine),
                                        format_number(paper)};
    });
    return {{"alpha", "eta", "engine_S", "paper_eq18_S"}, std::move(rows)};
}

inline Table fidelity_sweep(const SweepSpec &spec, int threads = 1) {
    validate(spec);
    if (spec.sweep_case == SweepCase::Entropy) {
        throw InvalidArgument("fidelity-sweep needs a fidelity case");
    }
    const auto points = grid_points(spec);
    auto rows = parallel_map(points.size(), threads, [&](std::size_t i) {
        const auto [a, eta] = points[i];
        const FidelityTarget t = case_target(spec, alpha_prime(a));
        const double engine = fidelity_AD(a, eta, t, point_beta(spec, a));
        const double paper = paper_fidelity_formula(a, eta, t);
        return std::vector<std::string>{format_number(a), format_number(eta), format_number(engine),
                                        format_number(paper)};
    });
    return {{"alpha", "eta", "engine_F", "paper_eq19_F"}, std::move(rows)};
}

}  // namespace catrep
