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

// Brute-force verifier in a truncated number basis. Nothing here reuses the
// coherent-state closed forms: states are expanded in |n>, the beam splitter
// is the matrix exponential of its generator, and loss is that beam splitter
// acting against an ancilla vacuum followed by a partial trace.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "catrep/cs_algebra.hpp"
#include "catrep/metrics.hpp"

namespace catrep::fock {

/// Largest dense vector/matrix the oracle will allocate, in complex entries.
inline constexpr std::size_t kMaxEntries = std::size_t{1} << 26;
/// Probability mass a coherent expansion may lose beyond the cutoff.
inline constexpr double kTailBudget = 1e-12;

/// Cutoff that keeps coherent tails below kTailBudget for |alpha| <= max_abs_alpha.
inline int cutoff_rule(double max_abs_alpha) {
    const double a2 = max_abs_alpha * max_abs_alpha;
    return static_cast<int>(std::ceil(a2 + 10.0 * std::sqrt(a2 + 1.0) + 20.0));
}

/// P(n > cutoff) for the Poisson photon distribution of |alpha>.
inline double coherent_tail_mass(Complex alpha, int cutoff) {
    const double mean = std::norm(alpha);
    if (mean == 0.0) {
        return 0.0;
    }
    // Start at n = cutoff + 1 in log space, then walk the recurrence until negligible.
    double n = cutoff + 1.0;
    double p = std::exp(-mean + n * std::log(mean) - std::lgamma(n + 1.0));
    double tail = 0.0;
    for (int guard = 0; guard < 100000; ++guard) {
        tail += p;
        n += 1.0;
        p *= mean / n;
        if (p < 1e-40 || (n > mean && p < tail * 1e-18)) {
            break;
        }
    }
    return tail;
}

namespace detail {

inline std::size_t checked_power(std::size_t base, std::size_t exp) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (out > kMaxEntries / base) {
            throw NumericGuard("Fock space too large: exceeds the 2^26-entry memory guard");
        }
        out *= base;
    }
    return out;
}

inline void check_cutoff(int cutoff) {
    if (cutoff < 0) {
        throw InvalidArgument("cutoff must be non-negative");
    }
}

}  // namespace detail

/// Truncated number-basis coefficients of |alpha>; throws if the tail is too heavy.
inline Eigen::VectorXcd coherent_vector(Complex alpha, int cutoff) {
    detail::check_cutoff(cutoff);
    const double tail = coherent_tail_mass(alpha, cutoff);
    if (tail > kTailBudget) {
        throw NumericGuard("cutoff " + std::to_string(cutoff) + " too small for amplitude |alpha| = " +
                           catrep::detail::format17(std::abs(alpha)) + " (tail mass " +
                           catrep::detail::format17(tail) + ")");
    }
    Eigen::VectorXcd v(cutoff + 1);
    Complex c = std::exp(-0.5 * std::norm(alpha));
    for (int n = 0; n <= cutoff; ++n) {
        v[n] = c;
        c *= alpha / std::sqrt(static_cast<double>(n + 1));
    }
    return v;
}

/// Dense pure state; index digits run over modes in order, first mode most significant.
class FockState {
   public:
    FockState(int cutoff, ModeList modes) : cutoff_(cutoff), modes_(std::move(modes)) {
        detail::check_cutoff(cutoff);
        catrep::detail::check_unique(modes_);
        amps_ = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(detail::checked_power(dim_per_mode(), modes_.size())));
    }
    FockState(int cutoff, ModeList modes, Eigen::VectorXcd amps) : FockState(cutoff, std::move(modes)) {
        if (amps.size() != amps_.size()) {
            throw NumericGuard("Fock amplitude vector has the wrong length");
        }
        amps_ = std::move(amps);
    }

    int cutoff() const { return cutoff_; }
    std::size_t dim_per_mode() const { return static_cast<std::size_t>(cutoff_) + 1; }
    const ModeList &modes() const { return modes_; }
    std::size_t index_of(const ModeId &m) const { return catrep::detail::find_mode(modes_, m); }
    const Eigen::VectorXcd &amplitudes() const { return amps_; }
    Eigen::VectorXcd &amplitudes() { return amps_; }
    std::size_t stride(std::size_t mode_index) const {
        std::size_t s = 1;
        for (std::size_t k = mode_index + 1; k < modes_.size(); ++k) {
            s *= dim_per_mode();
        }
        return s;
    }

   private:
    int cutoff_;
    ModeList modes_;
    Eigen::VectorXcd amps_;
};

/// Dense density matrix over the same index layout as FockState.
class FockDensity {
   public:
    FockDensity(int cutoff, ModeList modes, Eigen::MatrixXcd matrix)
        : cutoff_(cutoff), modes_(std::move(modes)), matrix_(std::move(matrix)) {
        catrep::detail::check_unique(modes_);
        const auto dim = detail::checked_power(static_cast<std::size_t>(cutoff_) + 1, modes_.size());
        if (static_cast<std::size_t>(matrix_.rows()) != dim || matrix_.rows() != matrix_.cols()) {
            throw NumericGuard("Fock density has the wrong shape");
        }
    }

    int cutoff() const { return cutoff_; }
    const ModeList &modes() const { return modes_; }
    const Eigen::MatrixXcd &matrix() const { return matrix_; }
    std::size_t index_of(const ModeId &m) const { return catrep::detail::find_mode(modes_, m); }

   private:
    int cutoff_;
    ModeList modes_;
    Eigen::MatrixXcd matrix_;
};

inline Complex fock_inner(const FockState &x, const FockState &y) {
    if (x.modes() != y.modes() || x.cutoff() != y.cutoff()) {
        throw ModeError("fock_inner: layouts differ");
    }
    return x.amplitudes().dot(y.amplitudes());
}

inline double fock_norm(const FockState &x) { return x.amplitudes().norm(); }

inline FockState fock_vacuum(ModeList modes, int cutoff) {
    FockState s(cutoff, std::move(modes));
    s.amplitudes()[0] = 1.0;
    return s;
}

inline FockState fock_tensor(const FockState &x, const FockState &y) {
    if (x.cutoff() != y.cutoff()) {
        throw ModeError("fock_tensor: cutoffs differ");
    }
    ModeList modes = x.modes();
    modes.insert(modes.end(), y.modes().begin(), y.modes().end());
    FockState out(x.cutoff(), std::move(modes));
    const auto ny = y.amplitudes().size();
    for (Eigen::Index i = 0; i < x.amplitudes().size(); ++i) {
        out.amplitudes().segment(i * ny, ny) = x.amplitudes()[i] * y.amplitudes();
    }
    return out;
}

/// Expands every coherent term in the number basis.
inline FockState encode(const PureState &x, int cutoff) {
    FockState out(cutoff, x.modes());
    for (const auto &t : x.terms()) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Constant(1, t.coeff);
        for (const auto &a : t.amps) {
            const Eigen::VectorXcd c = coherent_vector(a, cutoff);
            Eigen::VectorXcd next(v.size() * c.size());
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                next.segment(i * c.size(), c.size()) = v[i] * c;
            }
            v = std::move(next);
        }
        out.amplitudes() += v;
    }
    return out;
}

inline FockDensity encode(const MixedState &rho, int cutoff) {
    const auto dim = detail::checked_power(static_cast<std::size_t>(cutoff) + 1, rho.mode_count());
    detail::checked_power(dim, 2);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &d : rho.dyads()) {
        const auto ket = encode(PureState(rho.modes(), {{1.0, d.ket}}), cutoff).amplitudes();
        const auto bra = encode(PureState(rho.modes(), {{1.0, d.bra}}), cutoff).amplitudes();
        m.noalias() += d.coeff * ket * bra.adjoint();
    }
    return FockDensity(cutoff, rho.modes(), std::move(m));
}

inline FockDensity fock_density(const FockState &x) {
    detail::checked_power(static_cast<std::size_t>(x.amplitudes().size()), 2);
    return FockDensity(x.cutoff(), x.modes(), x.amplitudes() * x.amplitudes().adjoint());
}

/// exp(theta (a b^dag - a^dag b)) split into blocks of fixed total photon number.
class BeamSplitterUnitary {
   public:
    BeamSplitterUnitary(double theta, int cutoff) : theta_(theta), cutoff_(cutoff) {
        detail::check_cutoff(cutoff);
        sectors_.reserve(static_cast<std::size_t>(2 * cutoff + 1));
        for (int n = 0; n <= 2 * cutoff; ++n) {
            sectors_.push_back(sector(n));
        }
    }

    double theta() const { return theta_; }
    int cutoff() const { return cutoff_; }
    /// Block on basis |k, n-k>, k = 0..n (k photons in the first mode).
    const Eigen::MatrixXcd &block(int n) const { return sectors_[static_cast<std::size_t>(n)]; }

   private:
    Eigen::MatrixXcd sector(int n) const {
        // Generator G: a b^dag lowers k, a^dag b raises it. iG is Hermitian.
        Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n + 1, n + 1);
        for (int k = 0; k < n; ++k) {
            const double g = std::sqrt(static_cast<double>(k + 1) * static_cast<double>(n - k));
            h(k, k + 1) = Complex(0.0, g);   // i * G(k, k+1), G(k, k+1) = +g
            h(k + 1, k) = Complex(0.0, -g);  // i * G(k+1, k), G(k+1, k) = -g
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
        // exp(theta G) = exp(-i theta H)
        Eigen::VectorXcd phases(n + 1);
        for (int k = 0; k <= n; ++k) {
            phases[k] = std::polar(1.0, -theta_ * es.eigenvalues()[k]);
        }
        return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    }

    double theta_;
    int cutoff_;
    std::vector<Eigen::MatrixXcd> sectors_;
};

/// Applies the beam splitter on (mode_a, mode_b); amplitude leaking past the cutoff is lost.
inline FockState fock_bs(const FockState &state, const BeamSplitterUnitary &u, const ModeId &mode_a,
                         const ModeId &mode_b) {
    if (u.cutoff() != state.cutoff()) {
        throw InvalidArgument("fock_bs: unitary built for a different cutoff");
    }
    if (mode_a == mode_b) {
        throw ModeError("beam splitter needs two distinct modes");
    }
    const std::size_t ia = state.index_of(mode_a);
    const std::size_t ib = state.index_of(mode_b);
    const std::size_t sa = state.stride(ia);
    const std::size_t sb = state.stride(ib);
    const std::size_t d = state.dim_per_mode();
    const int c = state.cutoff();
    const auto &in = state.amplitudes();
    FockState out(c, state.modes());
    auto &res = out.amplitudes();

    std::vector<Complex> v(d);
    for (std::size_t base = 0; base < static_cast<std::size_t>(in.size()); ++base) {
        if ((base / sa) % d != 0 || (base / sb) % d != 0) {
            continue;
        }
        for (int n = 0; n <= 2 * c; ++n) {
            const int kmin = std::max(0, n - c);
            const int kmax = std::min(n, c);
            bool any = false;
            for (int k = kmin; k <= kmax; ++k) {
                v[k - kmin] = in[static_cast<Eigen::Index>(base + k * sa + (n - k) * sb)];
                any = any || v[k - kmin] != Complex{};
            }
            if (!any) {
                continue;
            }
            const auto &blk = u.block(n);
            for (int k = kmin; k <= kmax; ++k) {
                const Complex x = v[k - kmin];
                if (x == Complex{}) {
                    continue;
                }
                for (int j = kmin; j <= kmax; ++j) {
                    res[static_cast<Eigen::Index>(base + j * sa + (n - j) * sb)] += blk(j, k) * x;
                }
            }
        }
    }
    return out;
}

inline FockState fock_bs(const FockState &state, const ModeId &mode_a, const ModeId &mode_b, double theta) {
    return fock_bs(state, BeamSplitterUnitary(theta, state.cutoff()), mode_a, mode_b);
}

namespace detail {

/// Flat offsets of every digit combination over `mode_idx` (in the given order).
inline std::vector<std::size_t> offsets(const std::vector<std::size_t> &strides, std::size_t d) {
    std::vector<std::size_t> out{0};
    for (auto s : strides) {
        std::vector<std::size_t> next;
        next.reserve(out.size() * d);
        for (auto o : out) {
            for (std::size_t k = 0; k < d; ++k) {
                next.push_back(o + k * s);
            }
        }
        out = std::move(next);
    }
    return out;
}

inline std::vector<std::size_t> strides_of(const ModeList &modes, std::size_t d) {
    std::vector<std::size_t> s(modes.size());
    std::size_t acc = 1;
    for (std::size_t k = modes.size(); k-- > 0;) {
        s[k] = acc;
        acc *= d;
    }
    return s;
}

}  // namespace detail

/// Index-summation partial trace.
inline FockDensity fock_partial_trace(const FockDensity &rho, const ModeList &traced) {
    const std::size_t d = static_cast<std::size_t>(rho.cutoff()) + 1;
    const auto strides = detail::strides_of(rho.modes(), d);
    std::vector<bool> drop(rho.modes().size(), false);
    for (const auto &m : traced) {
        drop[rho.index_of(m)] = true;
    }
    ModeList kept;
    std::vector<std::size_t> kept_strides, traced_strides;
    for (std::size_t k = 0; k < rho.modes().size(); ++k) {
        if (drop[k]) {
            traced_strides.push_back(strides[k]);
        } else {
            kept.push_back(rho.modes()[k]);
            kept_strides.push_back(strides[k]);
        }
    }
    const auto ko = detail::offsets(kept_strides, d);
    const auto to = detail::offsets(traced_strides, d);
    const auto n = static_cast<Eigen::Index>(ko.size());
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
    const auto &m = rho.matrix();
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            Complex s = 0;
            for (auto t : to) {
                s += m(static_cast<Eigen::Index>(ko[i] + t), static_cast<Eigen::Index>(ko[j] + t));
            }
            out(i, j) = s;
        }
    }
    return FockDensity(rho.cutoff(), std::move(kept), std::move(out));
}

inline Complex fock_trace(const FockDensity &rho) { return rho.matrix().trace(); }

inline double fock_purity(const FockDensity &rho) { return (rho.matrix() * rho.matrix()).trace().real(); }

/// target^dag rho target.
inline double fock_fidelity(const FockDensity &rho, const FockState &target) {
    if (rho.modes() != target.modes() || rho.cutoff() != target.cutoff()) {
        throw ModeError("fock_fidelity: layouts differ");
    }
    return target.amplitudes().dot(rho.matrix() * target.amplitudes()).real();
}

/// <q|_{mode_b, mode_c} x for a two-mode q over (mode_b, mode_c); remaining modes keep their order.
inline FockState fock_project(const FockState &x, const FockState &q, const ModeId &mode_b, const ModeId &mode_c) {
    if (q.modes() != ModeList{mode_b, mode_c} || q.cutoff() != x.cutoff()) {
        throw ModeError("fock_project: probe must be a two-mode state over (mode_b, mode_c)");
    }
    const std::size_t d = x.dim_per_mode();
    const std::size_t ib = x.index_of(mode_b);
    const std::size_t ic = x.index_of(mode_c);
    const auto strides = detail::strides_of(x.modes(), d);
    ModeList kept;
    std::vector<std::size_t> kept_strides;
    for (std::size_t k = 0; k < x.modes().size(); ++k) {
        if (k != ib && k != ic) {
            kept.push_back(x.modes()[k]);
            kept_strides.push_back(strides[k]);
        }
    }
    const auto ko = detail::offsets(kept_strides, d);
    FockState out(x.cutoff(), std::move(kept));
    const auto &in = x.amplitudes();
    const auto &qa = q.amplitudes();
    for (std::size_t i = 0; i < ko.size(); ++i) {
        Complex s = 0;
        for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t c = 0; c < d; ++c) {
                s += std::conj(qa[static_cast<Eigen::Index>(b * d + c)]) *
                     in[static_cast<Eigen::Index>(ko[i] + b * strides[ib] + c * strides[ic])];
            }
        }
        out.amplitudes()[static_cast<Eigen::Index>(i)] = s;
    }
    return out;
}

inline FockState fock_normalized(FockState x) {
    const double n = fock_norm(x);
    if (!(n > kDegenerateNorm)) {
        throw DegenerateState("Fock state has vanishing norm");
    }
    x.amplitudes() /= n;
    return x;
}

/// Odd cat from its number expansion, normalized numerically.
inline FockState fock_odd_cat(Complex alpha, const ModeId &mode, int cutoff) {
    Eigen::VectorXcd v = coherent_vector(alpha, cutoff) - coherent_vector(-alpha, cutoff);
    return fock_normalized(FockState(cutoff, {mode}, std::move(v)));
}

/// sum_k c_k |a_k>|b_k> from number expansions, normalized numerically.
inline FockState fock_two_mode(const std::vector<std::pair<Complex, std::pair<Complex, Complex>>> &branches,
                               const ModeId &m1, const ModeId &m2, int cutoff) {
    FockState out(cutoff, {m1, m2});
    for (const auto &[c, amps] : branches) {
        const auto v1 = coherent_vector(amps.first, cutoff);
        const auto v2 = coherent_vector(amps.second, cutoff);
        for (Eigen::Index i = 0; i < v1.size(); ++i) {
            out.amplitudes().segment(i * v2.size(), v2.size()) += c * v1[i] * v2;
        }
    }
    return fock_normalized(std::move(out));
}

inline FockState fock_qbs(Complex amp, const ModeId &m1, const ModeId &m2, int cutoff) {
    return fock_two_mode({{1.0, {amp, amp}}, {-1.0, {-amp, -amp}}}, m1, m2, cutoff);
}

inline FockState fock_target(const FidelityTarget &t, const ModeId &m1, const ModeId &m2, int cutoff) {
    return fock_two_mode({{1.0, {t.beta, t.gamma}}, {std::polar(1.0, t.phi), {t.omega, t.mu}}}, m1, m2, cutoff);
}

/// Odd cat through the 50:50 beam splitter generator exponential.
inline FockState fock_entangle_pair(Complex alpha, const ModeId &mode_a, const ModeId &mode_b, int cutoff) {
    const FockState input = fock_tensor(fock_odd_cat(alpha, mode_a, cutoff), fock_vacuum({mode_b}, cutoff));
    return fock_bs(input, mode_a, mode_b, std::numbers::pi / 4);
}

/// Beam-splitter angle whose transmissivity cos^2 is eta.
inline double loss_angle(double eta) { return std::acos(std::sqrt(eta)); }

/// Beam splitter `u` (built with loss_angle(eta)) against a fresh vacuum `env`, appended last.
inline FockState fock_loss_dilation(const FockState &x, const ModeId &sys, const ModeId &env,
                                    const BeamSplitterUnitary &u) {
    return fock_bs(fock_tensor(x, fock_vacuum({env}, x.cutoff())), u, sys, env);
}

/// Lossy single-mode channel on a density matrix: dilate, rotate, trace the ancilla.
inline FockDensity fock_loss_channel(const FockState &x, const ModeId &sys, const ModeId &env, double eta) {
    const BeamSplitterUnitary u(loss_angle(eta), x.cutoff());
    return fock_partial_trace(fock_density(fock_loss_dilation(x, sys, env, u)), {env});
}

struct FockSwapResult {
    FockDensity rho_ad;
    double success_weight = 0.0;
};

/// Number-basis counterpart of lossy_swap_pipeline. The QBS_BC probe is split
/// by SVD into sum_s s_s |u_s>_B |v_s>_C so the projection factorizes over the
/// two (independent) pairs and the environments are traced right after it.
inline FockSwapResult fock_lossy_swap(Complex alpha, double eta, Complex beta, int cutoff) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw InvalidArgument("transmittance must lie in [0, 1]");
    }
    const Eigen::Index d = cutoff + 1;
    if (eta == 0.0) {
        Eigen::MatrixXcd vac = Eigen::MatrixXcd::Zero(d * d, d * d);
        vac(0, 0) = 1.0;
        return {FockDensity(cutoff, {"A", "D"}, std::move(vac)), 0.0};
    }
    const BeamSplitterUnitary loss(loss_angle(eta), cutoff);
    FockState pair = fock_entangle_pair(alpha, "A", "B", cutoff);
    pair = fock_loss_dilation(pair, "A", "E1", loss);
    pair = fock_loss_dilation(pair, "B", "E2", loss);
    // Layout [A, B, E1, E2]; the (C, D) pair is the same preparation, layout [C, D, E1', E2'].
    const Eigen::Index d2 = d * d;
    const auto &psi = pair.amplitudes();

    const FockState q = fock_qbs(beta, "B", "C", cutoff);
    Eigen::MatrixXcd qm(d, d);
    for (Eigen::Index b = 0; b < d; ++b) {
        for (Eigen::Index c = 0; c < d; ++c) {
            qm(b, c) = q.amplitudes()[b * d + c];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(qm, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();

    // conj(q[b,c]) = sum_s s_s conj(U[b,s]) V[c,s]
    std::vector<Eigen::MatrixXcd> left, right;
    std::vector<double> weights;
    for (Eigen::Index s = 0; s < sv.size(); ++s) {
        if (!(sv[s] > 1e-14 * sv[0])) {
            break;
        }
        Eigen::MatrixXcd phi = Eigen::MatrixXcd::Zero(d, d2);  // [A, (E1,E2)]
        Eigen::MatrixXcd chi = Eigen::MatrixXcd::Zero(d, d2);  // [D, (E1',E2')]
        for (Eigen::Index x = 0; x < d; ++x) {
            for (Eigen::Index y = 0; y < d; ++y) {
                const Complex ub = std::conj(svd.matrixU()(y, s));
                const Complex vc = svd.matrixV()(y, s);
                // psi index: ((x*d + y)*d + e1)*d + e2
                phi.row(x) += ub * psi.segment((x * d + y) * d2, d2).transpose();
                chi.row(x) += vc * psi.segment((y * d + x) * d2, d2).transpose();
            }
        }
        left.push_back(std::move(phi));
        right.push_back(std::move(chi));
        weights.push_back(sv[s]);
    }

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d2, d2);
    for (std::size_t s = 0; s < weights.size(); ++s) {
        for (std::size_t t = 0; t < weights.size(); ++t) {
            const Eigen::MatrixXcd ra = left[s] * left[t].adjoint();
            const Eigen::MatrixXcd rd = right[s] * right[t].adjoint();
            const double w = weights[s] * weights[t];
            for (Eigen::Index a = 0; a < d; ++a) {
                for (Eigen::Index a2 = 0; a2 < d; ++a2) {
                    rho.block(a * d, a2 * d, d, d) += (w * ra(a, a2)) * rd;
                }
            }
        }
    }
    const double weight = rho.trace().real();
    if (!(weight > kDegenerateWeight)) {
        throw DegenerateProjection("oracle QBSM success weight vanished");
    }
    rho /= weight;
    return {FockDensity(cutoff, {"A", "D"}, std::move(rho)), weight};
}

/// Scenarios the two engines are compared on.
enum class Scenario { Entangle, Swap, LossySwap, Entropy, FidelityA, FidelityB, FidelityC };

inline std::string scenario_name(Scenario s) {
    switch (s) {
        case Scenario::Entangle: return "entangle";
        case Scenario::Swap: return "swap";
        case Scenario::LossySwap: return "lossy-swap";
        case Scenario::Entropy: return "entropy";
        case Scenario::FidelityA: return "fidelity-a";
        case Scenario::FidelityB: return "fidelity-b";
        case Scenario::FidelityC: return "fidelity-c";
    }
    return "unknown";
}

inline const std::vector<Scenario> &all_scenarios() {
    static const std::vector<Scenario> all{Scenario::Entangle,  Scenario::Swap,      Scenario::LossySwap,
                                           Scenario::Entropy,   Scenario::FidelityA, Scenario::FidelityB,
                                           Scenario::FidelityC};
    return all;
}

struct CrossCheckReport {
    Scenario scenario;
    /// Largest |engine - oracle| over every compared number.
    double max_deviation = 0.0;
    /// Headline scalar from each side (norm, weight, entropy or fidelity).
    double engine_value = 0.0;
    double oracle_value = 0.0;
};

inline double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

/// Memoizes the expensive lossy oracle and engine runs for one (alpha, eta, beta, cutoff).
class CrossChecker {
   public:
    CrossChecker(Complex alpha, double eta, Complex beta, int cutoff)
        : alpha_(alpha), eta_(eta), beta_(beta), cutoff_(cutoff) {
        for (const auto a : {alpha_, alpha_prime(alpha_), beta_}) {
            (void)coherent_vector(a, cutoff_);
        }
    }

    CrossCheckReport run(Scenario s) {
        switch (s) {
            case Scenario::Entangle: {
                const auto engine = encode(entangle_pair(alpha_, "A", "B"), cutoff_);
                const auto oracle = fock_entangle_pair(alpha_, "A", "B", cutoff_);
                return {s, max_abs_diff(engine.amplitudes(), oracle.amplitudes()), fock_norm(engine), fock_norm(oracle)};
            }
            case Scenario::Swap: {
                const Complex ap = alpha_prime(alpha_);
                const auto x = tensor(qbs_state(ap, "A", "B"), qbs_state(ap, "C", "D"));
                const auto engine = qbsm_project(x, "B", "C", beta_);
                const auto pair = fock_entangle_pair(alpha_, "A", "B", cutoff_);
                const FockState other(cutoff_, {"C", "D"}, pair.amplitudes());
                const auto projected =
                    fock_project(fock_tensor(pair, other), fock_qbs(beta_, "B", "C", cutoff_), "B", "C");
                const double oracle_weight = fock_norm(projected) * fock_norm(projected);
                const auto oracle_state = fock_normalized(projected);
                const auto engine_state = encode(engine.normalized, cutoff_);
                const double dev = std::max(max_abs_diff(engine_state.amplitudes(), oracle_state.amplitudes()),
                                            std::abs(engine.success_weight - oracle_weight));
                return {s, dev, engine.success_weight, oracle_weight};
            }
            case Scenario::LossySwap: {
                const auto &e = engine();
                const auto &o = oracle();
                const auto engine_rho = encode(e.rho_ad, cutoff_);
                const double dev = std::max(max_abs_diff(engine_rho.matrix(), o.rho_ad.matrix()),
                                            std::abs(e.success_weight - o.success_weight));
                return {s, dev, e.success_weight, o.success_weight};
            }
            case Scenario::Entropy: {
                const double ev = reduced_linear_entropy(engine().rho_ad, "A");
                const auto rho_a = fock_partial_trace(oracle().rho_ad, {"D"});
                const double ov = 1.0 - fock_purity(rho_a);
                return {s, std::abs(ev - ov), ev, ov};
            }
            case Scenario::FidelityA:
            case Scenario::FidelityB:
            case Scenario::FidelityC: {
                const Complex ap = alpha_prime(alpha_);
                const FidelityTarget t = s == Scenario::FidelityA   ? fig4a_target(ap)
                                         : s == Scenario::FidelityB ? fig4b_target(ap)
                                                                    : fig4c_target(ap);
                const double ev = fidelity(engine().rho_ad, t);
                const double ov = fock_fidelity(oracle().rho_ad, fock_target(t, "A", "D", cutoff_));
                return {s, std::abs(ev - ov), ev, ov};
            }
        }
        throw InvalidArgument("unknown scenario");
    }

    const LossySwapResult &engine() {
        if (!engine_) {
            engine_ = lossy_swap_pipeline(alpha_, eta_, beta_);
        }
        return *engine_;
    }

    const FockSwapResult &oracle() {
        if (!oracle_) {
            oracle_ = fock_lossy_swap(alpha_, eta_, beta_, cutoff_);
        }
        return *oracle_;
    }

   private:
    Complex alpha_;
    double eta_;
    Complex beta_;
    int cutoff_;
    std::optional<LossySwapResult> engine_;
    std::optional<FockSwapResult> oracle_;
};

/// Runs one scenario end to end on both engines.
inline CrossCheckReport cross_check(Scenario s, Complex alpha, double eta, int cutoff,
                                    std::optional<Complex> beta = std::nullopt) {
    CrossChecker checker(alpha, eta, beta.value_or(alpha_prime(alpha)), cutoff);
    return checker.run(s);
}

}  // namespace catrep::fock
