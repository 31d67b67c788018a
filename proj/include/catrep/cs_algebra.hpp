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

// Exact algebra over finite superpositions of multimode coherent states.
//
// A PureState is sum_i c_i |a_i1>|a_i2>...|a_im>, where every |a> is a
// normalized coherent state. A MixedState is sum_k w_k |a_k><b_k| over the
// same kind of product kets and bras. Every inner product reduces to the
// closed-form coherent overlap, so traces, norms and contractions are exact up
// to floating point.

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "catrep/error.hpp"

namespace catrep {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Amplitude distance (max component) below which two terms are the same term.
inline constexpr double kMergeTol = 1e-12;
/// Coefficients below this fraction of the largest coefficient are dropped.
inline constexpr double kDropRelTol = 1e-14;
/// Norms below this cannot be normalized.
inline constexpr double kDegenerateNorm = 1e-30;

/// Label of one bosonic mode (a location or an environment port).
class ModeId {
   public:
    ModeId() = default;
    ModeId(std::string label) : label_(std::move(label)) {
        if (label_.empty() ||
            std::any_of(label_.begin(), label_.end(), [](unsigned char c) { return std::isspace(c); })) {
            throw InvalidArgument("mode label must be non-empty and contain no whitespace: '" + label_ + "'");
        }
    }
    ModeId(const char *label) : ModeId(std::string(label)) {}

    const std::string &label() const { return label_; }

    auto operator<=>(const ModeId &) const = default;
    bool operator==(const ModeId &) const = default;

   private:
    std::string label_;
};

using ModeList = std::vector<ModeId>;

inline std::ostream &operator<<(std::ostream &os, const ModeId &m) { return os << m.label(); }

namespace detail {

inline void check_unique(const ModeList &modes) {
    for (std::size_t i = 0; i < modes.size(); ++i) {
        for (std::size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i] == modes[j]) {
                throw ModeError("duplicate mode '" + modes[i].label() + "'");
            }
        }
    }
}

inline std::size_t find_mode(const ModeList &modes, const ModeId &m) {
    auto it = std::find(modes.begin(), modes.end(), m);
    if (it == modes.end()) {
        throw ModeError("unknown mode '" + m.label() + "'");
    }
    return static_cast<std::size_t>(it - modes.begin());
}

inline double amp_distance(const Amplitudes &a, const Amplitudes &b) {
    double d = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

inline std::string format17(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace detail

/// One summand c * |a_1>|a_2>...|a_m> of a pure state.
struct CoherentTerm {
    Complex coeff;
    Amplitudes amps;
};

/// Finite superposition of product coherent states over an ordered mode list.
class PureState {
   public:
    PureState() = default;
    PureState(ModeList modes, std::vector<CoherentTerm> terms) : modes_(std::move(modes)), terms_(std::move(terms)) {
        detail::check_unique(modes_);
        for (const auto &t : terms_) {
            if (t.amps.size() != modes_.size()) {
                throw ModeError("term amplitude count does not match mode count");
            }
        }
    }

    const ModeList &modes() const { return modes_; }
    const std::vector<CoherentTerm> &terms() const { return terms_; }
    std::size_t mode_count() const { return modes_.size(); }
    std::size_t term_count() const { return terms_.size(); }
    bool has_mode(const ModeId &m) const { return std::find(modes_.begin(), modes_.end(), m) != modes_.end(); }
    std::size_t index_of(const ModeId &m) const { return detail::find_mode(modes_, m); }

   private:
    ModeList modes_;
    std::vector<CoherentTerm> terms_;
};

/// One summand w * |ket><bra| of a mixed state; ket and bra are product coherent states.
struct Dyad {
    Complex coeff;
    Amplitudes ket;
    Amplitudes bra;
};

/// Operator sum_k w_k |ket_k><bra_k| over an ordered mode list.
class MixedState {
   public:
    MixedState() = default;
    MixedState(ModeList modes, std::vector<Dyad> dyads) : modes_(std::move(modes)), dyads_(std::move(dyads)) {
        detail::check_unique(modes_);
        for (const auto &d : dyads_) {
            if (d.ket.size() != modes_.size() || d.bra.size() != modes_.size()) {
                throw ModeError("dyad amplitude count does not match mode count");
            }
        }
    }

    const ModeList &modes() const { return modes_; }
    const std::vector<Dyad> &dyads() const { return dyads_; }
    std::size_t mode_count() const { return modes_.size(); }
    std::size_t dyad_count() const { return dyads_.size(); }
    bool has_mode(const ModeId &m) const { return std::find(modes_.begin(), modes_.end(), m) != modes_.end(); }
    std::size_t index_of(const ModeId &m) const { return detail::find_mode(modes_, m); }

   private:
    ModeList modes_;
    std::vector<Dyad> dyads_;
};

/// Exponent of overlap(a, b); sums of these give multimode overlaps.
inline Complex overlap_exponent(Complex a, Complex b) { return -0.5 * std::norm(a) - 0.5 * std::norm(b) + std::conj(a) * b; }

/// <a|b> for normalized coherent states: exp(-|a|^2/2 - |b|^2/2 + conj(a) b).
inline Complex overlap(Complex a, Complex b) { return std::exp(overlap_exponent(a, b)); }

/// prod_k <bra_k|ket_k>.
inline Complex overlap(const Amplitudes &bra, const Amplitudes &ket) {
    Complex e = 0;
    for (std::size_t k = 0; k < bra.size(); ++k) {
        e += overlap_exponent(bra[k], ket[k]);
    }
    return std::exp(e);
}

/// Single product coherent state |amps[0]>|amps[1]>... with unit coefficient.
inline PureState coherent(ModeList modes, Amplitudes amps) {
    return PureState(std::move(modes), {CoherentTerm{1.0, std::move(amps)}});
}

inline PureState vacuum(ModeList modes) {
    Amplitudes zeros(modes.size(), Complex{0.0, 0.0});
    return coherent(std::move(modes), std::move(zeros));
}

/// <x|y>. Mode lists must be identical (same labels, same order).
inline Complex inner(const PureState &x, const PureState &y) {
    if (x.modes() != y.modes()) {
        throw ModeError("inner: mode lists differ");
    }
    Complex s = 0;
    for (const auto &ti : x.terms()) {
        for (const auto &tj : y.terms()) {
            s += std::conj(ti.coeff) * tj.coeff * overlap(ti.amps, tj.amps);
        }
    }
    return s;
}

inline double norm(const PureState &x) { return std::sqrt(std::max(0.0, inner(x, x).real())); }

inline PureState scale(const PureState &x, Complex factor) {
    auto terms = x.terms();
    for (auto &t : terms) {
        t.coeff *= factor;
    }
    return PureState(x.modes(), std::move(terms));
}

inline PureState normalize(const PureState &x) {
    const double n = norm(x);
    if (!(n > kDegenerateNorm)) {
        throw DegenerateState("cannot normalize a state of norm " + detail::format17(n));
    }
    return scale(x, 1.0 / n);
}

/// x + y over the same mode list (term lists concatenated, not merged).
inline PureState superpose(const PureState &x, const PureState &y) {
    if (x.modes() != y.modes()) {
        throw ModeError("superpose: mode lists differ");
    }
    auto terms = x.terms();
    terms.insert(terms.end(), y.terms().begin(), y.terms().end());
    return PureState(x.modes(), std::move(terms));
}

inline PureState tensor(const PureState &x, const PureState &y) {
    ModeList modes = x.modes();
    modes.insert(modes.end(), y.modes().begin(), y.modes().end());
    std::vector<CoherentTerm> terms;
    terms.reserve(x.term_count() * y.term_count());
    for (const auto &a : x.terms()) {
        for (const auto &b : y.terms()) {
            Amplitudes amps = a.amps;
            amps.insert(amps.end(), b.amps.begin(), b.amps.end());
            terms.push_back({a.coeff * b.coeff, std::move(amps)});
        }
    }
    return PureState(std::move(modes), std::move(terms));
}

inline MixedState tensor(const MixedState &x, const MixedState &y) {
    ModeList modes = x.modes();
    modes.insert(modes.end(), y.modes().begin(), y.modes().end());
    std::vector<Dyad> dyads;
    dyads.reserve(x.dyad_count() * y.dyad_count());
    for (const auto &a : x.dyads()) {
        for (const auto &b : y.dyads()) {
            Amplitudes ket = a.ket;
            ket.insert(ket.end(), b.ket.begin(), b.ket.end());
            Amplitudes bra = a.bra;
            bra.insert(bra.end(), b.bra.begin(), b.bra.end());
            dyads.push_back({a.coeff * b.coeff, std::move(ket), std::move(bra)});
        }
    }
    return MixedState(std::move(modes), std::move(dyads));
}

/// Canonical form: terms closer than `tol` are summed, negligible coefficients dropped.
inline PureState merge_terms(const PureState &x, double tol = kMergeTol) {
    if (!(tol > 0)) {
        throw InvalidArgument("merge tolerance must be positive");
    }
    std::vector<CoherentTerm> merged;
    for (const auto &t : x.terms()) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const CoherentTerm &m) { return detail::amp_distance(m.amps, t.amps) <= tol; });
        if (it == merged.end()) {
            merged.push_back(t);
        } else {
            it->coeff += t.coeff;
        }
    }
    double largest = 0;
    for (const auto &t : merged) {
        largest = std::max(largest, std::abs(t.coeff));
    }
    std::erase_if(merged, [&](const CoherentTerm &t) { return !(std::abs(t.coeff) >= kDropRelTol * largest) || largest == 0; });
    return PureState(x.modes(), std::move(merged));
}

/// Same canonicalization for dyads; ket and bra must both match.
inline MixedState merge_dyads(const MixedState &rho, double tol = kMergeTol) {
    std::vector<Dyad> merged;
    for (const auto &d : rho.dyads()) {
        auto it = std::find_if(merged.begin(), merged.end(), [&](const Dyad &m) {
            return detail::amp_distance(m.ket, d.ket) <= tol && detail::amp_distance(m.bra, d.bra) <= tol;
        });
        if (it == merged.end()) {
            merged.push_back(d);
        } else {
            it->coeff += d.coeff;
        }
    }
    double largest = 0;
    for (const auto &d : merged) {
        largest = std::max(largest, std::abs(d.coeff));
    }
    std::erase_if(merged, [&](const Dyad &d) { return !(std::abs(d.coeff) >= kDropRelTol * largest) || largest == 0; });
    return MixedState(rho.modes(), std::move(merged));
}

/// |x><x| as dyads (c_i conj(c_j), a_i, a_j).
inline MixedState to_density(const PureState &x) {
    std::vector<Dyad> dyads;
    dyads.reserve(x.term_count() * x.term_count());
    for (const auto &ti : x.terms()) {
        for (const auto &tj : x.terms()) {
            dyads.push_back({ti.coeff * std::conj(tj.coeff), ti.amps, tj.amps});
        }
    }
    return MixedState(x.modes(), std::move(dyads));
}

inline Complex trace(const MixedState &rho) {
    Complex s = 0;
    for (const auto &d : rho.dyads()) {
        s += d.coeff * overlap(d.bra, d.ket);
    }
    return s;
}

inline MixedState scale(const MixedState &rho, Complex factor) {
    auto dyads = rho.dyads();
    for (auto &d : dyads) {
        d.coeff *= factor;
    }
    return MixedState(rho.modes(), std::move(dyads));
}

inline MixedState normalize_trace(const MixedState &rho) {
    const Complex t = trace(rho);
    if (!(std::abs(t) > kDegenerateNorm)) {
        throw DegenerateState("cannot normalize an operator of trace " + detail::format17(std::abs(t)));
    }
    return scale(rho, 1.0 / t.real());
}

/// Every dyad (w, a, b) has a partner (conj(w), b, a) within `tol`.
inline bool is_hermitian(const MixedState &rho, double tol = 1e-12) {
    const auto canon = merge_dyads(rho);
    for (const auto &d : canon.dyads()) {
        const bool found = std::any_of(canon.dyads().begin(), canon.dyads().end(), [&](const Dyad &e) {
            return detail::amp_distance(e.ket, d.bra) <= kMergeTol && detail::amp_distance(e.bra, d.ket) <= kMergeTol &&
                   std::abs(e.coeff - std::conj(d.coeff)) <= tol * std::max(1.0, std::abs(d.coeff));
        });
        if (!found) {
            return false;
        }
    }
    return true;
}

/// Same state expressed over `order`, a permutation of x's modes.
inline PureState permute_modes(const PureState &x, const ModeList &order) {
    if (order.size() != x.mode_count()) {
        throw ModeError("permute_modes: mode count differs");
    }
    std::vector<std::size_t> src;
    src.reserve(order.size());
    for (const auto &m : order) {
        src.push_back(x.index_of(m));
    }
    std::vector<CoherentTerm> terms;
    terms.reserve(x.term_count());
    for (const auto &t : x.terms()) {
        Amplitudes amps;
        amps.reserve(src.size());
        for (auto k : src) {
            amps.push_back(t.amps[k]);
        }
        terms.push_back({t.coeff, std::move(amps)});
    }
    return PureState(order, std::move(terms));
}

inline MixedState permute_modes(const MixedState &rho, const ModeList &order) {
    if (order.size() != rho.mode_count()) {
        throw ModeError("permute_modes: mode count differs");
    }
    std::vector<std::size_t> src;
    for (const auto &m : order) {
        src.push_back(rho.index_of(m));
    }
    std::vector<Dyad> dyads;
    for (const auto &d : rho.dyads()) {
        Amplitudes ket, bra;
        for (auto k : src) {
            ket.push_back(d.ket[k]);
            bra.push_back(d.bra[k]);
        }
        dyads.push_back({d.coeff, std::move(ket), std::move(bra)});
    }
    return MixedState(order, std::move(dyads));
}

/// Renames mode labels; the mode order is kept.
template <typename State>
State relabel(const State &x, const ModeList &new_labels) {
    if (new_labels.size() != x.mode_count()) {
        throw ModeError("relabel: mode count differs");
    }
    if constexpr (std::is_same_v<State, PureState>) {
        return PureState(new_labels, x.terms());
    } else {
        return MixedState(new_labels, x.dyads());
    }
}

// Text form: a header line "pure <modes...>" or "mixed <modes...>", then one
// line per term: coeff_re coeff_im followed by re/im pairs (ket then bra for
// dyads), 17 significant digits.

inline void write_state(std::ostream &os, const PureState &x) {
    os << "pure";
    for (const auto &m : x.modes()) {
        os << ' ' << m.label();
    }
    os << '\n';
    for (const auto &t : x.terms()) {
        os << detail::format17(t.coeff.real()) << ' ' << detail::format17(t.coeff.imag());
        for (const auto &a : t.amps) {
            os << ' ' << detail::format17(a.real()) << ' ' << detail::format17(a.imag());
        }
        os << '\n';
    }
}

inline void write_state(std::ostream &os, const MixedState &rho) {
    os << "mixed";
    for (const auto &m : rho.modes()) {
        os << ' ' << m.label();
    }
    os << '\n';
    for (const auto &d : rho.dyads()) {
        os << detail::format17(d.coeff.real()) << ' ' << detail::format17(d.coeff.imag());
        for (const auto *amps : {&d.ket, &d.bra}) {
            for (const auto &a : *amps) {
                os << ' ' << detail::format17(a.real()) << ' ' << detail::format17(a.imag());
            }
        }
        os << '\n';
    }
}

namespace detail {

inline ModeList read_header(std::istream &is, const std::string &kind) {
    std::string line;
    if (!std::getline(is, line)) {
        throw InvalidArgument("state text: missing header");
    }
    std::istringstream hs(line);
    std::string word;
    hs >> word;
    if (word != kind) {
        throw InvalidArgument("state text: expected '" + kind + "' header, got '" + word + "'");
    }
    ModeList modes;
    while (hs >> word) {
        modes.emplace_back(word);
    }
    return modes;
}

inline std::vector<double> read_numbers(const std::string &line) {
    std::istringstream ls(line);
    std::vector<double> values;
    double v;
    while (ls >> v) {
        values.push_back(v);
    }
    if (!ls.eof()) {
        throw InvalidArgument("state text: malformed number in '" + line + "'");
    }
    return values;
}

}  // namespace detail

inline PureState read_pure_state(std::istream &is) {
    ModeList modes = detail::read_header(is, "pure");
    std::vector<CoherentTerm> terms;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        auto v = detail::read_numbers(line);
        if (v.size() != 2 + 2 * modes.size()) {
            throw InvalidArgument("state text: wrong field count in term line");
        }
        CoherentTerm t{{v[0], v[1]}, {}};
        for (std::size_t k = 0; k < modes.size(); ++k) {
            t.amps.emplace_back(v[2 + 2 * k], v[3 + 2 * k]);
        }
        terms.push_back(std::move(t));
    }
    return PureState(std::move(modes), std::move(terms));
}

inline MixedState read_mixed_state(std::istream &is) {
    ModeList modes = detail::read_header(is, "mixed");
    const std::size_t m = modes.size();
    std::vector<Dyad> dyads;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) {
            continue;
        }
        auto v = detail::read_numbers(line);
        if (v.size() != 2 + 4 * m) {
            throw InvalidArgument("state text: wrong field count in dyad line");
        }
        Dyad d{{v[0], v[1]}, {}, {}};
        for (std::size_t k = 0; k < m; ++k) {
            d.ket.emplace_back(v[2 + 2 * k], v[3 + 2 * k]);
            d.bra.emplace_back(v[2 + 2 * m + 2 * k], v[3 + 2 * m + 2 * k]);
        }
        dyads.push_back(std::move(d));
    }
    return MixedState(std::move(modes), std::move(dyads));
}

}  // namespace catrep
