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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "catrep/fock_oracle.hpp"

namespace catrep::fock {
namespace {

TEST(CutoffRule, Values) {
    EXPECT_EQ(cutoff_rule(0.0), 30);
    EXPECT_EQ(cutoff_rule(1.0), 36);
    EXPECT_EQ(cutoff_rule(2.0), 47);
    for (double a : {0.5, 1.0, 2.0, 3.0}) {
        EXPECT_LT(coherent_tail_mass(a, cutoff_rule(a)), 1e-12);
    }
}

TEST(CoherentVector, VacuumAmplitude) {
    const auto v = coherent_vector(1.0, 40);
    EXPECT_NEAR(v[0].real(), std::exp(-0.5), 1e-15);
    EXPECT_NEAR(v[0].real(), 0.606531, 1e-6);
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    EXPECT_THROW(coherent_vector(2.0, 5), NumericGuard);
}

TEST(Encode, VacuumAndCat) {
    const FockState vac = encode(vacuum({"A"}), 10);
    EXPECT_EQ(vac.amplitudes()[0], Complex(1.0));
    EXPECT_NEAR(vac.amplitudes().norm(), 1.0, 1e-15);
    EXPECT_NEAR(fock_norm(encode(odd_cat(1.0, "A"), 40)), 1.0, 1e-10);
    // odd cat has no even photon numbers
    const FockState cat = encode(odd_cat(1.3, "A"), 40);
    for (int n = 0; n <= 40; n += 2) {
        EXPECT_NEAR(std::abs(cat.amplitudes()[n]), 0.0, 1e-14);
    }
}

TEST(Encode, InnerProductsMatchClosedForm) {
    const PureState x = qbs_state(Complex(0.6, 0.4), "A", "B");
    const PureState y = tensor(coherent({"A"}, {0.3}), coherent({"B"}, {Complex(0.0, -0.5)}));
    EXPECT_NEAR(std::abs(fock_inner(encode(x, 30), encode(y, 30)) - inner(x, y)), 0.0, 1e-12);
}

TEST(MemoryGuard, RefusesHugeSpaces) {
    EXPECT_THROW(fock_vacuum({"A", "B", "C", "D", "E"}, 60), NumericGuard);
}

TEST(BeamSplitter, IdentityAtZero) {
    const FockState x = encode(qbs_state(0.8, "A", "B"), 30);
    const FockState y = fock_bs(x, "A", "B", 0.0);
    EXPECT_LT((x.amplitudes() - y.amplitudes()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(BeamSplitter, SplitsCoherentState) {
    const FockState in = encode(coherent({"A", "B"}, {1.0, 0.0}), 40);
    const FockState out = fock_bs(in, "A", "B", std::numbers::pi / 4);
    const double h = 1.0 / std::numbers::sqrt2;
    const FockState expected = encode(coherent({"A", "B"}, {h, h}), 40);
    EXPECT_LT((out.amplitudes() - expected.amplitudes()).norm(), 1e-9);
}

TEST(BeamSplitter, SemigroupAndUnitarity) {
    const FockState x = encode(tensor(odd_cat(1.1, "A"), coherent({"B"}, {Complex(0.2, 0.5)})), 36);
    const FockState twice = fock_bs(fock_bs(x, "A", "B", std::numbers::pi / 8), "A", "B", std::numbers::pi / 8);
    const FockState once = fock_bs(x, "A", "B", std::numbers::pi / 4);
    EXPECT_LT((twice.amplitudes() - once.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(fock_norm(once), fock_norm(x), 1e-10);
    const BeamSplitterUnitary u(0.37, 12);
    for (int n = 0; n <= 24; ++n) {
        const Eigen::MatrixXcd &s = u.block(n);
        EXPECT_LT((s.adjoint() * s - Eigen::MatrixXcd::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(BeamSplitter, MatchesEngineConvention) {
    const PureState x = tensor(odd_cat(0.9, "A"), coherent({"B"}, {Complex(0.4, -0.3)}));
    for (double theta : {0.3, -1.1, 2.0}) {
        const FockState oracle = fock_bs(encode(x, 36), "A", "B", theta);
        const FockState engine = encode(bs_apply(x, {theta, "A", "B"}), 36);
        EXPECT_LT((oracle.amplitudes() - engine.amplitudes()).cwiseAbs().maxCoeff(), 1e-12) << theta;
    }
}

TEST(Loss, DilationMatchesEngine) {
    const PureState x = odd_cat(1.2, "A");
    const FockDensity oracle = fock_loss_channel(encode(x, 36), "A", "E", 0.6);
    const FockDensity engine = encode(partial_trace(to_density(loss_apply(x, pure_loss(0.6, "A", "E"))), {"E"}), 36);
    EXPECT_LT(max_abs_diff(oracle.matrix(), engine.matrix()), 1e-12);
}

TEST(PartialTrace, VacuumFactor) {
    const FockState x = encode(odd_cat(0.8, "A"), 20);
    const FockDensity full = fock_density(fock_tensor(x, fock_vacuum({"V"}, 20)));
    const FockDensity red = fock_partial_trace(full, {"V"});
    EXPECT_LT(max_abs_diff(red.matrix(), fock_density(x).matrix()), 1e-15);
}

TEST(Purity, LosslessQbsReducedIsOneHalf) {
    const FockState pair = fock_entangle_pair(1.0, "A", "B", 40);
    EXPECT_NEAR(fock_purity(fock_partial_trace(fock_density(pair), {"B"})), 0.5, 1e-8);
    const FockSwapResult r = fock_lossy_swap(1.0, 1.0, alpha_prime(1.0), 40);
    EXPECT_NEAR(fock_purity(fock_partial_trace(r.rho_ad, {"D"})), 0.5, 1e-8);
}

TEST(Fidelity, ZeroTarget) {
    const FockSwapResult r = fock_lossy_swap(1.0, 0.6, alpha_prime(1.0), 40);
    const FockState t = fock_target(zero_fidelity_target(alpha_prime(1.0)), "A", "D", 40);
    EXPECT_LT(std::abs(fock_fidelity(r.rho_ad, t)), 1e-10);
}

TEST(CrossCheck, SpecScenarios) {
    EXPECT_LT(cross_check(Scenario::Swap, 1.0, 1.0, 40, Complex(1.0)).max_deviation, 1e-9);
    EXPECT_LT(cross_check(Scenario::Entropy, 1.0, 0.7, 48).max_deviation, 1e-8);
    EXPECT_LT(cross_check(Scenario::FidelityC, 2.0, 0.4, 64).max_deviation, 1e-8);
}

TEST(CrossCheck, AllScenariosAtUnitTransmittance) {
    CrossChecker checker(1.0, 1.0, alpha_prime(1.0), 40);
    for (Scenario s : all_scenarios()) {
        EXPECT_LT(checker.run(s).max_deviation, 1e-8) << scenario_name(s);
    }
}

TEST(CrossCheck, ZeroTransmittance) {
    CrossChecker checker(1.0, 0.0, alpha_prime(1.0), 36);
    for (Scenario s : {Scenario::Entropy, Scenario::FidelityA, Scenario::FidelityB, Scenario::FidelityC}) {
        EXPECT_LT(checker.run(s).max_deviation, 1e-8) << scenario_name(s);
    }
}

TEST(CrossCheck, CutoffTooSmall) { EXPECT_THROW(cross_check(Scenario::Entropy, 2.0, 0.5, 5), NumericGuard); }

}  // namespace
}  // namespace catrep::fock
