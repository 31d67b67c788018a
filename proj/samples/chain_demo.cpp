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

// Repeater chains of growing length at fixed transmittance per link.

#include <cstdio>

#include "catrep/chain.hpp"

int main() {
    using namespace catrep;
    const double alpha = 1.5;
    for (int n = 2; n <= 5; ++n) {
        const ChainReport r = run_chain(n, alpha, alpha_prime(alpha), 0.95);
        double p = 1.0;
        for (double w : r.per_swap_weights) {
            p *= w;
        }
        std::printf("N = %d  locations = %3d  swaps = %2d  P(all swaps) = %.3e  F = %.4f\n", r.n, r.location_count,
                    r.swap_count, p, r.fidelity_vs_ideal_qbs);
    }
}
