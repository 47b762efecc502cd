// Copyright 2026 The grantgame Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Builds the line worst case for a few sizes and prints its exact MAGNET
// spoa next to the closed form (2n-1)/n - eps/T.

#include <iostream>

#include "grantgame/grantgame.hpp"

int main() {
    using grantgame::Rational;
    for (int n = 3; n <= 5; ++n) {
        grantgame::PaperParams p;
        p.n = n;
        p.threshold = Rational(30 * n);
        p.eps = Rational(1);
        const auto inst = grantgame::paper_instance("line-worstcase", p);
        const auto rep = grantgame::magnet_report(inst, inst.n());
        const Rational expected = Rational(2 * n - 1, n) - p.eps / p.threshold;
        std::cout << "n=" << n << " spoa=" << rep.spoa->str() << " expected=" << expected.str()
                  << " worst=" << rep.worst_profile->str() << '\n';
        if (*rep.spoa != expected) return 1;
    }
    return 0;
}
