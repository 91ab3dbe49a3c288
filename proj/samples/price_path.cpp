// Copyright 2026 The Duropoly Authors
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

// Solves a small instance, prints the price path and compares the profit
// with the static monopolist.

#include <iostream>

#include "duropoly/duropoly.hpp"

int main() {
  using duropoly::Rational;
  const auto inst = duropoly::make_instance({100, 85, 80, 50}, 2);
  const auto sol = duropoly::solve(inst);

  for (int t = 1; t <= inst.periods(); ++t) {
    const auto k = static_cast<std::size_t>(t - 1);
    std::cout << "period " << t << ": price " << sol.prices[k] << ", " << sol.buyers_per_period[k]
              << " buyer(s)\n";
  }

  const auto report = duropoly::analyze(inst);
  std::cout << "duropoly profit " << report.duropoly_profit << " vs static " << report.static_profit << " (ratio "
            << report.ratio << ")\n";
  std::cout << (duropoly::verify_spne(inst, sol).empty() ? "no profitable deviation\n" : "deviation found\n");
}
