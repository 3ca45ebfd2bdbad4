// Copyright 2026 The tcompact Authors. All Rights Reserved.
//
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

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance [seed]

#include <cstdlib>
#include <iostream>
#include <string>

#include "tcompact/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = tcompact::kDefaultSeed;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  std::cout << "seed " << seed << std::endl;
  int failed = 0;
  tcompact::run_acceptance(seed, [&](const tcompact::CriterionResult& r) {
    std::cout << tcompact::format_result(r) << std::endl;
    if (!r.pass) ++failed;
  });
  std::cout << (tcompact::kCriterionCount - failed) << "/" << tcompact::kCriterionCount << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
