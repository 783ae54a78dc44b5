// Copyright 2026 The Dressian Authors.
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


// Acceptance runner: one PASS/FAIL line per criterion, followed by the
// supporting details. Exits nonzero when any criterion fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "dressian/acceptance.hpp"

int main(int argc, char** argv) {
  dressian::acceptance::Options options;
  if (argc > 1) options.seed = std::strtoull(argv[1], nullptr, 10);
  bool all = true;
  for (int id = 1; id <= dressian::acceptance::kCriteria; ++id) {
    const auto r = dressian::acceptance::run_criterion(id, options);
    std::cout << dressian::acceptance::summary_line(r) << "\n";
    for (const auto& line : r.details) std::cout << "    " << line << "\n";
    std::cout.flush();
    all = all && r.passed;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
