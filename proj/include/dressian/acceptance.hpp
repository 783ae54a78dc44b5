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


#ifndef DRESSIAN_ACCEPTANCE_HPP_
#define DRESSIAN_ACCEPTANCE_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dressian/combinatorics.hpp"
#include "dressian/metric_tree.hpp"

namespace dressian::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> details;
};

struct Options {
  std::uint64_t seed = 20260419;
  int instances = 200;  // per property suite
};

constexpr int kCriteria = 9;

// Runs one criterion (1..9); a criterion that exceeds its time limit fails.
CriterionResult run_criterion(int id, const Options& options = {});
std::vector<CriterionResult> run_all(const Options& options = {});

// "PASS criterion 3: ..." or "FAIL criterion 2: ...", one line; the timing
// suffix is optional so that reports can be compared across runs.
std::string summary_line(const CriterionResult& r, bool with_time = true);

// Random instances shared with the property tests.
using Rng = std::mt19937_64;

// Trivalent tree on the given leaves; internal lengths are random positive
// rationals, pendant lengths random nonnegative rationals.
MetricTree random_trivalent_tree(Rng& rng, const std::vector<int>& leaves);

// Uniform entries in {lo, ..., hi}.
WeightVector random_integer_weight(Rng& rng, int k, int n, int lo, int hi);

// A Dressian point: k = 2 from a random tree metric, k = 3 (n = 6) from a
// relabelled, shifted and scaled metrized cone class.
WeightVector random_dressian_weight(Rng& rng, int k, int n);

}  // namespace dressian::acceptance

#endif  // DRESSIAN_ACCEPTANCE_HPP_
