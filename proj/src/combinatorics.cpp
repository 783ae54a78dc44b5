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

#include "dressian/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <utility>

#include "dressian/errors.hpp"
#include "dressian/linalg.hpp"

namespace dressian {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

KSubset::KSubset(std::vector<int> elements, int n)
    : elements_(std::move(elements)), n_(n) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] < 1 || elements_[i] > n_ ||
        (i > 0 && elements_[i] <= elements_[i - 1])) {
      throw ParameterError("subset elements must be strictly increasing in [1, " +
                           std::to_string(n_) + "]");
    }
  }
}

bool KSubset::contains(int i) const {
  return std::binary_search(elements_.begin(), elements_.end(), i);
}

std::size_t KSubset::rank() const { return subset_rank(elements_, n_); }

std::string KSubset::to_string() const {
  const bool compact = n_ < 10;
  std::string out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out;
}

std::size_t subset_rank(std::span<const int> sorted, int n) {
  const int k = static_cast<int>(sorted.size());
  std::size_t r = 0;
  int prev = 0;
  for (int t = 0; t < k; ++t) {
    for (int x = prev + 1; x < sorted[t]; ++x) {
      r += binomial(n - x, k - t - 1);
    }
    prev = sorted[t];
  }
  return r;
}

std::vector<int> subset_unrank(std::size_t rank, int k, int n) {
  std::vector<int> out;
  out.reserve(k);
  int x = 1;
  for (int t = 0; t < k; ++t) {
    for (;; ++x) {
      const std::size_t block = binomial(n - x, k - t - 1);
      if (rank < block) break;
      rank -= block;
    }
    out.push_back(x++);
  }
  return out;
}

std::vector<KSubset> enumerate_ksubsets(int k, int n) {
  if (k < 0 || n < 0 || k > n) {
    throw ParameterError("invalid subset shape (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
  std::vector<KSubset> out;
  out.reserve(binomial(n, k));
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  for (;;) {
    out.emplace_back(cur, n);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<int> merge_sorted(std::span<const int> base,
                              std::initializer_list<int> extra) {
  std::vector<int> out(base.begin(), base.end());
  out.insert(out.end(), extra.begin(), extra.end());
  std::sort(out.begin(), out.end());
  return out;
}

WeightVector::WeightVector(int k, int n) : WeightVector(k, n, {}) {}

WeightVector::WeightVector(int k, int n, RationalVector values)
    : k_(k), n_(n), values_(std::move(values)) {
  if (k < 0 || n < 1 || k > n) {
    throw ParameterError("invalid weight shape (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
  const std::size_t expected = binomial(n, k);
  if (values_.empty()) values_.assign(expected, Rational(0));
  if (values_.size() != expected) {
    throw ParameterError("weight vector for (" + std::to_string(k) + "," +
                         std::to_string(n) + ") needs " +
                         std::to_string(expected) + " entries, got " +
                         std::to_string(values_.size()));
  }
}

const Rational& WeightVector::at(const KSubset& s) const {
  if (s.k() != k_ || s.n() != n_) throw ParameterError("subset shape mismatch");
  return values_[s.rank()];
}

const Rational& WeightVector::at(std::span<const int> sorted) const {
  return values_[subset_rank(sorted, n_)];
}

void WeightVector::set(const KSubset& s, Rational value) {
  if (s.k() != k_ || s.n() != n_) throw ParameterError("subset shape mismatch");
  values_[s.rank()] = std::move(value);
}

WeightVector lineality_shift(const WeightVector& w, const RationalVector& a) {
  if (static_cast<int>(a.size()) != w.n()) {
    throw ParameterError("lineality shift needs " + std::to_string(w.n()) +
                         " coordinates, got " + std::to_string(a.size()));
  }
  WeightVector out = w;
  std::size_t r = 0;
  for (const auto& s : enumerate_ksubsets(w.k(), w.n())) {
    for (int i : s.elements()) out[r] += a[i - 1];
    ++r;
  }
  return out;
}

std::vector<std::size_t> normalization_anchors(int k, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<std::size_t>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({k, n});
  if (it != cache.end()) return it->second;

  std::vector<std::size_t> anchors;
  linalg::RowEchelon ech(static_cast<std::size_t>(n));
  std::size_t r = 0;
  for (const auto& s : enumerate_ksubsets(k, n)) {
    RationalVector row(n);
    for (int i : s.elements()) row[i - 1] = 1;
    if (ech.add(std::move(row))) anchors.push_back(r);
    if (static_cast<int>(ech.rank()) == n) break;
    ++r;
  }
  cache.emplace(std::make_pair(k, n), anchors);
  return anchors;
}

WeightVector normalize(const WeightVector& w) {
  const auto anchors = normalization_anchors(w.k(), w.n());
  linalg::Matrix a;
  RationalVector b;
  for (std::size_t r : anchors) {
    RationalVector row(w.n());
    for (int i : subset_unrank(r, w.k(), w.n())) row[i - 1] = 1;
    a.push_back(std::move(row));
    b.push_back(-w[r]);
  }
  auto shift = linalg::solve(a, b, static_cast<std::size_t>(w.n()));
  if (!shift) throw InternalError("anchor system is inconsistent");
  WeightVector out = lineality_shift(w, *shift);
  for (std::size_t r : anchors) out[r] = 0;
  return out;
}

WeightVector scale(const WeightVector& w, const Rational& factor) {
  WeightVector out = w;
  for (std::size_t r = 0; r < out.size(); ++r) out[r] *= factor;
  return out;
}

WeightVector relabel(const WeightVector& w, std::span<const int> sigma) {
  if (static_cast<int>(sigma.size()) != w.n()) {
    throw ParameterError("permutation length mismatch");
  }
  std::vector<bool> seen(w.n() + 1, false);
  for (int x : sigma) {
    if (x < 1 || x > w.n() || seen[x]) throw ParameterError("not a permutation");
    seen[x] = true;
  }
  WeightVector out(w.k(), w.n());
  std::size_t r = 0;
  for (const auto& s : enumerate_ksubsets(w.k(), w.n())) {
    std::vector<int> image;
    for (int i : s.elements()) image.push_back(sigma[i - 1]);
    std::sort(image.begin(), image.end());
    out[subset_rank(image, w.n())] = w[r++];
  }
  return out;
}

}  // namespace dressian
