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

#ifndef DRESSIAN_COMBINATORICS_HPP_
#define DRESSIAN_COMBINATORICS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "dressian/rational.hpp"

namespace dressian {

std::uint64_t binomial(int n, int k);

// A k-element subset of [n] = {1, ..., n}, stored as its sorted elements.
class KSubset {
 public:
  // Throws ParameterError unless `elements` is strictly increasing in [1, n].
  KSubset(std::vector<int> elements, int n);

  const std::vector<int>& elements() const { return elements_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(elements_.size()); }
  bool contains(int i) const;

  // Position of this subset in the lexicographic listing of C([n], k).
  std::size_t rank() const;

  // "125" when every element is a single digit, otherwise "1,2,15".
  std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;
  friend auto operator<=>(const KSubset&, const KSubset&) = default;

 private:
  std::vector<int> elements_;
  int n_;
};

// Lexicographic rank of a sorted subset of [n]; no validation.
std::size_t subset_rank(std::span<const int> sorted, int n);
std::vector<int> subset_unrank(std::size_t rank, int k, int n);

// All k-subsets of [n] in lexicographic order. Requires 0 <= k <= n.
std::vector<KSubset> enumerate_ksubsets(int k, int n);

// Sorted union of a sorted set with extra elements; the caller guarantees
// disjointness.
std::vector<int> merge_sorted(std::span<const int> base,
                              std::initializer_list<int> extra);

// Rational-valued function on the k-subsets of [n], stored in lexicographic
// order of the subsets.
class WeightVector {
 public:
  WeightVector(int k, int n);
  WeightVector(int k, int n, RationalVector values);

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator[](std::size_t rank) const { return values_[rank]; }
  Rational& operator[](std::size_t rank) { return values_[rank]; }
  const Rational& at(const KSubset& s) const;
  const Rational& at(std::span<const int> sorted) const;
  void set(const KSubset& s, Rational value);

  const RationalVector& values() const { return values_; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  int k_;
  int n_;
  RationalVector values_;
};

// w'(S) = w(S) + sum_{i in S} a_i.
WeightVector lineality_shift(const WeightVector& w, const RationalVector& a);

// Canonical representative modulo the lineality space: the unique shift of
// `w` vanishing on the lex-first n subsets with independent incidence
// vectors (fewer when k is 0 or n).
WeightVector normalize(const WeightVector& w);

// The anchor subsets used by normalize(), as lexicographic ranks.
std::vector<std::size_t> normalization_anchors(int k, int n);

WeightVector scale(const WeightVector& w, const Rational& factor);

// (sigma . w)(sigma(S)) = w(S); sigma[i - 1] is the image of label i.
WeightVector relabel(const WeightVector& w, std::span<const int> sigma);

}  // namespace dressian

#endif  // DRESSIAN_COMBINATORICS_HPP_
