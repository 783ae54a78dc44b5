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


#include "dressian/subdivision.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "dressian/double_description.hpp"
#include "dressian/errors.hpp"
#include "dressian/linalg.hpp"
#include "dressian/lp.hpp"

namespace dressian {
namespace {

bool full_dimensional(const Cell& c) {
  linalg::RowEchelon ech(static_cast<std::size_t>(c.n));
  for (const auto& s : c.bases) {
    RationalVector row(c.n);
    for (int i : s.elements()) row[i - 1] = 1;
    ech.add(std::move(row));
    if (static_cast<int>(ech.rank()) == c.n) return true;
  }
  return false;
}

int count_in(const KSubset& s, const std::vector<int>& side) {
  int c = 0;
  for (int i : s.elements()) c += std::binary_search(side.begin(), side.end(), i);
  return c;
}

void check_facet_label(const WeightVector& w, int i) {
  if (i < 1 || i > w.n()) {
    throw ParameterError("facet index " + std::to_string(i) + " outside [1, " +
                         std::to_string(w.n()) + "]");
  }
}

// Maps a label of [n-1] back to [n] \ {i}.
int lift_label(int x, int i) { return x < i ? x : x + 1; }

}  // namespace

Hypersimplex::Hypersimplex(int k_, int n_) : k(k_), n(n_) {
  if (k < 1 || k > n - 1) {
    throw ParameterError("hypersimplex needs 1 <= k <= n-1 (k=" + std::to_string(k) +
                         ", n=" + std::to_string(n) + ")");
  }
}

bool Cell::contains(const KSubset& s) const {
  return std::binary_search(bases.begin(), bases.end(), s);
}

Cell make_cell(int k, int n, std::vector<KSubset> bases) {
  for (const auto& b : bases) {
    if (b.k() != k || b.n() != n) throw ParameterError("basis of the wrong shape");
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  return Cell{k, n, std::move(bases)};
}

Cell make_cell(int k, int n, const std::vector<std::vector<int>>& bases) {
  std::vector<KSubset> subsets;
  for (const auto& b : bases) {
    if (static_cast<int>(b.size()) != k) throw ParameterError("basis of the wrong size");
    subsets.emplace_back(b, n);
  }
  return make_cell(k, n, std::move(subsets));
}

std::vector<Cell> maximal_full_cells(std::vector<Cell> cells) {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  std::vector<Cell> full;
  for (auto& c : cells) {
    if (full_dimensional(c)) full.push_back(std::move(c));
  }
  std::vector<Cell> out;
  for (std::size_t i = 0; i < full.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < full.size() && !dominated; ++j) {
      dominated = j != i && full[j].size() > full[i].size() &&
                  std::includes(full[j].bases.begin(), full[j].bases.end(),
                                full[i].bases.begin(), full[i].bases.end());
    }
    if (!dominated) out.push_back(full[i]);
  }
  return out;
}

Subdivision regular_subdivision(const WeightVector& w) {
  const Hypersimplex delta(w.k(), w.n());
  const int n = w.n();
  const auto subsets = delta.vertices();

  // Homogenize {c : e_S . c <= w(S)} as the cone {(c, t) : e_S . c - w(S) t <= 0,
  // -t <= 0}; rays with t > 0 are the vertices.
  linalg::Matrix rows;
  for (std::size_t r = 0; r < subsets.size(); ++r) {
    RationalVector row(n + 1);
    for (int i : subsets[r].elements()) row[i - 1] = 1;
    row[n] = -w[r];
    rows.push_back(std::move(row));
  }
  RationalVector t_row(n + 1);
  t_row[n] = -1;
  rows.push_back(std::move(t_row));

  Subdivision out{w.k(), n, {}, w};
  for (const auto& ray : polyhedral::extreme_rays(rows, n + 1)) {
    if (ray[n] <= 0) continue;
    std::vector<KSubset> tight;
    for (std::size_t r = 0; r < subsets.size(); ++r) {
      Rational lhs = 0;
      for (int i : subsets[r].elements()) lhs += ray[i - 1];
      if (lhs == w[r] * ray[n]) tight.push_back(subsets[r]);
    }
    out.cells.push_back(make_cell(w.k(), n, std::move(tight)));
  }
  std::sort(out.cells.begin(), out.cells.end());
  out.cells.erase(std::unique(out.cells.begin(), out.cells.end()), out.cells.end());
  return out;
}

bool is_matroid_cell(const Cell& cell) {
  if (cell.bases.empty()) return false;
  std::vector<bool> member(binomial(cell.n, cell.k), false);
  for (const auto& b : cell.bases) member[b.rank()] = true;
  std::vector<int> swapped;
  for (const auto& b1 : cell.bases) {
    for (const auto& b2 : cell.bases) {
      for (int x : b1.elements()) {
        if (b2.contains(x)) continue;
        bool found = false;
        for (int y : b2.elements()) {
          if (b1.contains(y)) continue;
          swapped.clear();
          for (int e : b1.elements()) {
            if (e != x) swapped.push_back(e);
          }
          swapped.push_back(y);
          std::sort(swapped.begin(), swapped.end());
          if (member[subset_rank(swapped, cell.n)]) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_matroidal(const Subdivision& s) {
  return std::all_of(s.cells.begin(), s.cells.end(), is_matroid_cell);
}

HypersimplexSplit make_hypersimplex_split(int k, int n, std::vector<int> a, int mu) {
  const Hypersimplex delta(k, n);
  std::sort(a.begin(), a.end());
  if (a.empty() || std::adjacent_find(a.begin(), a.end()) != a.end() ||
      a.front() < 1 || a.back() > n || static_cast<int>(a.size()) == n) {
    throw ParameterError("split side must be a proper nonempty subset of [n]");
  }
  if (mu < 1 || mu > k - 1) throw ParameterError("split needs 1 <= mu <= k-1");
  std::vector<int> b;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(a.begin(), a.end(), i)) b.push_back(i);
  }
  return HypersimplexSplit{k, n, std::move(a), std::move(b), mu};
}

std::pair<Cell, Cell> split_subdivision(const HypersimplexSplit& h) {
  const auto checked = make_hypersimplex_split(h.k, h.n, h.a, h.mu);
  const int level = h.k - h.mu;
  std::vector<KSubset> upper, lower;
  bool above = false, below = false;
  for (const auto& s : Hypersimplex(h.k, h.n).vertices()) {
    const int c = count_in(s, checked.a);
    if (c >= level) upper.push_back(s);
    if (c <= level) lower.push_back(s);
    above = above || c > level;
    below = below || c < level;
  }
  if (!above || !below) throw ParameterError("degenerate split: one side has every vertex");
  return {make_cell(h.k, h.n, std::move(upper)), make_cell(h.k, h.n, std::move(lower))};
}

bool splits_compatible(const HypersimplexSplit& h1, const HypersimplexSplit& h2) {
  if (h1.k != h2.k || h1.n != h2.n) throw ParameterError("splits live on different hypersimplices");
  const auto s1 = make_hypersimplex_split(h1.k, h1.n, h1.a, h1.mu);
  const auto s2 = make_hypersimplex_split(h2.k, h2.n, h2.a, h2.mu);
  if ((s1.a == s2.a && s1.mu == s2.mu) || (s1.a == s2.b && s1.mu == s1.k - s2.mu)) {
    return true;
  }
  // Maximize t subject to t <= x_i <= 1 - t on both hyperplanes.
  const int n = s1.n;
  lp::LinearProgram prog(n + 1);
  RationalVector sum(n + 1);
  for (int i = 0; i < n; ++i) sum[i] = 1;
  prog.add_equal(sum, s1.k);
  for (const auto* s : {&s1, &s2}) {
    RationalVector row(n + 1);
    for (int i : s->a) row[i - 1] = 1;
    prog.add_equal(std::move(row), s->k - s->mu);
  }
  for (int i = 0; i < n; ++i) {
    RationalVector lo(n + 1), hi(n + 1);
    lo[i] = 1;
    lo[n] = -1;
    prog.add_greater_equal(std::move(lo), 0);
    hi[i] = 1;
    hi[n] = 1;
    prog.add_less_equal(std::move(hi), 1);
  }
  RationalVector t_only(n + 1);
  t_only[n] = 1;
  prog.add_less_equal(t_only, 1);
  prog.maximize(t_only);
  const auto sol = prog.solve();
  return !sol.optimal() || sol.objective <= 0;
}

Subdivision common_refinement(int k, int n, const std::vector<HypersimplexSplit>& splits) {
  const Hypersimplex delta(k, n);
  for (std::size_t i = 0; i < splits.size(); ++i) {
    for (std::size_t j = i + 1; j < splits.size(); ++j) {
      if (!splits_compatible(splits[i], splits[j])) {
        throw CompatibilityError("splits " + std::to_string(i) + " and " +
                                 std::to_string(j) + " are not compatible");
      }
    }
  }
  std::vector<std::pair<Cell, Cell>> sides;
  for (const auto& h : splits) {
    if (h.k != k || h.n != n) throw ParameterError("split on a different hypersimplex");
    sides.push_back(split_subdivision(h));
  }
  if (splits.size() > 20) throw ParameterError("too many splits");
  const auto all = delta.vertices();
  std::vector<Cell> candidates;
  for (std::size_t pattern = 0; pattern < (std::size_t{1} << splits.size()); ++pattern) {
    std::vector<KSubset> keep;
    for (const auto& s : all) {
      bool in = true;
      for (std::size_t j = 0; j < sides.size() && in; ++j) {
        const Cell& side = (pattern >> j) & 1 ? sides[j].second : sides[j].first;
        in = side.contains(s);
      }
      if (in) keep.push_back(s);
    }
    if (!keep.empty()) candidates.push_back(make_cell(k, n, std::move(keep)));
  }
  return Subdivision{k, n, maximal_full_cells(std::move(candidates)), std::nullopt};
}

HypersimplexSplit split_of_tree_edge(const Split& s, int m) {
  return make_hypersimplex_split(2, m, s.a, 1);
}

Subdivision cells_from_tree(const MetricTree& tree) {
  const auto leaves = tree.leaves();
  const int m = static_cast<int>(leaves.size());
  for (int i = 0; i < m; ++i) {
    if (leaves[i] != i + 1) throw ParameterError("tree leaves must be labelled 1..m");
  }
  Subdivision out{2, m, {}, std::nullopt};
  for (int v = 0; v < tree.num_vertices(); ++v) {
    if (tree.is_leaf(v)) continue;
    std::vector<int> branch(m + 1, -1);
    int b = 0;
    for (int e : tree.incident(v)) {
      for (int x : tree.leaves_beyond(e, v)) branch[x] = b;
      ++b;
    }
    std::vector<KSubset> bases;
    for (int i = 1; i <= m; ++i) {
      for (int j = i + 1; j <= m; ++j) {
        if (branch[i] != branch[j]) bases.emplace_back(std::vector<int>{i, j}, m);
      }
    }
    out.cells.push_back(make_cell(2, m, std::move(bases)));
  }
  if (out.cells.empty()) throw ParameterError("tree has no internal vertex");
  std::sort(out.cells.begin(), out.cells.end());
  return out;
}

WeightVector contraction_restriction(const WeightVector& w, int i) {
  check_facet_label(w, i);
  if (w.k() < 2) throw ParameterError("contraction needs k >= 2");
  WeightVector out(w.k() - 1, w.n() - 1);
  std::size_t r = 0;
  for (const auto& s : enumerate_ksubsets(w.k() - 1, w.n() - 1)) {
    std::vector<int> full{i};
    for (int x : s.elements()) full.push_back(lift_label(x, i));
    std::sort(full.begin(), full.end());
    out[r++] = w.at(full);
  }
  return out;
}

WeightVector deletion_restriction(const WeightVector& w, int i) {
  check_facet_label(w, i);
  if (w.k() > w.n() - 1) throw ParameterError("deletion needs k <= n-1");
  WeightVector out(w.k(), w.n() - 1);
  std::size_t r = 0;
  for (const auto& s : enumerate_ksubsets(w.k(), w.n() - 1)) {
    std::vector<int> full;
    for (int x : s.elements()) full.push_back(lift_label(x, i));
    out[r++] = w.at(full);
  }
  return out;
}

Cell contract_cell(const Cell& cell, int i) {
  if (i < 1 || i > cell.n) throw ParameterError("contraction label out of range");
  std::vector<KSubset> out;
  for (const auto& b : cell.bases) {
    if (!b.contains(i)) continue;
    std::vector<int> rest;
    for (int x : b.elements()) {
      if (x != i) rest.push_back(x < i ? x : x - 1);
    }
    out.emplace_back(std::move(rest), cell.n - 1);
  }
  return make_cell(cell.k - 1, cell.n - 1, std::move(out));
}

}  // namespace dressian
