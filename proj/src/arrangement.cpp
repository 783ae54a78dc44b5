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


#include "dressian/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "dressian/errors.hpp"
#include "dressian/lp.hpp"
#include "dressian/pluecker.hpp"
#include "dressian/subdivision.hpp"

namespace dressian {
namespace {

std::string set_string(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::vector<int> complement(const std::vector<int>& index, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (!std::binary_search(index.begin(), index.end(), i)) out.push_back(i);
  }
  return out;
}

// Edge ids on the path between two leaves.
std::vector<int> path_edges(const MetricTree& t, int from, int to) {
  const int start = t.leaf_vertex(from);
  const int goal = t.leaf_vertex(to);
  std::vector<int> via(t.num_vertices(), -2);
  std::vector<int> stack{start};
  via[start] = -1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == goal) break;
    for (int e : t.incident(v)) {
      const int w = t.other_end(e, v);
      if (via[w] == -2) {
        via[w] = e;
        stack.push_back(w);
      }
    }
  }
  std::vector<int> out;
  for (int v = goal; via[v] >= 0; v = t.other_end(via[v], v)) out.push_back(via[v]);
  return out;
}

// The ways of writing K as J u {i, j}, in lex order of (i, j).
struct Partition {
  std::vector<int> index;
  int i;
  int j;
};

std::vector<Partition> partitions_of(const std::vector<int>& subset) {
  std::vector<Partition> out;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      std::vector<int> index;
      for (std::size_t c = 0; c < subset.size(); ++c) {
        if (c != a && c != b) index.push_back(subset[c]);
      }
      out.push_back({std::move(index), subset[a], subset[b]});
    }
  }
  return out;
}

struct Normalizer {
  Rational top;
  Rational spread;

  explicit Normalizer(const WeightVector& w) {
    const auto& v = w.values();
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    top = *hi + 1;
    spread = *hi - *lo + 2;
  }
  Rational operator()(const Rational& value) const {
    return 1 + (top - value) / spread;
  }
};

MetricTree tree_for(const Dissimilarity& d) {
  try {
    return reconstruct_tree(d);
  } catch (const ReconstructionError& e) {
    throw InternalError(std::string("restriction of a Dressian point is not a tree metric: ") +
                        e.what());
  }
}

void require_member(const WeightVector& w) {
  const auto check = is_in_dressian(w);
  if (!check.member) {
    throw MembershipError("weight is not in the Dressian; relation " +
                          check.failing->to_string() + " attains its minimum once");
  }
}

void require_shape(int k, int n) {
  if (k < 2 || n - k + 2 < 3) {
    throw ParameterError("tree arrangements need k >= 2 and n - k >= 1 (k=" +
                         std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
}

// Classical (k = 3) family on an arbitrary label set: trees[t] lives on
// labels minus labels[t].
struct LabelledFamily {
  std::vector<int> labels;
  std::vector<MetricTree> trees;
};

bool abstract_family(const LabelledFamily& f) {
  const std::size_t n = f.labels.size();
  if (n == 4) return true;
  if (n == 5) {
    for (const auto& candidate : enumerate_topologies(f.labels)) {
      bool all = true;
      for (std::size_t t = 0; t < n && all; ++t) {
        all = labelled_isomorphic(delete_leaf(candidate, f.labels[t]), f.trees[t]);
      }
      if (all) return true;
    }
    return false;
  }
  for (std::size_t drop = 0; drop < n; ++drop) {
    LabelledFamily sub;
    for (std::size_t t = 0; t < n; ++t) {
      if (t == drop) continue;
      sub.labels.push_back(f.labels[t]);
      sub.trees.push_back(delete_leaf(f.trees[t], f.labels[drop]));
    }
    if (!abstract_family(sub)) return false;
  }
  return true;
}

}  // namespace

std::size_t TreeArrangement::position(const std::vector<int>& index) const {
  auto it = std::lower_bound(indices.begin(), indices.end(), index);
  if (it == indices.end() || *it != index) {
    throw ParameterError("arrangement has no tree at index " + set_string(index));
  }
  return static_cast<std::size_t>(it - indices.begin());
}

const MetricTree& TreeArrangement::tree(const std::vector<int>& index) const {
  return trees[position(index)];
}

TreeArrangement make_arrangement(int k, int n, std::vector<MetricTree> trees) {
  require_shape(k, n);
  TreeArrangement out{k, n, {}, {}};
  for (const auto& s : enumerate_ksubsets(k - 2, n)) out.indices.push_back(s.elements());
  if (trees.size() != out.indices.size()) {
    throw ParameterError("arrangement needs " + std::to_string(out.indices.size()) +
                         " trees, got " + std::to_string(trees.size()));
  }
  for (std::size_t t = 0; t < trees.size(); ++t) {
    trees[t].validate();
    if (trees[t].leaves() != complement(out.indices[t], n)) {
      throw ParameterError("tree at index " + set_string(out.indices[t]) +
                           " must have leaves " +
                           set_string(complement(out.indices[t], n)));
    }
  }
  out.trees = std::move(trees);
  return out;
}

TreeArrangement arrangement_from_weight(const WeightVector& w) {
  require_shape(w.k(), w.n());
  require_member(w);
  const Normalizer norm(w);
  std::vector<MetricTree> trees;
  for (const auto& j : enumerate_ksubsets(w.k() - 2, w.n())) {
    Dissimilarity d(complement(j.elements(), w.n()));
    const auto& labels = d.labels();
    for (std::size_t a = 0; a < labels.size(); ++a) {
      for (std::size_t b = a + 1; b < labels.size(); ++b) {
        d.set(labels[a], labels[b],
              norm(w.at(merge_sorted(j.elements(), {labels[a], labels[b]}))));
      }
    }
    trees.push_back(tree_for(d));
  }
  return make_arrangement(w.k(), w.n(), std::move(trees));
}

std::string CompatibilityViolation::describe() const {
  return "K=" + set_string(subset) + ": delta_" + set_string(index1) + "(" +
         std::to_string(pair1.first) + "," + std::to_string(pair1.second) +
         ")=" + to_string(distance1) + " but delta_" + set_string(index2) + "(" +
         std::to_string(pair2.first) + "," + std::to_string(pair2.second) +
         ")=" + to_string(distance2);
}

CompatibilityReport check_compatibility(const TreeArrangement& t) {
  std::vector<Dissimilarity> metrics;
  for (const auto& tree : t.trees) metrics.push_back(tree_metric(tree));
  for (const auto& s : enumerate_ksubsets(t.k, t.n)) {
    const auto parts = partitions_of(s.elements());
    const auto& first = parts.front();
    const Rational ref = metrics[t.position(first.index)].at(first.i, first.j);
    for (std::size_t p = 1; p < parts.size(); ++p) {
      const Rational d = metrics[t.position(parts[p].index)].at(parts[p].i, parts[p].j);
      if (d != ref) {
        return {false, CompatibilityViolation{s.elements(), first.index,
                                              {first.i, first.j}, ref,
                                              parts[p].index,
                                              {parts[p].i, parts[p].j}, d}};
      }
    }
  }
  return {};
}

WeightVector weight_from_arrangement(const TreeArrangement& t) {
  const auto report = check_compatibility(t);
  if (!report.compatible) {
    throw CompatibilityError("arrangement is not compatible: " +
                             report.violation->describe());
  }
  WeightVector w(t.k, t.n);
  std::vector<Dissimilarity> metrics;
  for (const auto& tree : t.trees) metrics.push_back(tree_metric(tree));
  std::size_t r = 0;
  for (const auto& s : enumerate_ksubsets(t.k, t.n)) {
    const auto p = partitions_of(s.elements()).front();
    w[r++] = -metrics[t.position(p.index)].at(p.i, p.j);
  }
  return w;
}

bool is_abstract_arrangement(const AbstractArrangement& t) {
  if (t.k != 3) throw ParameterError("the recursive check is defined for k = 3");
  if (t.n < 4) throw ParameterError("the recursive check needs n >= 4");
  LabelledFamily f;
  for (int i = 1; i <= t.n; ++i) {
    f.labels.push_back(i);
    f.trees.push_back(t.tree({i}));
  }
  return abstract_family(f);
}

std::optional<TreeArrangement> metrize_abstract_arrangement(const AbstractArrangement& t) {
  // Unknowns y = length - 1 >= 0, one per edge of every tree.
  std::vector<std::size_t> offset;
  std::size_t vars = 0;
  for (const auto& tree : t.trees) {
    offset.push_back(vars);
    vars += static_cast<std::size_t>(tree.num_edges());
  }
  lp::LinearProgram prog(vars);
  prog.set_all_nonnegative();
  for (const auto& s : enumerate_ksubsets(t.k, t.n)) {
    const auto parts = partitions_of(s.elements());
    auto path_of = [&](const Partition& p) {
      const std::size_t pos = t.position(p.index);
      std::vector<std::size_t> out;
      for (int e : path_edges(t.trees[pos], p.i, p.j)) out.push_back(offset[pos] + e);
      return out;
    };
    const auto ref = path_of(parts.front());
    for (std::size_t p = 1; p < parts.size(); ++p) {
      const auto other = path_of(parts[p]);
      RationalVector row(vars);
      for (auto v : ref) row[v] += 1;
      for (auto v : other) row[v] -= 1;
      prog.add_equal(std::move(row), static_cast<long>(other.size()) -
                                         static_cast<long>(ref.size()));
    }
  }
  RationalVector total(vars, Rational(1));
  prog.minimize(total);
  auto sol = prog.solve();
  if (!sol.optimal()) return std::nullopt;
  prog.add_equal(total, sol.objective);
  RationalVector y = sol.x;
  for (std::size_t v = 0; v < vars; ++v) {
    RationalVector unit(vars);
    unit[v] = 1;
    prog.minimize(unit);
    const auto step = prog.solve();
    if (!step.optimal()) throw InternalError("tie-breaking program lost feasibility");
    y[v] = step.objective;
    prog.add_equal(std::move(unit), step.objective);
  }
  TreeArrangement out = t;
  for (std::size_t pos = 0; pos < out.trees.size(); ++pos) {
    for (int e = 0; e < out.trees[pos].num_edges(); ++e) {
      out.trees[pos].edge(e).length = y[offset[pos] + e] + 1;
    }
  }
  return out;
}

std::vector<KSubset> arrangement_cherries(const TreeArrangement& t) {
  std::vector<std::set<std::pair<int, int>>> cherries;
  for (const auto& tree : t.trees) {
    const auto c = cherries_of_tree(tree);
    cherries.emplace_back(c.begin(), c.end());
  }
  std::vector<KSubset> out;
  for (const auto& s : enumerate_ksubsets(t.k, t.n)) {
    bool all = true;
    for (const auto& p : partitions_of(s.elements())) {
      if (!cherries[t.position(p.index)].count({p.i, p.j})) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(s);
  }
  return out;
}

OrderedTreeFamily recursive_contraction_arrangement(const WeightVector& w) {
  require_shape(w.k(), w.n());
  require_member(w);
  const Normalizer norm(w);
  OrderedTreeFamily out{w.k(), w.n(), {}, {}};
  const int depth = w.k() - 2;
  std::vector<int> tuple;
  std::vector<bool> used(w.n() + 1, false);

  std::function<void()> walk = [&] {
    if (static_cast<int>(tuple.size()) == depth) {
      WeightVector cur = w;
      std::vector<int> labels;
      for (int i = 1; i <= w.n(); ++i) labels.push_back(i);
      for (int i : tuple) {
        const auto it = std::find(labels.begin(), labels.end(), i);
        cur = contraction_restriction(cur, static_cast<int>(it - labels.begin()) + 1);
        labels.erase(it);
      }
      Dissimilarity d(labels);
      std::size_t r = 0;
      for (const auto& s : enumerate_ksubsets(2, cur.n())) {
        d.set(labels[s.elements()[0] - 1], labels[s.elements()[1] - 1], norm(cur[r++]));
      }
      out.tuples.push_back(tuple);
      out.trees.push_back(tree_for(d));
      return;
    }
    for (int i = 1; i <= w.n(); ++i) {
      if (used[i]) continue;
      used[i] = true;
      tuple.push_back(i);
      walk();
      tuple.pop_back();
      used[i] = false;
    }
  };
  walk();
  return out;
}

WhiteheadDiff generalized_whitehead_diff(const TreeArrangement& a, const TreeArrangement& b) {
  if (a.k != b.k || a.n != b.n || a.indices != b.indices) {
    throw ParameterError("arrangements have different index structures");
  }
  WhiteheadDiff out;
  bool all_moves = true;
  for (std::size_t t = 0; t < a.trees.size(); ++t) {
    if (labelled_isomorphic(a.trees[t], b.trees[t])) continue;
    out.differing.push_back(a.indices[t]);
    if (all_moves) all_moves = is_whitehead_related(a.trees[t], b.trees[t]);
  }
  if (out.differing.empty()) {
    out.relation = ArrangementRelation::kIdentical;
  } else {
    out.relation = all_moves ? ArrangementRelation::kGeneralizedWhitehead
                             : ArrangementRelation::kFarther;
  }
  return out;
}

std::string relation_name(ArrangementRelation r) {
  switch (r) {
    case ArrangementRelation::kIdentical:
      return "identical";
    case ArrangementRelation::kGeneralizedWhitehead:
      return "generalized-Whitehead";
    case ArrangementRelation::kFarther:
      return "farther";
  }
  return "unknown";
}

TreeArrangement relabel_arrangement(const TreeArrangement& t, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != t.n) throw ParameterError("permutation length mismatch");
  std::vector<std::pair<int, int>> mapping;
  for (int i = 1; i <= t.n; ++i) mapping.emplace_back(i, sigma[i - 1]);
  std::map<std::vector<int>, MetricTree> moved;
  for (std::size_t p = 0; p < t.trees.size(); ++p) {
    std::vector<int> image;
    for (int i : t.indices[p]) image.push_back(sigma[i - 1]);
    std::sort(image.begin(), image.end());
    moved.emplace(image, relabel_leaves(t.trees[p], mapping));
  }
  std::vector<MetricTree> trees;
  for (auto& [index, tree] : moved) trees.push_back(std::move(tree));
  return make_arrangement(t.k, t.n, std::move(trees));
}

}  // namespace dressian
