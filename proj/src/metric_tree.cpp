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

#include "dressian/metric_tree.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <set>

#include "dressian/errors.hpp"

namespace dressian {
namespace {

using Mask = std::uint64_t;

std::vector<std::vector<int>> split_keys(const MetricTree& tree) {
  std::vector<std::vector<int>> keys;
  for (const auto& s : splits_of_tree(tree)) keys.push_back(s.a);
  return keys;
}

Rational pendant_length(const MetricTree& tree, int label) {
  const int v = tree.leaf_vertex(label);
  return tree.edge(tree.incident(v).front()).length;
}

// Copies the live part of a tree, merging internal vertices of degree two.
MetricTree suppress_degree_two(const MetricTree& in) {
  const int nv = in.num_vertices();
  std::vector<bool> edge_alive(in.num_edges(), true);
  std::vector<MetricTree::Edge> edges;
  for (int e = 0; e < in.num_edges(); ++e) edges.push_back(in.edge(e));
  std::vector<std::vector<int>> inc(nv);
  for (int v = 0; v < nv; ++v) inc[v] = in.incident(v);
  std::vector<bool> vertex_alive(nv, true);

  for (int v = 0; v < nv; ++v) {
    if (in.is_leaf(v) || inc[v].size() != 2) continue;
    const int e1 = inc[v][0], e2 = inc[v][1];
    const int p = edges[e1].u == v ? edges[e1].v : edges[e1].u;
    const int q = edges[e2].u == v ? edges[e2].v : edges[e2].u;
    // Reuse e1 as the merged edge p - q.
    edges[e1] = {p, q, edges[e1].length + edges[e2].length};
    edge_alive[e2] = false;
    std::replace(inc[q].begin(), inc[q].end(), e2, e1);
    vertex_alive[v] = false;
    inc[v].clear();
  }
  MetricTree out;
  std::vector<int> remap(nv, -1);
  for (int v = 0; v < nv; ++v) {
    if (!vertex_alive[v]) continue;
    remap[v] = in.is_leaf(v) ? out.add_leaf(in.label(v)) : out.add_internal();
  }
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!edge_alive[e]) continue;
    out.add_edge(remap[edges[e].u], remap[edges[e].v], edges[e].length);
  }
  return out;
}

// Buneman isolation index of the bipartition (side, complement) on the
// positions 0..m-1 of a dissimilarity.
Rational buneman_index(const Dissimilarity& d, Mask side, std::size_t m) {
  std::vector<std::size_t> a, b;
  for (std::size_t p = 0; p < m; ++p) ((side >> p) & 1 ? a : b).push_back(p);
  const auto& lab = d.labels();
  auto dist = [&](std::size_t x, std::size_t y) -> const Rational& {
    return d.at(lab[x], lab[y]);
  };
  std::optional<Rational> best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t i2 = i; i2 < a.size(); ++i2) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t j2 = j; j2 < b.size(); ++j2) {
          const Rational s1 = dist(a[i], b[j]) + dist(a[i2], b[j2]);
          const Rational s2 = dist(a[i], b[j2]) + dist(a[i2], b[j]);
          Rational v = (s1 > s2 ? s1 : s2) - dist(a[i], a[i2]) - dist(b[j], b[j2]);
          if (!best || v < *best) best = v;
        }
      }
    }
  }
  return *best / 2;
}

std::vector<int> mask_to_labels(Mask mask, const std::vector<int>& labels) {
  std::vector<int> out;
  for (std::size_t p = 0; p < labels.size(); ++p) {
    if ((mask >> p) & 1) out.push_back(labels[p]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// MetricTree

int MetricTree::add_leaf(int label) {
  if (label <= 0) throw ParameterError("leaf labels must be positive integers");
  labels_.push_back(label);
  incident_.emplace_back();
  return num_vertices() - 1;
}

int MetricTree::add_internal() {
  labels_.push_back(0);
  incident_.emplace_back();
  return num_vertices() - 1;
}

int MetricTree::add_edge(int u, int v, Rational length) {
  edges_.push_back({u, v, std::move(length)});
  const int e = num_edges() - 1;
  incident_[u].push_back(e);
  incident_[v].push_back(e);
  return e;
}

void MetricTree::validate() const {
  const int nv = num_vertices();
  if (nv < 2) throw ParameterError("a tree needs at least two leaves");
  if (num_edges() != nv - 1) throw ParameterError("graph is not a tree");
  std::vector<bool> seen(nv, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e : incident_[v]) {
      const int w = other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != nv) throw ParameterError("graph is not connected");
  std::set<int> labels;
  for (int v = 0; v < nv; ++v) {
    if (is_leaf(v)) {
      if (degree(v) != 1) throw ParameterError("labelled vertex is not a leaf");
      if (!labels.insert(label(v)).second) {
        throw ParameterError("duplicate leaf label " + std::to_string(label(v)));
      }
    } else if (degree(v) < 3) {
      throw ParameterError("internal vertex of degree " +
                           std::to_string(degree(v)));
    }
  }
  for (const auto& e : edges_) {
    if (e.length < 0) throw ParameterError("negative edge length");
  }
}

std::vector<int> MetricTree::leaves() const {
  std::vector<int> out;
  for (int l : labels_) {
    if (l != 0) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int MetricTree::leaf_vertex(int label) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (labels_[v] == label && label != 0) return v;
  }
  throw ParameterError("unknown leaf label " + std::to_string(label));
}

bool MetricTree::has_leaf(int label) const {
  return label != 0 &&
         std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

bool MetricTree::is_internal_edge(int e) const {
  return !is_leaf(edges_[e].u) && !is_leaf(edges_[e].v);
}

bool MetricTree::is_trivalent() const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (!is_leaf(v) && degree(v) != 3) return false;
  }
  return true;
}

std::vector<int> MetricTree::leaves_beyond(int e, int from) const {
  const int start = other_end(e, from);
  std::vector<int> out;
  std::vector<std::pair<int, int>> stack{{start, e}};
  while (!stack.empty()) {
    const auto [v, via] = stack.back();
    stack.pop_back();
    if (is_leaf(v)) out.push_back(labels_[v]);
    for (int f : incident_[v]) {
      if (f != via) stack.push_back({other_end(f, v), f});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void MetricTree::move_edge_end(int e, int old_end, int new_end) {
  Edge& ed = edges_[e];
  if (ed.u == old_end) {
    ed.u = new_end;
  } else if (ed.v == old_end) {
    ed.v = new_end;
  } else {
    throw ParameterError("edge is not incident to the given vertex");
  }
  auto& inc = incident_[old_end];
  inc.erase(std::find(inc.begin(), inc.end(), e));
  incident_[new_end].push_back(e);
}

// ---------------------------------------------------------------------------
// Dissimilarity

Dissimilarity::Dissimilarity(std::vector<int> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    throw ParameterError("duplicate label in dissimilarity");
  }
  values_.assign(labels_.size() * labels_.size(), Rational(0));
}

std::size_t Dissimilarity::index_of(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    throw ParameterError("unknown label " + std::to_string(label));
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

const Rational& Dissimilarity::at(int i, int j) const {
  return values_[index_of(i) * labels_.size() + index_of(j)];
}

void Dissimilarity::set(int i, int j, Rational value) {
  const std::size_t a = index_of(i), b = index_of(j);
  if (a == b && value != 0) throw ParameterError("diagonal must be zero");
  values_[a * labels_.size() + b] = value;
  values_[b * labels_.size() + a] = std::move(value);
}

// ---------------------------------------------------------------------------
// Splits

std::string Split::to_string() const {
  const bool compact = (a.empty() || a.back() < 10) && (b.empty() || b.back() < 10);
  auto side = [&](const std::vector<int>& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!compact && i > 0) out += ',';
      out += std::to_string(s[i]);
    }
    return out;
  };
  return side(a) + "|" + side(b);
}

Split make_split(std::vector<int> side, const std::vector<int>& leaves,
                 Rational weight) {
  std::sort(side.begin(), side.end());
  std::vector<int> rest;
  std::set_difference(leaves.begin(), leaves.end(), side.begin(), side.end(),
                      std::back_inserter(rest));
  if (side.empty() || rest.empty() ||
      side.size() + rest.size() != leaves.size()) {
    throw ParameterError("split sides must partition the leaf set");
  }
  if (side.front() > rest.front()) std::swap(side, rest);
  return Split{std::move(side), std::move(rest), std::move(weight)};
}

std::vector<Split> splits_of_tree(const MetricTree& tree) {
  const auto leaves = tree.leaves();
  std::vector<Split> out;
  for (int e = 0; e < tree.num_edges(); ++e) {
    if (!tree.is_internal_edge(e)) continue;
    out.push_back(make_split(tree.leaves_beyond(e, tree.edge(e).u), leaves,
                             tree.edge(e).length));
  }
  std::sort(out.begin(), out.end(),
            [](const Split& x, const Split& y) { return x.a < y.a; });
  return out;
}

// ---------------------------------------------------------------------------
// Metrics

Dissimilarity tree_metric(const MetricTree& tree) {
  Dissimilarity d(tree.leaves());
  for (int s = 0; s < tree.num_vertices(); ++s) {
    if (!tree.is_leaf(s)) continue;
    std::vector<std::tuple<int, int, Rational>> stack{{s, -1, Rational(0)}};
    while (!stack.empty()) {
      auto [v, via, dist] = stack.back();
      stack.pop_back();
      if (tree.is_leaf(v) && v != s) d.set(tree.label(s), tree.label(v), dist);
      for (int f : tree.incident(v)) {
        if (f != via) {
          stack.emplace_back(tree.other_end(f, v), f, dist + tree.edge(f).length);
        }
      }
    }
  }
  return d;
}

std::optional<std::array<int, 4>> four_point_violation(const Dissimilarity& d) {
  const auto& l = d.labels();
  const std::size_t m = l.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        for (std::size_t e = c + 1; e < m; ++e) {
          const int i = l[a], j = l[b], k = l[c], q = l[e];
          const Rational s1 = d.at(i, j) + d.at(k, q);
          const Rational s2 = d.at(i, k) + d.at(j, q);
          const Rational s3 = d.at(i, q) + d.at(j, k);
          const Rational mx = std::max({s1, s2, s3});
          const int hits = (s1 == mx) + (s2 == mx) + (s3 == mx);
          if (hits < 2) return std::array<int, 4>{i, j, k, q};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_tree_metric(const Dissimilarity& d) {
  return !four_point_violation(d).has_value();
}

MetricTree reconstruct_tree(const Dissimilarity& d) {
  const auto& labels = d.labels();
  const std::size_t m = labels.size();
  if (m < 2) throw ReconstructionError("need at least two leaves");
  if (m > 63) throw ReconstructionError("at most 63 leaves are supported");
  if (auto q = four_point_violation(d)) {
    throw ReconstructionError(
        "four-point condition fails on quartet {" + std::to_string((*q)[0]) +
        "," + std::to_string((*q)[1]) + "," + std::to_string((*q)[2]) + "," +
        std::to_string((*q)[3]) + "}");
  }
  if (m == 2) {
    if (d.at(labels[0], labels[1]) < 0) {
      throw ReconstructionError("negative distance");
    }
    MetricTree t;
    t.add_edge(t.add_leaf(labels[0]), t.add_leaf(labels[1]),
               d.at(labels[0], labels[1]));
    return t;
  }

  // Grow the positive-index split system one leaf at a time; every split of
  // the final tree restricts to a positive split of each prefix.
  auto canonical = [](Mask s, std::size_t width) {
    const Mask full = width == 64 ? ~Mask{0} : ((Mask{1} << width) - 1);
    return (s & 1) ? s : (full & ~s);
  };
  std::set<Mask> positive{Mask{1}};  // {0} | {1}
  for (std::size_t x = 2; x < m; ++x) {
    std::set<Mask> candidates;
    for (Mask s : positive) {
      candidates.insert(canonical(s, x + 1));
      candidates.insert(canonical(s | (Mask{1} << x), x + 1));
    }
    candidates.insert(canonical(Mask{1} << x, x + 1));
    std::set<Mask> next;
    for (Mask s : candidates) {
      if (buneman_index(d, s, x + 1) > 0) next.insert(s);
    }
    positive = std::move(next);
  }

  std::vector<Split> internal;
  for (Mask s : positive) {
    const auto side = mask_to_labels(s, labels);
    if (side.size() < 2 || side.size() > m - 2) continue;
    internal.push_back(make_split(side, labels, buneman_index(d, s, m)));
  }
  std::vector<Rational> pendant;
  for (std::size_t p = 0; p < m; ++p) {
    Rational len = buneman_index(d, canonical(Mask{1} << p, m), m);
    if (len < 0) {
      throw ReconstructionError("leaf " + std::to_string(labels[p]) +
                                " would need a negative pendant edge");
    }
    pendant.push_back(std::move(len));
  }
  MetricTree tree = tree_from_splits(labels, internal, pendant);
  if (!(tree_metric(tree) == d)) {
    throw ReconstructionError("dissimilarity is not realized by a metric tree");
  }
  return tree;
}

MetricTree tree_from_splits(const std::vector<int>& leaves,
                            const std::vector<Split>& internal,
                            const std::vector<Rational>& pendant) {
  std::vector<int> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 3) throw ParameterError("need at least three leaves");
  if (!pendant.empty() && pendant.size() != sorted.size()) {
    throw ParameterError("pendant length count mismatch");
  }
  const int root = sorted.front();
  struct Cluster {
    std::vector<int> members;
    Rational weight;
    int vertex = -1;
  };
  std::vector<Cluster> clusters;
  for (const auto& s : internal) {
    std::vector<int> all = s.a;
    all.insert(all.end(), s.b.begin(), s.b.end());
    std::sort(all.begin(), all.end());
    if (all != sorted) throw ParameterError("split " + s.to_string() +
                                            " is not on the leaf set");
    if (s.trivial()) throw ParameterError("trivial split given as internal");
    const auto& side = std::binary_search(s.a.begin(), s.a.end(), root) ? s.b : s.a;
    clusters.push_back({side, s.weight, -1});
  }
  std::stable_sort(clusters.begin(), clusters.end(),
                   [](const Cluster& x, const Cluster& y) {
                     return x.members.size() > y.members.size();
                   });
  auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  MetricTree tree;
  const int top = tree.add_internal();
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    int parent = top;
    for (std::size_t j = i; j-- > 0;) {
      const auto& big = clusters[j].members;
      const auto& small = clusters[i].members;
      if (big == small) throw ParameterError("duplicate split");
      if (contains(big, small)) {
        if (parent == top) parent = clusters[j].vertex;
        continue;
      }
      std::vector<int> common;
      std::set_intersection(big.begin(), big.end(), small.begin(), small.end(),
                            std::back_inserter(common));
      if (!common.empty()) throw ParameterError("splits are not compatible");
    }
    clusters[i].vertex = tree.add_internal();
    tree.add_edge(parent, clusters[i].vertex, clusters[i].weight);
  }
  for (std::size_t p = 0; p < sorted.size(); ++p) {
    const int x = sorted[p];
    int parent = top;
    for (std::size_t j = clusters.size(); j-- > 0;) {
      if (std::binary_search(clusters[j].members.begin(),
                             clusters[j].members.end(), x)) {
        parent = clusters[j].vertex;
        break;
      }
    }
    tree.add_edge(parent, tree.add_leaf(x),
                  pendant.empty() ? Rational(1) : pendant[p]);
  }
  tree.validate();
  return tree;
}

// ---------------------------------------------------------------------------
// Moves and comparisons

MetricTree whitehead_move(const MetricTree& tree, int e, int choice) {
  if (e < 0 || e >= tree.num_edges()) throw ParameterError("edge out of range");
  if (!tree.is_internal_edge(e)) {
    throw ParameterError("Whitehead moves need an internal edge");
  }
  if (choice != 0 && choice != 1) throw ParameterError("choice must be 0 or 1");
  int u = tree.edge(e).u, v = tree.edge(e).v;
  if (tree.degree(u) != 3 || tree.degree(v) != 3) {
    throw ParameterError("edge endpoints must both have degree three");
  }
  const int min_leaf = tree.leaves().front();
  const auto u_side = tree.leaves_beyond(e, v);
  if (!std::binary_search(u_side.begin(), u_side.end(), min_leaf)) std::swap(u, v);

  auto branches = [&](int at) {
    std::vector<std::pair<int, int>> out;  // (min leaf, edge)
    for (int f : tree.incident(at)) {
      if (f != e) out.emplace_back(tree.leaves_beyond(f, at).front(), f);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const auto at_u = branches(u), at_v = branches(v);
  MetricTree out = tree;
  const int eb = at_u[1].second;
  const int swap_in = choice == 0 ? at_v[0].second : at_v[1].second;
  out.move_edge_end(eb, u, v);
  out.move_edge_end(swap_in, v, u);
  return out;
}

MetricTree whitehead_move(const MetricTree& tree, const Split& edge, int choice) {
  for (int e = 0; e < tree.num_edges(); ++e) {
    if (!tree.is_internal_edge(e)) continue;
    const auto s = make_split(tree.leaves_beyond(e, tree.edge(e).u), tree.leaves());
    if (s.a == edge.a) return whitehead_move(tree, e, choice);
  }
  throw ParameterError("tree has no internal edge with split " + edge.to_string());
}

bool is_whitehead_related(const MetricTree& t1, const MetricTree& t2) {
  if (t1.leaves() != t2.leaves()) {
    throw ParameterError("trees have different leaf sets");
  }
  if (!t1.is_trivalent() || !t2.is_trivalent()) return false;
  const auto s1 = split_keys(t1), s2 = split_keys(t2);
  std::vector<std::vector<int>> only1, only2;
  std::set_difference(s1.begin(), s1.end(), s2.begin(), s2.end(),
                      std::back_inserter(only1));
  std::set_difference(s2.begin(), s2.end(), s1.begin(), s1.end(),
                      std::back_inserter(only2));
  if (only1.size() != 1 || only2.size() != 1) return false;
  const Split edge = make_split(only1.front(), t1.leaves());
  for (int choice : {0, 1}) {
    if (split_keys(whitehead_move(t1, edge, choice)) == s2) return true;
  }
  return false;
}

bool labelled_isomorphic(const MetricTree& t1, const MetricTree& t2, bool metric) {
  if (t1.leaves() != t2.leaves()) return false;
  const auto s1 = splits_of_tree(t1), s2 = splits_of_tree(t2);
  if (s1.size() != s2.size()) return false;
  for (std::size_t i = 0; i < s1.size(); ++i) {
    if (s1[i].a != s2[i].a) return false;
    if (metric && s1[i].weight != s2[i].weight) return false;
  }
  if (metric) {
    for (int l : t1.leaves()) {
      if (pendant_length(t1, l) != pendant_length(t2, l)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> cherries_of_tree(const MetricTree& tree) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < tree.num_vertices(); ++v) {
    if (tree.is_leaf(v) || tree.degree(v) != 3) continue;
    std::vector<int> leaf_nbrs;
    for (int e : tree.incident(v)) {
      const int w = tree.other_end(e, v);
      if (tree.is_leaf(w)) leaf_nbrs.push_back(tree.label(w));
    }
    std::sort(leaf_nbrs.begin(), leaf_nbrs.end());
    for (std::size_t i = 0; i < leaf_nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < leaf_nbrs.size(); ++j) {
        out.emplace_back(leaf_nbrs[i], leaf_nbrs[j]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

MetricTree delete_leaf(const MetricTree& tree, int label) {
  const int x = tree.leaf_vertex(label);
  if (tree.leaves().size() < 3) {
    throw ParameterError("cannot delete a leaf from a two-leaf tree");
  }
  const int ex = tree.incident(x).front();
  MetricTree copy;
  std::vector<int> remap(tree.num_vertices(), -1);
  for (int v = 0; v < tree.num_vertices(); ++v) {
    if (v == x) continue;
    remap[v] = tree.is_leaf(v) ? copy.add_leaf(tree.label(v)) : copy.add_internal();
  }
  for (int e = 0; e < tree.num_edges(); ++e) {
    if (e == ex) continue;
    const auto& ed = tree.edge(e);
    copy.add_edge(remap[ed.u], remap[ed.v], ed.length);
  }
  MetricTree out = suppress_degree_two(copy);
  out.validate();
  return out;
}

MetricTree caterpillar(std::pair<int, int> first, const std::vector<int>& middle,
                       std::pair<int, int> last, const Rational& internal,
                       const Rational& pendant) {
  MetricTree t;
  std::vector<int> spine;
  spine.push_back(t.add_internal());
  t.add_edge(spine.back(), t.add_leaf(first.first), pendant);
  t.add_edge(spine.back(), t.add_leaf(first.second), pendant);
  for (int c : middle) {
    const int s = t.add_internal();
    t.add_edge(spine.back(), s, internal);
    t.add_edge(s, t.add_leaf(c), pendant);
    spine.push_back(s);
  }
  const int s = t.add_internal();
  t.add_edge(spine.back(), s, internal);
  t.add_edge(s, t.add_leaf(last.first), pendant);
  t.add_edge(s, t.add_leaf(last.second), pendant);
  t.validate();
  return t;
}

MetricTree relabel_leaves(const MetricTree& tree,
                          const std::vector<std::pair<int, int>>& mapping) {
  std::map<int, int> m(mapping.begin(), mapping.end());
  MetricTree out;
  for (int v = 0; v < tree.num_vertices(); ++v) {
    if (tree.is_leaf(v)) {
      auto it = m.find(tree.label(v));
      if (it == m.end()) {
        throw ParameterError("no image for leaf " + std::to_string(tree.label(v)));
      }
      out.add_leaf(it->second);
    } else {
      out.add_internal();
    }
  }
  for (int e = 0; e < tree.num_edges(); ++e) {
    out.add_edge(tree.edge(e).u, tree.edge(e).v, tree.edge(e).length);
  }
  out.validate();
  return out;
}

std::vector<MetricTree> enumerate_trivalent_topologies(
    const std::vector<int>& leaves) {
  std::vector<int> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() < 3) throw ParameterError("need at least three leaves");
  MetricTree star;
  const int c = star.add_internal();
  for (int i = 0; i < 3; ++i) star.add_edge(c, star.add_leaf(sorted[i]), 1);
  std::vector<MetricTree> current{star};
  for (std::size_t i = 3; i < sorted.size(); ++i) {
    std::vector<MetricTree> next;
    for (const auto& t : current) {
      for (int e = 0; e < t.num_edges(); ++e) {
        MetricTree u = t;
        const int old_v = u.edge(e).v;
        const int mid = u.add_internal();
        u.move_edge_end(e, old_v, mid);
        u.add_edge(mid, old_v, 1);
        u.add_edge(mid, u.add_leaf(sorted[i]), 1);
        next.push_back(std::move(u));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<MetricTree> enumerate_topologies(const std::vector<int>& leaves) {
  std::vector<int> sorted = leaves;
  std::sort(sorted.begin(), sorted.end());
  std::set<std::vector<std::vector<int>>> seen;
  std::vector<MetricTree> out;
  for (const auto& t : enumerate_trivalent_topologies(sorted)) {
    const auto splits = splits_of_tree(t);
    const std::size_t s = splits.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << s); ++mask) {
      std::vector<Split> keep;
      std::vector<std::vector<int>> key;
      for (std::size_t i = 0; i < s; ++i) {
        if ((mask >> i) & 1) {
          keep.push_back(splits[i]);
          key.push_back(splits[i].a);
        }
      }
      if (seen.insert(key).second) out.push_back(tree_from_splits(sorted, keep));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Newick

std::string to_newick(const MetricTree& tree, bool with_lengths) {
  tree.validate();
  const auto leaves = tree.leaves();
  if (leaves.size() < 3) throw ParameterError("Newick output needs three leaves");
  const int first = tree.leaf_vertex(leaves.front());
  const int root = tree.other_end(tree.incident(first).front(), first);

  std::function<std::string(int, int)> emit = [&](int v, int via) {
    std::string body;
    if (tree.is_leaf(v)) {
      body = std::to_string(tree.label(v));
    } else {
      std::vector<std::pair<int, int>> kids;
      for (int f : tree.incident(v)) {
        if (f != via) kids.emplace_back(tree.leaves_beyond(f, v).front(), f);
      }
      std::sort(kids.begin(), kids.end());
      body = "(";
      for (std::size_t i = 0; i < kids.size(); ++i) {
        if (i > 0) body += ',';
        body += emit(tree.other_end(kids[i].second, v), kids[i].second);
      }
      body += ')';
    }
    if (via >= 0 && with_lengths) body += ":" + to_string(tree.edge(via).length);
    return body;
  };
  return emit(root, -1) + ";";
}

ParsedNewick parse_newick(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  auto fail = [&](const std::string& what) -> ParseError {
    return ParseError("Newick: " + what + " at offset " + std::to_string(pos));
  };
  MetricTree tree;
  int with_len = 0, without_len = 0;

  auto read_length = [&]() -> Rational {
    skip();
    if (pos < text.size() && text[pos] == ':') {
      ++pos;
      skip();
      const std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '/' || text[pos] == '-')) {
        ++pos;
      }
      Rational len = parse_rational(text.substr(start, pos - start));
      if (len < 0) throw fail("negative branch length");
      ++with_len;
      return len;
    }
    ++without_len;
    return Rational(1);
  };

  std::function<int()> node = [&]() -> int {
    skip();
    if (pos >= text.size()) throw fail("unexpected end of input");
    if (text[pos] == '(') {
      ++pos;
      const int v = tree.add_internal();
      for (;;) {
        const int child = node();
        tree.add_edge(v, child, read_length());
        skip();
        if (pos < text.size() && text[pos] == ',') {
          ++pos;
          continue;
        }
        if (pos < text.size() && text[pos] == ')') {
          ++pos;
          break;
        }
        throw fail("expected ',' or ')'");
      }
      return v;
    }
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) throw fail("expected a leaf label");
    return tree.add_leaf(std::stoi(std::string(text.substr(start, pos - start))));
  };

  const int root = node();
  if (tree.is_leaf(root)) throw fail("a tree needs an internal vertex");
  skip();
  if (pos < text.size() && text[pos] == ':') {
    ++pos;
    while (pos < text.size() && text[pos] != ';') ++pos;
  }
  skip();
  if (pos >= text.size() || text[pos] != ';') throw fail("expected ';'");
  ++pos;
  skip();
  if (pos != text.size()) throw fail("trailing characters");
  if (with_len > 0 && without_len > 0) {
    throw fail("branch lengths must be given for all edges or none");
  }
  ParsedNewick out{suppress_degree_two(tree), with_len > 0};
  try {
    out.tree.validate();
  } catch (const ParameterError& e) {
    throw ParseError(std::string("Newick: ") + e.what());
  }
  return out;
}

}  // namespace dressian
