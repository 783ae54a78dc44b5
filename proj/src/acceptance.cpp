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


#include "dressian/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "dressian/arrangement.hpp"
#include "dressian/errors.hpp"
#include "dressian/fixtures.hpp"
#include "dressian/pluecker.hpp"
#include "dressian/subdivision.hpp"

namespace dressian::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> subset_strings(const std::vector<KSubset>& subsets) {
  std::vector<std::string> out;
  for (const auto& s : subsets) out.push_back(s.to_string());
  return out;
}

// Results that several criteria build on, computed once per process.
struct Shared {
  std::vector<TreeArrangement> metrized;  // one per cone class
  std::vector<WeightVector> weights;
  std::vector<int> dimensions;
  std::optional<AdjacencyReport> adjacency;
  TreeArrangement source;
};

const Shared& shared() {
  static std::once_flag once;
  static Shared s;
  std::call_once(once, [] {
    for (int c = 0; c < 7; ++c) {
      auto m = metrize_abstract_arrangement(fixtures::cone_class_arrangement(c));
      if (!m) throw InternalError("cone class " + std::to_string(c) + " has no metrization");
      s.weights.push_back(weight_from_arrangement(*m));
      s.dimensions.push_back(cone_polyhedron(cone_signature(s.weights.back())).dimension);
      s.metrized.push_back(std::move(*m));
    }
    s.adjacency = adjacent_cones(s.weights[5]);
    s.source = arrangement_from_weight(s.weights[5]);
  });
  return s;
}

Rational random_rational(Rng& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> num(lo, hi), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

bool subsplits(const MetricTree& coarse, const MetricTree& fine) {
  std::set<std::vector<int>> f;
  for (const auto& s : splits_of_tree(fine)) f.insert(s.a);
  for (const auto& s : splits_of_tree(coarse)) {
    if (!f.count(s.a)) return false;
  }
  return true;
}

bool has_high_degree_vertex(const MetricTree& t) {
  for (int v = 0; v < t.num_vertices(); ++v) {
    if (!t.is_leaf(v) && t.degree(v) >= 4) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------

void criterion1(CriterionResult& r) {
  const MetricTree tree = fixtures::dr25_tree();
  std::vector<std::string> splits;
  std::vector<HypersimplexSplit> hs;
  for (const auto& s : splits_of_tree(tree)) {
    splits.push_back(s.to_string());
    hs.push_back(split_of_tree_edge(s, 5));
  }
  const bool splits_ok = splits == std::vector<std::string>{"12|345", "123|45"};
  r.details.push_back("splits: " + join(splits, ", ") + (splits_ok ? " (match)" : " (mismatch)"));
  const auto expected = fixtures::dr25_cells();
  const bool refinement_ok = common_refinement(2, 5, hs).cells == expected;
  const bool tree_ok = cells_from_tree(tree).cells == expected;
  const bool weight_ok = regular_subdivision(fixtures::dr25_weight()).cells == expected;
  r.details.push_back(std::string("common refinement ") + (refinement_ok ? "matches" : "differs") +
                      "; tree cells " + (tree_ok ? "match" : "differ") +
                      "; weight cells " + (weight_ok ? "match" : "differ"));
  r.passed = splits_ok && refinement_ok && tree_ok && weight_ok;
}

void criterion2(CriterionResult& r) {
  const WeightVector w = fixtures::delta48_weight();
  const std::size_t relations = relations_for(4, 8).size();
  const bool member = is_in_dressian(w).member;
  const bool contraction_ok = contraction_restriction(w, 1) == fixtures::delta48_contraction();
  r.details.push_back("relations: " + std::to_string(relations) + ", in Dressian: " +
                      (member ? "yes" : "no") + ", contraction at 1 reproduces w^in: " +
                      (contraction_ok ? "yes" : "no"));
  const Subdivision s = regular_subdivision(w);
  const bool matroidal = is_matroidal(s);
  std::vector<std::size_t> sizes;
  for (const auto& c : s.cells) sizes.push_back(c.size());
  std::vector<std::size_t> expected = fixtures::delta48_printed_sizes();
  auto sorted_sizes = sizes;
  std::sort(sorted_sizes.begin(), sorted_sizes.end());
  std::sort(expected.begin(), expected.end());
  const bool sizes_ok = sorted_sizes == expected;
  std::vector<std::string> size_text;
  for (auto z : sizes) size_text.push_back(std::to_string(z));
  r.details.push_back("cells: " + std::to_string(s.cells.size()) + " (sizes " +
                      join(size_text, ", ") + "), all matroidal: " + (matroidal ? "yes" : "no"));
  r.details.push_back(std::string("size multiset {17, 25, 27, 62, 17}: ") +
                      (sizes_ok ? "match" : "MISMATCH"));
  int idx = 1;
  for (const auto& positions : fixtures::delta48_printed_cells()) {
    const Cell printed = fixtures::cell_from_positions(4, 8, positions);
    std::string verdict = "not contained in any computed cell";
    for (std::size_t c = 0; c < s.cells.size(); ++c) {
      if (s.cells[c] == printed) {
        verdict = "equals computed cell of size " + std::to_string(s.cells[c].size());
        break;
      }
      if (std::includes(s.cells[c].bases.begin(), s.cells[c].bases.end(),
                        printed.bases.begin(), printed.bases.end())) {
        verdict = "proper subset of computed cell of size " + std::to_string(s.cells[c].size());
      }
    }
    r.details.push_back("printed M" + std::to_string(idx++) + " (" +
                        std::to_string(printed.size()) + "): " + verdict);
  }
  r.passed = relations == 420 && member && contraction_ok && s.cells.size() == 5 && matroidal &&
             sizes_ok;
}

void criterion3(CriterionResult& r) {
  bool all = true;
  for (const auto& cls : fixtures::dr36_cone_classes()) {
    const auto got = subset_strings(arrangement_cherries(fixtures::cone_class_arrangement(cls.id)));
    auto expected = cls.cherries;
    std::sort(expected.begin(), expected.end());
    const bool ok = got == expected;
    all = all && ok;
    r.details.push_back("C" + std::to_string(cls.id) + ": {" + join(got, ", ") + "}" +
                        (ok ? "" : " expected {" + join(expected, ", ") + "}"));
  }
  r.passed = all;
}

void criterion4(CriterionResult& r) {
  const Shared& s = shared();
  int max_dim = 0;
  for (int d : s.dimensions) max_dim = std::max(max_dim, d);
  for (const auto& a : s.adjacency->adjacent) {
    max_dim = std::max(max_dim, cone_polyhedron(a.signature).dimension);
  }
  for (const auto& f : s.adjacency->facets) {
    max_dim = std::max(max_dim, cone_polyhedron(f.signature).dimension);
  }
  bool all = true;
  for (int c = 0; c < 7; ++c) {
    const bool member = is_in_dressian(s.weights[c]).member;
    const bool maximal = is_maximal_cone(cone_signature(s.weights[c]));
    const bool ok = member && maximal && s.dimensions[c] == max_dim;
    all = all && ok;
    r.details.push_back("C" + std::to_string(c) + ": metrized, in Dressian " +
                        (member ? "yes" : "no") + ", cone dimension " +
                        std::to_string(s.dimensions[c]) + (maximal ? ", maximal" : ", NOT maximal"));
  }
  r.details.push_back("largest cone dimension encountered: " + std::to_string(max_dim));
  r.passed = all;
}

void criterion5(CriterionResult& r) {
  const Shared& s = shared();
  bool all = true;
  for (int c = 0; c < 7; ++c) {
    const auto back = arrangement_from_weight(s.weights[c]);
    const auto diff = generalized_whitehead_diff(back, fixtures::cone_class_arrangement(c));
    const bool ok = diff.relation == ArrangementRelation::kIdentical;
    all = all && ok;
    r.details.push_back("C" + std::to_string(c) + ": " +
                        (ok ? "topologies reproduced" :
                              std::to_string(diff.differing.size()) + " trees differ"));
  }
  r.passed = all;
}

void criterion6(CriterionResult& r) {
  const Shared& s = shared();
  const auto& adj = s.adjacency->adjacent;
  r.details.push_back("facets: " + std::to_string(s.adjacency->facets.size()) +
                      ", adjacent maximal cones: " + std::to_string(adj.size()));
  bool all_whitehead = true;
  std::multiset<std::set<std::string>> ours;
  for (const auto& a : adj) {
    const auto arr = arrangement_from_weight(a.representative);
    const auto diff = generalized_whitehead_diff(s.source, arr);
    const bool ok = diff.relation == ArrangementRelation::kGeneralizedWhitehead &&
                    diff.differing.size() <= 3;
    all_whitehead = all_whitehead && ok;
    const auto cherries = subset_strings(arrangement_cherries(arr));
    ours.insert(std::set<std::string>(cherries.begin(), cherries.end()));
    r.details.push_back(relation_name(diff.relation) + " |D|=" +
                        std::to_string(diff.differing.size()) + ", cherries {" +
                        join(cherries, ", ") + "}");
  }
  std::vector<int> sigma{1, 2, 3, 4, 5, 6};
  bool found = false;
  do {
    std::multiset<std::set<std::string>> image;
    for (const auto& row : fixtures::adjacent_cone_cherries()) {
      std::set<std::string> mapped;
      for (const auto& c : row) {
        std::vector<int> s3;
        for (char ch : c) s3.push_back(sigma[ch - '1']);
        std::sort(s3.begin(), s3.end());
        mapped.insert(KSubset(s3, 6).to_string());
      }
      image.insert(mapped);
    }
    found = image == ours;
  } while (!found && std::next_permutation(sigma.begin(), sigma.end()));
  if (found) {
    std::vector<std::string> text;
    for (int i = 0; i < 6; ++i) text.push_back(std::to_string(i + 1) + "->" + std::to_string(sigma[i]));
    r.details.push_back("published cherry column matches under sigma: " + join(text, " "));
  } else {
    r.details.push_back("no relabelling maps the published cherry column onto the computed one");
  }
  r.passed = adj.size() == 8 && all_whitehead && found;
}

void criterion7(CriterionResult& r) {
  const Shared& s = shared();
  bool all = true;
  int f = 0;
  for (const auto& facet : s.adjacency->facets) {
    const auto wall = arrangement_from_weight(facet.interior_point);
    bool degree_four = false;
    bool resolves = true;
    int neighbours = 0;
    for (const auto& a : s.adjacency->adjacent) {
      if (a.facet.normal != facet.normal) continue;
      ++neighbours;
      const auto other = arrangement_from_weight(a.representative);
      for (std::size_t t = 0; t < wall.trees.size(); ++t) {
        const MetricTree& w = wall.trees[t];
        if (has_high_degree_vertex(w)) degree_four = true;
        if (w.is_trivalent()) continue;
        const MetricTree& x = s.source.trees[t];
        const MetricTree& y = other.trees[t];
        resolves = resolves && x.is_trivalent() && y.is_trivalent() && subsplits(w, x) &&
                   subsplits(w, y) && !labelled_isomorphic(x, y);
      }
    }
    const bool ok = degree_four && resolves && neighbours > 0;
    all = all && ok;
    r.details.push_back("facet " + std::to_string(f++) + ": " + std::to_string(neighbours) +
                        " neighbours, degree-4 vertex " + (degree_four ? "present" : "absent") +
                        ", non-trivalent trees resolve " + (resolves ? "on both sides" : "INCORRECTLY"));
  }
  r.passed = all && !s.adjacency->facets.empty();
}

void criterion8(CriterionResult& r, const Options& o) {
  Rng rng(o.seed);
  const std::vector<std::pair<int, int>> shapes{{2, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 6}};
  // (a) Dressian membership against matroidality of the subdivision.
  {
    int agree = 0, members = 0;
    for (int i = 0; i < o.instances; ++i) {
      const auto [k, n] = shapes[i % shapes.size()];
      const bool structured = i % 3 == 0 && (k == 2 || n == 6);
      const WeightVector w =
          structured ? random_dressian_weight(rng, k, n) : random_integer_weight(rng, k, n, 0, 2);
      const bool member = is_in_dressian(w).member;
      members += member;
      agree += member == is_matroidal(regular_subdivision(w));
    }
    r.details.push_back("(a) membership vs matroidal: " + std::to_string(agree) + "/" +
                        std::to_string(o.instances) + " agree (" + std::to_string(members) +
                        " members)");
    r.passed = agree == o.instances;
  }
  // (b) four-point condition against Dr(2, m) of the negated dissimilarity.
  {
    int agree = 0, metrics = 0;
    for (int i = 0; i < o.instances; ++i) {
      const int m = 4 + i % 3;
      std::vector<int> leaves(m);
      std::iota(leaves.begin(), leaves.end(), 1);
      Dissimilarity d(leaves);
      if (i % 2 == 0) {
        d = tree_metric(random_trivalent_tree(rng, leaves));
      } else {
        std::uniform_int_distribution<int> v(1, 4);
        for (int a = 1; a <= m; ++a) {
          for (int b = a + 1; b <= m; ++b) d.set(a, b, v(rng));
        }
      }
      WeightVector w(2, m);
      std::size_t rank = 0;
      for (const auto& s : enumerate_ksubsets(2, m)) {
        w[rank++] = -d.at(s.elements()[0], s.elements()[1]);
      }
      const bool tree = is_tree_metric(d);
      metrics += tree;
      agree += tree == is_in_dressian(w).member;
    }
    r.details.push_back("(b) four-point vs Dr(2,m): " + std::to_string(agree) + "/" +
                        std::to_string(o.instances) + " agree (" + std::to_string(metrics) +
                        " tree metrics)");
    r.passed = r.passed && agree == o.instances;
  }
  // (c) reconstruction inverts the tree metric.
  {
    int ok = 0;
    for (int i = 0; i < o.instances; ++i) {
      const int m = 3 + i % 6;
      std::vector<int> leaves(m);
      std::iota(leaves.begin(), leaves.end(), 1);
      const MetricTree t = random_trivalent_tree(rng, leaves);
      ok += labelled_isomorphic(reconstruct_tree(tree_metric(t)), t, true);
    }
    r.details.push_back("(c) reconstruct after tree_metric: " + std::to_string(ok) + "/" +
                        std::to_string(o.instances) + " identical");
    r.passed = r.passed && ok == o.instances;
  }
  // (d) tree cells against the common refinement of the tree's splits.
  {
    int total = 0, ok = 0;
    for (int m = 3; m <= 7; ++m) {
      std::vector<int> leaves(m);
      std::iota(leaves.begin(), leaves.end(), 1);
      for (const auto& t : enumerate_trivalent_topologies(leaves)) {
        std::vector<HypersimplexSplit> hs;
        for (const auto& s : splits_of_tree(t)) hs.push_back(split_of_tree_edge(s, m));
        ++total;
        ok += cells_from_tree(t).cells == common_refinement(2, m, hs).cells;
      }
    }
    r.details.push_back("(d) cells_from_tree vs common refinement: " + std::to_string(ok) + "/" +
                        std::to_string(total) + " topologies on 3..7 leaves");
    r.passed = r.passed && ok == total;
  }
  // (e) signatures ignore lineality shifts and positive scaling.
  {
    int ok = 0;
    for (int i = 0; i < o.instances; ++i) {
      const auto [k, n] = i % 2 == 0 ? std::pair{2, 3 + i % 4} : std::pair{3, 6};
      const WeightVector w = random_dressian_weight(rng, k, n);
      RationalVector shift;
      for (int j = 0; j < n; ++j) shift.push_back(random_rational(rng, -5, 5, 3));
      const Rational factor = random_rational(rng, 1, 7, 4);
      const WeightVector moved = scale(lineality_shift(w, shift), factor);
      ok += cone_signature(w) == cone_signature(moved);
    }
    r.details.push_back("(e) signature invariance: " + std::to_string(ok) + "/" +
                        std::to_string(o.instances));
    r.passed = r.passed && ok == o.instances;
  }
}

void criterion9(CriterionResult& r) {
  const WeightVector w = fixtures::delta48_weight();
  const auto family = recursive_contraction_arrangement(w);
  const auto arrangement = arrangement_from_weight(w);
  bool match = family.trees.size() == 56 && arrangement.trees.size() == 28;
  std::set<std::vector<std::vector<int>>> distinct;
  for (std::size_t t = 0; t < family.tuples.size(); ++t) {
    auto index = family.tuples[t];
    std::sort(index.begin(), index.end());
    match = match && labelled_isomorphic(family.trees[t], arrangement.tree(index), true);
    std::vector<std::vector<int>> key{index};
    for (const auto& s : splits_of_tree(family.trees[t])) key.push_back(s.a);
    distinct.insert(key);
  }
  int trivalent = 0;
  for (const auto& t : arrangement.trees) trivalent += t.is_trivalent();
  r.details.push_back("Delta(4,8): " + std::to_string(family.trees.size()) + " ordered trees, " +
                      std::to_string(distinct.size()) + " distinct, " +
                      std::to_string(arrangement.trees.size()) + " set-indexed (" +
                      std::to_string(trivalent) + " trivalent); tuple order " +
                      (match ? "irrelevant" : "MATTERS"));
  const Shared& s = shared();
  bool classical = true;
  for (int c = 0; c < 7; ++c) {
    const auto fam = recursive_contraction_arrangement(s.weights[c]);
    const auto arr = arrangement_from_weight(s.weights[c]);
    for (std::size_t t = 0; t < fam.trees.size(); ++t) {
      classical = classical && labelled_isomorphic(fam.trees[t], arr.tree(fam.tuples[t]), true);
    }
  }
  r.details.push_back(std::string("k = 3 constructions coincide on all seven classes: ") +
                      (classical ? "yes" : "no"));
  r.passed = match && distinct.size() == 28 && classical;
}

const char* kTitles[kCriteria] = {
    "Dr(2,5) splits and cells",
    "Delta(4,8) membership, contraction and cells",
    "cherries of the seven Dr(3,6) classes",
    "metrization and membership",
    "round trip through the weight",
    "adjacent cones of the fifth class",
    "wall arrangements",
    "oracle equivalence suites",
    "generalized arrangement consistency",
};
const double kLimits[kCriteria] = {1, 60, 1, 60, 60, 600, 600, 600, 120};

}  // namespace

MetricTree random_trivalent_tree(Rng& rng, const std::vector<int>& leaves) {
  if (leaves.size() < 3) throw ParameterError("need at least three leaves");
  std::vector<int> order = leaves;
  std::shuffle(order.begin(), order.end(), rng);
  MetricTree t;
  const int c = t.add_internal();
  for (int i = 0; i < 3; ++i) t.add_edge(c, t.add_leaf(order[i]), 1);
  for (std::size_t i = 3; i < order.size(); ++i) {
    std::uniform_int_distribution<int> pick(0, t.num_edges() - 1);
    const int e = pick(rng);
    const int old_v = t.edge(e).v;
    const int mid = t.add_internal();
    t.move_edge_end(e, old_v, mid);
    t.add_edge(mid, old_v, 1);
    t.add_edge(mid, t.add_leaf(order[i]), 1);
  }
  for (int e = 0; e < t.num_edges(); ++e) {
    t.edge(e).length = t.is_internal_edge(e) ? random_rational(rng, 1, 9, 4)
                                             : random_rational(rng, 0, 9, 4);
  }
  return t;
}

WeightVector random_integer_weight(Rng& rng, int k, int n, int lo, int hi) {
  std::uniform_int_distribution<int> v(lo, hi);
  WeightVector w(k, n);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = v(rng);
  return w;
}

WeightVector random_dressian_weight(Rng& rng, int k, int n) {
  if (k == 2) {
    std::vector<int> leaves(n);
    std::iota(leaves.begin(), leaves.end(), 1);
    const Dissimilarity d = tree_metric(random_trivalent_tree(rng, leaves));
    WeightVector w(2, n);
    std::size_t r = 0;
    for (const auto& s : enumerate_ksubsets(2, n)) w[r++] = -d.at(s.elements()[0], s.elements()[1]);
    return w;
  }
  if (k == 3 && n == 6) {
    const Shared& s = shared();
    std::uniform_int_distribution<int> pick(0, 6);
    std::vector<int> sigma{1, 2, 3, 4, 5, 6};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    RationalVector shift;
    for (int j = 0; j < n; ++j) shift.push_back(random_rational(rng, -3, 3, 2));
    return scale(lineality_shift(relabel(s.weights[pick(rng)], sigma), shift),
                 random_rational(rng, 1, 5, 3));
  }
  throw ParameterError("random Dressian points are available for k = 2 and (3, 6)");
}

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriteria) throw ParameterError("criterion must be in 1..9");
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  r.limit_seconds = kLimits[id - 1];
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: criterion1(r); break;
      case 2: criterion2(r); break;
      case 3: criterion3(r); break;
      case 4: criterion4(r); break;
      case 5: criterion5(r); break;
      case 6: criterion6(r); break;
      case 7: criterion7(r); break;
      case 8: criterion8(r, options); break;
      case 9: criterion9(r); break;
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (r.seconds > r.limit_seconds) {
    r.passed = false;
    r.details.push_back("time limit exceeded");
  }
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, options));
  return out;
}

std::string summary_line(const CriterionResult& r, bool with_time) {
  std::ostringstream s;
  s << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title;
  if (with_time) {
    s << std::fixed;
    s.precision(2);
    s << " (" << r.seconds << " s, limit " << static_cast<int>(r.limit_seconds) << " s)";
  }
  return s.str();
}

}  // namespace dressian::acceptance
