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

#include "dressian/pluecker.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "dressian/errors.hpp"
#include "dressian/lp.hpp"

namespace dressian {
namespace {

std::size_t ambient_dim(int k, int n) { return binomial(n, k); }

RationalVector difference(const ThreeTermRelation& r, int x, int y,
                          std::size_t dim) {
  RationalVector v(dim);
  v[r.terms[x][0]] += 1;
  v[r.terms[x][1]] += 1;
  v[r.terms[y][0]] -= 1;
  v[r.terms[y][1]] -= 1;
  return v;
}

// Linear system of a (possibly partial) signature.
class ConeSystem {
 public:
  explicit ConeSystem(std::size_t dim) : dim_(dim), eq_(dim) {}

  void add(const ThreeTermRelation& r, TiePattern p) {
    switch (p) {
      case TiePattern::kAllEqual:
        add_equality(difference(r, 0, 1, dim_));
        add_equality(difference(r, 0, 2, dim_));
        break;
      case TiePattern::kPair12:
        add_equality(difference(r, 0, 1, dim_));
        strict_.push_back(difference(r, 2, 0, dim_));
        break;
      case TiePattern::kPair13:
        add_equality(difference(r, 0, 2, dim_));
        strict_.push_back(difference(r, 1, 0, dim_));
        break;
      case TiePattern::kPair23:
        add_equality(difference(r, 1, 2, dim_));
        strict_.push_back(difference(r, 0, 1, dim_));
        break;
    }
  }

  int dimension() const { return static_cast<int>(dim_ - eq_.rank()); }
  const linalg::Matrix& equalities() const { return equalities_; }
  const linalg::Matrix& strict() const { return strict_; }
  const linalg::RowEchelon& echelon() const { return eq_; }

 private:
  void add_equality(RationalVector row) {
    equalities_.push_back(row);
    eq_.add(std::move(row));
  }

  std::size_t dim_;
  linalg::RowEchelon eq_;
  linalg::Matrix equalities_;
  linalg::Matrix strict_;
};

// Coordinates of the strict inequalities on the equality locus.
linalg::Matrix restrict_rows(const linalg::Matrix& rows,
                             const linalg::Matrix& basis) {
  linalg::Matrix out;
  out.reserve(rows.size());
  for (const auto& g : rows) {
    RationalVector r(basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) r[b] = linalg::dot(g, basis[b]);
    out.push_back(std::move(r));
  }
  return out;
}

RationalVector lift(const RationalVector& z, const linalg::Matrix& basis,
                    std::size_t dim) {
  RationalVector w(dim);
  for (std::size_t b = 0; b < basis.size(); ++b) {
    if (z[b] == 0) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      if (basis[b][c] != 0) w[c] += z[b] * basis[b][c];
    }
  }
  return w;
}

// z with g.z > 0 for every row, or nullopt.
std::optional<RationalVector> strictly_positive_point(const linalg::Matrix& g,
                                                      std::size_t vars) {
  if (g.empty()) return RationalVector(vars);
  for (const auto& row : g) {
    if (std::all_of(row.begin(), row.end(),
                    [](const Rational& x) { return x == 0; })) {
      return std::nullopt;
    }
  }
  lp::LinearProgram prog(vars + 1);
  for (const auto& row : g) {
    RationalVector c = row;
    c.push_back(-1);
    prog.add_greater_equal(std::move(c), 0);
  }
  RationalVector cap(vars + 1);
  cap[vars] = 1;
  prog.add_less_equal(cap, 1);
  prog.maximize(cap);
  const auto sol = prog.solve();
  if (!sol.optimal() || sol.objective <= 0) return std::nullopt;
  RationalVector z(sol.x.begin(), sol.x.begin() + static_cast<std::ptrdiff_t>(vars));
  return z;
}

bool system_feasible(const ConeSystem& sys) {
  const auto basis = sys.echelon().nullspace();
  return strictly_positive_point(restrict_rows(sys.strict(), basis), basis.size())
      .has_value();
}

struct RelationCache {
  std::mutex mu;
  std::map<std::pair<int, int>, std::unique_ptr<std::vector<ThreeTermRelation>>>
      lists;
};

RelationCache& relation_cache() {
  static RelationCache cache;
  return cache;
}

}  // namespace

std::string ThreeTermRelation::to_string() const {
  std::string out = "A={";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(a[i]);
  }
  out += "} quad=(";
  for (int i = 0; i < 4; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(quad[i]);
  }
  return out + ")";
}

std::vector<ThreeTermRelation> enumerate_relations(int k, int n) {
  if (k < 2 || n - k < 2) {
    throw ParameterError("three-term relations need k >= 2 and n - k >= 2 (k=" +
                         std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  std::vector<ThreeTermRelation> out;
  out.reserve(binomial(n, k - 2) * binomial(n - k + 2, 4));
  for (const auto& a : enumerate_ksubsets(k - 2, n)) {
    std::vector<int> rest;
    for (int x = 1; x <= n; ++x) {
      if (!a.contains(x)) rest.push_back(x);
    }
    const int m = static_cast<int>(rest.size());
    for (const auto& q : enumerate_ksubsets(4, m)) {
      ThreeTermRelation r;
      r.a = a.elements();
      for (int t = 0; t < 4; ++t) r.quad[t] = rest[q.elements()[t] - 1];
      const auto [i, j, kk, l] = r.quad;
      const auto rank_of = [&](int x, int y) {
        return subset_rank(merge_sorted(r.a, {x, y}), n);
      };
      r.terms = {{{rank_of(i, j), rank_of(kk, l)},
                  {rank_of(i, kk), rank_of(j, l)},
                  {rank_of(i, l), rank_of(j, kk)}}};
      out.push_back(std::move(r));
    }
  }
  return out;
}

const std::vector<ThreeTermRelation>& relations_for(int k, int n) {
  auto& cache = relation_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.lists[{k, n}];
  if (!slot) {
    slot = std::make_unique<std::vector<ThreeTermRelation>>(
        (k < 2 || n - k < 2) ? std::vector<ThreeTermRelation>{}
                             : enumerate_relations(k, n));
  }
  return *slot;
}

std::array<Rational, 3> relation_values(const WeightVector& w,
                                        const ThreeTermRelation& r) {
  std::array<Rational, 3> v;
  for (int t = 0; t < 3; ++t) v[t] = w[r.terms[t][0]] + w[r.terms[t][1]];
  return v;
}

std::optional<TiePattern> tie_pattern(const std::array<Rational, 3>& v) {
  const bool e01 = v[0] == v[1], e02 = v[0] == v[2], e12 = v[1] == v[2];
  if (e01 && e02) return TiePattern::kAllEqual;
  if (e01 && v[0] < v[2]) return TiePattern::kPair12;
  if (e02 && v[0] < v[1]) return TiePattern::kPair13;
  if (e12 && v[1] < v[0]) return TiePattern::kPair23;
  return std::nullopt;
}

DressianCheck is_in_dressian(const WeightVector& w) {
  DressianCheck out;
  for (const auto& r : relations_for(w.k(), w.n())) {
    auto v = relation_values(w, r);
    if (!tie_pattern(v)) {
      out.member = false;
      out.failing = r;
      out.failing_values = std::move(v);
      return out;
    }
  }
  return out;
}

ConeSignature::ConeSignature(int k, int n, std::string patterns)
    : k_(k), n_(n), patterns_(std::move(patterns)) {
  if (patterns_.size() != relations_for(k, n).size()) {
    throw ParameterError("signature length " + std::to_string(patterns_.size()) +
                         " does not match the " +
                         std::to_string(relations_for(k, n).size()) +
                         " relations of (" + std::to_string(k) + "," +
                         std::to_string(n) + ")");
  }
  for (char c : patterns_) {
    if (c != 'E' && c != 'a' && c != 'b' && c != 'c') {
      throw ParseError(std::string("invalid signature character '") + c + "'");
    }
  }
}

std::size_t ConeSignature::count(TiePattern p) const {
  return static_cast<std::size_t>(
      std::count(patterns_.begin(), patterns_.end(), static_cast<char>(p)));
}

ConeSignature cone_signature(const WeightVector& w) {
  const auto& rels = relations_for(w.k(), w.n());
  std::string s;
  s.reserve(rels.size());
  for (const auto& r : rels) {
    const auto v = relation_values(w, r);
    const auto p = tie_pattern(v);
    if (!p) {
      throw MembershipError("weight is not in the Dressian: minimum attained once "
                            "in relation " + r.to_string() + " with values (" +
                            to_string(v[0]) + ", " + to_string(v[1]) + ", " +
                            to_string(v[2]) + ")");
    }
    s.push_back(static_cast<char>(*p));
  }
  return ConeSignature(w.k(), w.n(), std::move(s));
}

PlueckerCone cone_polyhedron(const ConeSignature& signature) {
  const std::size_t dim = ambient_dim(signature.k(), signature.n());
  const auto& rels = relations_for(signature.k(), signature.n());
  ConeSystem sys(dim);
  for (std::size_t i = 0; i < rels.size(); ++i) sys.add(rels[i], signature.at(i));
  if (!system_feasible(sys)) {
    throw EmptyConeError("signature " + signature.str() +
                         " is not realized by any weight");
  }
  return PlueckerCone{signature, sys.equalities(), sys.strict(), sys.dimension()};
}

WeightVector cone_interior_point(const PlueckerCone& cone) {
  const std::size_t dim = ambient_dim(cone.signature.k(), cone.signature.n());
  const auto basis = linalg::nullspace(cone.equalities, dim);
  const auto z =
      strictly_positive_point(restrict_rows(cone.strict, basis), basis.size());
  if (!z) throw EmptyConeError("cone " + cone.signature.str() + " is empty");
  return WeightVector(cone.signature.k(), cone.signature.n(), lift(*z, basis, dim));
}

std::vector<ConeFacet> cone_facets(const PlueckerCone& cone) {
  const int k = cone.signature.k(), n = cone.signature.n();
  const std::size_t dim = ambient_dim(k, n);
  const auto basis = linalg::nullspace(cone.equalities, dim);
  const std::size_t vars = basis.size();

  // Distinct inequality directions on the equality locus.
  linalg::Matrix local, ambient;
  {
    const auto restricted = restrict_rows(cone.strict, basis);
    std::vector<RationalVector> seen;
    for (std::size_t i = 0; i < restricted.size(); ++i) {
      auto key = linalg::normalize_direction(restricted[i]);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(key);
      local.push_back(std::move(key));
      ambient.push_back(cone.strict[i]);
    }
  }

  std::vector<ConeFacet> facets;
  for (std::size_t i = 0; i < local.size(); ++i) {
    // Irredundant iff dropping it admits a point with g_i < 0.
    lp::LinearProgram test(vars);
    for (std::size_t j = 0; j < local.size(); ++j) {
      if (j != i) test.add_greater_equal(local[j], 0);
    }
    test.add_equal(local[i], -1);
    test.minimize(RationalVector(vars));
    if (!test.solve().optimal()) continue;

    // Relative interior point of the facet: accumulate maximizers of every
    // inequality that is not identically zero there.
    RationalVector sum(vars);
    for (std::size_t j = 0; j < local.size(); ++j) {
      if (j == i || linalg::dot(local[j], sum) > 0) continue;
      lp::LinearProgram prog(vars);
      for (const auto& g : local) prog.add_greater_equal(g, 0);
      prog.add_equal(local[i], 0);
      prog.add_less_equal(local[j], 1);
      prog.maximize(local[j]);
      const auto sol = prog.solve();
      if (sol.optimal() && sol.objective > 0) {
        for (std::size_t c = 0; c < vars; ++c) sum[c] += sol.x[c];
      }
    }
    WeightVector point(k, n, lift(sum, basis, dim));
    ConeSignature sig = cone_signature(point);
    facets.push_back(ConeFacet{ambient[i], std::move(point), std::move(sig)});
  }
  std::sort(facets.begin(), facets.end(),
            [](const ConeFacet& x, const ConeFacet& y) {
              return x.signature < y.signature;
            });
  return facets;
}

std::vector<ConeSignature> refinements_of_dimension(const ConeSignature& base,
                                                    int dimension,
                                                    std::size_t limit) {
  const int k = base.k(), n = base.n();
  const std::size_t dim = ambient_dim(k, n);
  const auto& rels = relations_for(k, n);
  ConeSystem fixed(dim);
  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (base.at(i) == TiePattern::kAllEqual) {
      open.push_back(i);
    } else {
      fixed.add(rels[i], base.at(i));
    }
  }
  std::vector<ConeSignature> found;
  std::string patterns = base.str();
  static constexpr TiePattern kChoices[] = {
      TiePattern::kPair12, TiePattern::kPair13, TiePattern::kPair23,
      TiePattern::kAllEqual};

  std::function<void(std::size_t, const ConeSystem&)> visit =
      [&](std::size_t depth, const ConeSystem& sys) {
        if (limit != 0 && found.size() >= limit) return;
        if (sys.dimension() < dimension || !system_feasible(sys)) return;
        if (depth == open.size()) {
          found.emplace_back(k, n, patterns);
          return;
        }
        const std::size_t rel = open[depth];
        for (TiePattern p : kChoices) {
          ConeSystem next = sys;
          next.add(rels[rel], p);
          patterns[rel] = static_cast<char>(p);
          visit(depth + 1, next);
        }
        patterns[rel] = 'E';
      };
  visit(0, fixed);
  std::sort(found.begin(), found.end());
  return found;
}

bool is_maximal_cone(const ConeSignature& signature) {
  if (signature.count(TiePattern::kAllEqual) == 0) return true;
  const PlueckerCone cone = cone_polyhedron(signature);
  return refinements_of_dimension(signature, cone.dimension + 1, 1).empty();
}

AdjacencyReport adjacent_cones(const WeightVector& w) {
  ConeSignature source = cone_signature(w);
  const PlueckerCone cone = cone_polyhedron(source);
  if (!is_maximal_cone(source)) {
    throw NonMaximalConeError("weight lies on the boundary of a larger cone; "
                              "signature " + source.str());
  }
  AdjacencyReport report{source, cone.dimension, {}, {}, {}};
  report.facets = cone_facets(cone);
  for (const auto& facet : report.facets) {
    bool any = false;
    for (auto& sig : refinements_of_dimension(facet.signature, cone.dimension)) {
      if (sig == source) continue;
      any = true;
      WeightVector rep = cone_interior_point(cone_polyhedron(sig));
      report.adjacent.push_back(Adjacency{facet, std::move(rep), std::move(sig)});
    }
    if (!any) report.boundary.push_back(facet);
  }
  return report;
}

}  // namespace dressian
