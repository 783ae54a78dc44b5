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

#ifndef DRESSIAN_PLUECKER_HPP_
#define DRESSIAN_PLUECKER_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dressian/combinatorics.hpp"
#include "dressian/linalg.hpp"
#include "dressian/rational.hpp"

// Three-term tropical Pluecker relations in the min convention, Dressian
// membership, and the Pluecker fan: cone signatures, their H-descriptions,
// and wall crossing between maximal cones.
namespace dressian {

// p_{Aij} p_{Akl} - p_{Aik} p_{Ajl} + p_{Ail} p_{Ajk} with quad = (i,j,k,l).
struct ThreeTermRelation {
  std::vector<int> a;
  std::array<int, 4> quad{};
  // Lex ranks of the two k-subsets in each term, in the fixed term order
  // {Aij, Akl}, {Aik, Ajl}, {Ail, Ajk}.
  std::array<std::array<std::size_t, 2>, 3> terms{};

  std::string to_string() const;
  friend bool operator==(const ThreeTermRelation& x,
                         const ThreeTermRelation& y) {
    return x.a == y.a && x.quad == y.quad;
  }
};

// C(n, k-2) * C(n-k+2, 4) relations, outer loop over A in lex order and inner
// loop over quads in lex order. Requires k >= 2 and n - k >= 2.
std::vector<ThreeTermRelation> enumerate_relations(int k, int n);

// Cached relation list shared by the functions below.
const std::vector<ThreeTermRelation>& relations_for(int k, int n);

std::array<Rational, 3> relation_values(const WeightVector& w,
                                        const ThreeTermRelation& r);

// Which of the three term values attain the minimum.
enum class TiePattern : char {
  kAllEqual = 'E',
  kPair12 = 'a',
  kPair13 = 'b',
  kPair23 = 'c',
};

// nullopt when the minimum is attained exactly once.
std::optional<TiePattern> tie_pattern(const std::array<Rational, 3>& values);

struct DressianCheck {
  bool member = true;
  std::optional<ThreeTermRelation> failing;
  std::array<Rational, 3> failing_values;
};

// Every relation attains its minimum at least twice. Shapes without any
// relation (k < 2 or n - k < 2) are vacuously members.
DressianCheck is_in_dressian(const WeightVector& w);

// One pattern per relation in enumerate_relations order.
class ConeSignature {
 public:
  ConeSignature(int k, int n, std::string patterns);

  int k() const { return k_; }
  int n() const { return n_; }
  const std::string& str() const { return patterns_; }
  TiePattern at(std::size_t relation) const {
    return static_cast<TiePattern>(patterns_[relation]);
  }
  std::size_t size() const { return patterns_.size(); }
  std::size_t count(TiePattern p) const;

  friend bool operator==(const ConeSignature&, const ConeSignature&) = default;
  friend auto operator<=>(const ConeSignature&, const ConeSignature&) = default;

 private:
  int k_;
  int n_;
  std::string patterns_;
};

// Throws MembershipError naming the first failing relation.
ConeSignature cone_signature(const WeightVector& w);

// Relatively open cone {w : cone_signature(w) == signature}.
struct PlueckerCone {
  ConeSignature signature;
  linalg::Matrix equalities;  // rows e with e.w == 0
  linalg::Matrix strict;      // rows g with g.w > 0
  int dimension = 0;
};

// Throws EmptyConeError when no weight realizes the signature.
PlueckerCone cone_polyhedron(const ConeSignature& signature);

// A point of the relatively open cone.
WeightVector cone_interior_point(const PlueckerCone& cone);

struct ConeFacet {
  RationalVector normal;        // the defining inequality, in R^{C(n,k)}
  WeightVector interior_point;  // relative interior of the facet
  ConeSignature signature;      // signature of that point
};

// Facets of the closure of the cone; redundant inequalities are removed by
// exact linear programming.
std::vector<ConeFacet> cone_facets(const PlueckerCone& cone);

// Signatures of all cones of dimension at least `dimension` whose closure contains
// the relatively open cone of `base` (refinements of `base` on its 'E'
// relations). `limit` stops the search early when nonzero.
std::vector<ConeSignature> refinements_of_dimension(const ConeSignature& base,
                                                    int dimension,
                                                    std::size_t limit = 0);

// True when no proper refinement of the signature is realized.
bool is_maximal_cone(const ConeSignature& signature);

struct Adjacency {
  ConeFacet facet;
  WeightVector representative;
  ConeSignature signature;
};

struct AdjacencyReport {
  ConeSignature source;
  int dimension = 0;
  std::vector<ConeFacet> facets;
  std::vector<Adjacency> adjacent;
  std::vector<ConeFacet> boundary;  // facets with no cone on the other side
};

// All maximal cones sharing a facet with the cone of `w`. Throws
// MembershipError or NonMaximalConeError.
AdjacencyReport adjacent_cones(const WeightVector& w);

}  // namespace dressian

#endif  // DRESSIAN_PLUECKER_HPP_
