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


#include "dressian/double_description.hpp"

#include <bit>
#include <cstdint>

#include "dressian/errors.hpp"

namespace dressian::polyhedral {
namespace {

class Bits {
 public:
  explicit Bits(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  Bits operator&(const Bits& o) const {
    Bits out = *this;
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= o.words_[w];
    return out;
  }
  bool contains(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      if ((o.words_[w] & ~words_[w]) != 0) return false;
    }
    return true;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  RationalVector x;
  Bits zeros;
};

}  // namespace

std::vector<RationalVector> extreme_rays(const linalg::Matrix& a, std::size_t dim) {
  const std::size_t m = a.size();
  for (const auto& row : a) {
    if (row.size() != dim) throw ParameterError("constraint has the wrong length");
  }
  linalg::RowEchelon ech(dim);
  std::vector<std::size_t> basis;
  std::vector<bool> processed(m, false);
  for (std::size_t i = 0; i < m && basis.size() < dim; ++i) {
    if (ech.add(a[i])) {
      basis.push_back(i);
      processed[i] = true;
    }
  }
  if (basis.size() < dim) throw ParameterError("cone is not pointed");

  // The simplicial cone of the basis rows has rays r_j with a_I r_j = -e_j.
  linalg::Matrix sub;
  for (std::size_t i : basis) sub.push_back(a[i]);
  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    RationalVector rhs(dim);
    rhs[j] = -1;
    auto x = linalg::solve(sub, rhs, dim);
    if (!x) throw InternalError("basis rows are singular");
    Bits z(m);
    for (std::size_t t = 0; t < dim; ++t) {
      if (t != j) z.set(basis[t]);
    }
    rays.push_back({linalg::normalize_direction(std::move(*x)), std::move(z)});
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      val[r] = linalg::dot(a[i], rays[r].x);
      if (val[r] > 0) {
        pos.push_back(r);
      } else {
        if (val[r] < 0) neg.push_back(r);
        next.push_back(rays[r]);
        if (val[r] == 0) next.back().zeros.set(i);
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bits common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && rays[r].zeros.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        RationalVector x(dim);
        for (std::size_t t = 0; t < dim; ++t) {
          x[t] = val[p] * rays[q].x[t] - val[q] * rays[p].x[t];
        }
        common.set(i);
        next.push_back({linalg::normalize_direction(std::move(x)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<RationalVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.x));
  return out;
}

}  // namespace dressian::polyhedral
