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


#ifndef DRESSIAN_DOUBLE_DESCRIPTION_HPP_
#define DRESSIAN_DOUBLE_DESCRIPTION_HPP_

#include <cstddef>
#include <vector>

#include "dressian/linalg.hpp"

namespace dressian::polyhedral {

// Extreme rays of the pointed cone {x in R^dim : a x <= 0}, computed by the
// incremental double description method with a combinatorial adjacency
// test. Each ray is scaled so that its first nonzero entry is +1 or -1.
// Throws ParameterError when the cone has a nontrivial lineality space.
std::vector<RationalVector> extreme_rays(const linalg::Matrix& a, std::size_t dim);

}  // namespace dressian::polyhedral

#endif  // DRESSIAN_DOUBLE_DESCRIPTION_HPP_
