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

#ifndef DRESSIAN_ERRORS_HPP_
#define DRESSIAN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace dressian {

// Root of every exception thrown by the library. The C API maps each
// subclass onto one dr_status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid (k, n), out-of-range labels, malformed splits, and similar.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed documents, Newick strings, or rational literals.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A weight that was required to lie in the Dressian does not.
class MembershipError : public Error {
 public:
  using Error::Error;
};

// A tree arrangement violates the distance compatibility condition.
class CompatibilityError : public Error {
 public:
  using Error::Error;
};

// A cone signature is not realized by any weight.
class EmptyConeError : public Error {
 public:
  using Error::Error;
};

// A weight expected in the interior of a maximal cone sits on a boundary.
class NonMaximalConeError : public Error {
 public:
  using Error::Error;
};

// A dissimilarity is not a tree metric with nonnegative edge lengths.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

// A postcondition that the mathematics guarantees has failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dressian

#endif  // DRESSIAN_ERRORS_HPP_
