// Copyright 2026 The softbitop Authors
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

#ifndef SOFTBITOP_ERROR_HPP_
#define SOFTBITOP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace softbitop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or mismatched input: size mismatches, non-subsets, unknown names.
class InputError : public Error {
 public:
  using Error::Error;
};

// A guard on an exhaustive construction was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

class NotACoverError : public Error {
 public:
  using Error::Error;
};

// SE(F) is undefined because some section of F is empty.
class NoSoftElementsError : public Error {
 public:
  using Error::Error;
};

// Representability was asked of the empty subset of SE(F).
class UndefinedRepresentationError : public Error {
 public:
  using Error::Error;
};

}  // namespace softbitop

#endif  // SOFTBITOP_ERROR_HPP_
