// Copyright 2026 The paraeval Authors.
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

#ifndef PARAEVAL_ERRORS_HPP_
#define PARAEVAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace paraeval {

// Malformed input files or records that violate the data model.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A corpus whose benchmark ROUGE-L is 0 or 1 cannot anchor the novelty
// and fluency factors.
class DegenerateCorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A pinned benchmark was computed on a different corpus.
class BenchmarkMismatchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace paraeval

#endif  // PARAEVAL_ERRORS_HPP_
