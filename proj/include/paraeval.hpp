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

#ifndef PARAEVAL_PARAEVAL_HPP_
#define PARAEVAL_PARAEVAL_HPP_

#include "paraeval/challenge.hpp"
#include "paraeval/corpus.hpp"
#include "paraeval/diversity.hpp"
#include "paraeval/errors.hpp"
#include "paraeval/evaluation.hpp"
#include "paraeval/porter_stemmer.hpp"
#include "paraeval/record.hpp"
#include "paraeval/reference_metrics.hpp"
#include "paraeval/rouge_p.hpp"
#include "paraeval/run_config.hpp"
#include "paraeval/selection.hpp"
#include "paraeval/ter.hpp"
#include "paraeval/text.hpp"

#endif  // PARAEVAL_PARAEVAL_HPP_
