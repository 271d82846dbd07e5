// Copyright 2026 The fimon Authors. All Rights Reserved.
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

#ifndef FIMON_FIMON_HPP_
#define FIMON_FIMON_HPP_

#include "closure.hpp"       // IWYU pragma: export
#include "dot.hpp"           // IWYU pragma: export
#include "error.hpp"         // IWYU pragma: export
#include "groups.hpp"        // IWYU pragma: export
#include "monoid.hpp"        // IWYU pragma: export
#include "presentation.hpp"  // IWYU pragma: export
#include "subgraph.hpp"      // IWYU pragma: export
#include "word_problem.hpp"  // IWYU pragma: export
#include "words.hpp"         // IWYU pragma: export

#endif  // FIMON_FIMON_HPP_
