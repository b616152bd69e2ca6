// Copyright 2026 The lexdist Authors
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

// Convenience header pulling in the whole library.

#pragma once

#include "lexdist/config.hpp"      // IWYU pragma: export
#include "lexdist/cost_model.hpp"  // IWYU pragma: export
#include "lexdist/distance.hpp"   // IWYU pragma: export
#include "lexdist/eval.hpp"       // IWYU pragma: export
#include "lexdist/lexicon.hpp"    // IWYU pragma: export
#include "lexdist/lookup.hpp"     // IWYU pragma: export
#include "lexdist/noise.hpp"      // IWYU pragma: export
#include "lexdist/rng.hpp"        // IWYU pragma: export
