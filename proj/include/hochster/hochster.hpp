// Copyright 2026 The hochster Authors
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

#ifndef HOCHSTER_HOCHSTER_HPP
#define HOCHSTER_HOCHSTER_HPP

#include "hochster/betti.hpp"
#include "hochster/errors.hpp"
#include "hochster/graph.hpp"
#include "hochster/homology.hpp"
#include "hochster/ideal.hpp"
#include "hochster/subsets.hpp"
#include "hochster/theorems.hpp"

#endif  // HOCHSTER_HOCHSTER_HPP
