// Copyright 2026 The orbitalg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORBITALG_ORBITALG_HPP
#define ORBITALG_ORBITALG_HPP

#include "orbitalg/bitmatrix.hpp"
#include "orbitalg/catalog.hpp"
#include "orbitalg/error.hpp"
#include "orbitalg/graph.hpp"
#include "orbitalg/graph_io.hpp"
#include "orbitalg/group.hpp"
#include "orbitalg/group_io.hpp"
#include "orbitalg/orbitals.hpp"
#include "orbitalg/parallel.hpp"
#include "orbitalg/permutation.hpp"
#include "orbitalg/scheme.hpp"
#include "orbitalg/search.hpp"

#endif  // ORBITALG_ORBITALG_HPP
