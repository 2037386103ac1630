// Copyright 2026 The horofilter Authors
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

#ifndef HOROFILTER_HOROFILTER_HPP_
#define HOROFILTER_HOROFILTER_HPP_

#include "horofilter/bench.hpp"
#include "horofilter/boundary.hpp"
#include "horofilter/common.hpp"
#include "horofilter/filter.hpp"
#include "horofilter/generators.hpp"
#include "horofilter/graph.hpp"
#include "horofilter/hyperbolicity.hpp"
#include "horofilter/io.hpp"
#include "horofilter/sparse.hpp"
#include "horofilter/spectral.hpp"
#include "horofilter/verify.hpp"

#endif  // HOROFILTER_HOROFILTER_HPP_
