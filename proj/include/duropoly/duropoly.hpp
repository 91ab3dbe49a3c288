// Copyright 2026 The Duropoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUROPOLY_DUROPOLY_HPP
#define DUROPOLY_DUROPOLY_HPP

#include "duropoly/rational.hpp"
#include "duropoly/instance.hpp"
#include "duropoly/static_monopoly.hpp"
#include "duropoly/equilibrium.hpp"
#include "duropoly/verifier.hpp"
#include "duropoly/bounds.hpp"
#include "duropoly/pacman.hpp"
#include "duropoly/nonskim.hpp"
#include "duropoly/sweep.hpp"

#endif  // DUROPOLY_DUROPOLY_HPP
