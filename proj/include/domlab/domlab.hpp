// Copyright 2026 The domlab Authors
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

#ifndef DOMLAB_DOMLAB_HPP_
#define DOMLAB_DOMLAB_HPP_

#include "domlab/analyzer.hpp"
#include "domlab/catalog.hpp"
#include "domlab/chain_pattern.hpp"
#include "domlab/engine.hpp"
#include "domlab/enumeration.hpp"
#include "domlab/error.hpp"
#include "domlab/finite_game.hpp"
#include "domlab/game.hpp"
#include "domlab/rational.hpp"
#include "domlab/sequence.hpp"
#include "domlab/serialize.hpp"
#include "domlab/symbolic_set.hpp"
#include "domlab/text_syntax.hpp"
#include "domlab/theorems.hpp"
#include "domlab/verify.hpp"

#endif  // DOMLAB_DOMLAB_HPP_
