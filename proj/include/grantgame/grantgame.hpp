// Copyright 2026 The grantgame Authors
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

#pragma once

// Umbrella header.

#include "grantgame/analysis.hpp"
#include "grantgame/ccc.hpp"
#include "grantgame/context.hpp"
#include "grantgame/game.hpp"
#include "grantgame/generators.hpp"
#include "grantgame/goldrush.hpp"
#include "grantgame/graphs.hpp"
#include "grantgame/instance.hpp"
#include "grantgame/io.hpp"
#include "grantgame/magnet.hpp"
#include "grantgame/partitions.hpp"
#include "grantgame/rational.hpp"
#include "grantgame/search.hpp"
#include "grantgame/subsets.hpp"
#include "grantgame/verify.hpp"
