// Copyright 2026 The Antimagic Authors
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

#pragma once

#include "antimagic/alpha.hpp"
#include "antimagic/error.hpp"
#include "antimagic/euler.hpp"
#include "antimagic/generators.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/independence.hpp"
#include "antimagic/io.hpp"
#include "antimagic/matching.hpp"
#include "antimagic/oracle.hpp"
#include "antimagic/partition.hpp"
#include "antimagic/random.hpp"
#include "antimagic/verify.hpp"
#include "antimagic/xconstruct.hpp"
