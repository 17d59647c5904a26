// SPDX-License-Identifier: Apache-2.0
//
// riscope: deterministic urban coverage simulation with reflecting surfaces
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISCOPE_RISCOPE_HPP
#define RISCOPE_RISCOPE_HPP

#include "riscope/commands.hpp"
#include "riscope/engine.hpp"
#include "riscope/errors.hpp"
#include "riscope/geometry.hpp"
#include "riscope/metrics.hpp"
#include "riscope/output.hpp"
#include "riscope/propagation.hpp"
#include "riscope/ris.hpp"
#include "riscope/scenario.hpp"
#include "riscope/scene.hpp"
#include "riscope/sweep.hpp"

#endif  // RISCOPE_RISCOPE_HPP
