/*
Copyright 2026 The slac Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

     https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SLAC_SLAC_HPP
#define SLAC_SLAC_HPP

#include "slac/ac/state_io.hpp"
#include "slac/ac/trainer.hpp"
#include "slac/eval/metrics.hpp"
#include "slac/grid/grid_value.hpp"
#include "slac/grid/min_time.hpp"
#include "slac/nn/checkpoint.hpp"
#include "slac/nn/network.hpp"
#include "slac/nn/optimizer.hpp"
#include "slac/ocp/registry.hpp"
#include "slac/rollout/rollout.hpp"
#include "slac/sl/bellman.hpp"
#include "slac/sl/critic.hpp"
#include "slac/sl/kruzkov.hpp"

#endif  // SLAC_SLAC_HPP
