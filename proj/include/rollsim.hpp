// Copyright 2026 The rollsim Authors
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

#include "rollsim/allocation.hpp"
#include "rollsim/config.hpp"
#include "rollsim/controller.hpp"
#include "rollsim/csv.hpp"
#include "rollsim/errors.hpp"
#include "rollsim/estimator.hpp"
#include "rollsim/integrator.hpp"
#include "rollsim/maneuvers.hpp"
#include "rollsim/metrics.hpp"
#include "rollsim/report.hpp"
#include "rollsim/roll_state.hpp"
#include "rollsim/sim.hpp"
#include "rollsim/sweep.hpp"
#include "rollsim/vehicle_model.hpp"
#include "rollsim/vehicle_params.hpp"
