// SPDX-License-Identifier: Apache-2.0
//
// uavplace - simultaneous placement of multiple UAV base stations
// Copyright (C) 2026 The uavplace authors
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

#ifndef UAVPLACE_UAVPLACE_HPP
#define UAVPLACE_UAVPLACE_HPP

#include "channel.hpp"
#include "combination.hpp"
#include "config.hpp"
#include "error.hpp"
#include "export.hpp"
#include "geometry.hpp"
#include "radio.hpp"
#include "random.hpp"
#include "scenario.hpp"
#include "selection.hpp"
#include "simplex.hpp"
#include "units.hpp"

#endif
