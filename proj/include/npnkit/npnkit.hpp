/*
 * SPDX-FileCopyrightText: Copyright (c) 2026 npnkit contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "npnkit/airlink_timing.hpp"
#include "npnkit/capacity_engine.hpp"
#include "npnkit/coexistence.hpp"
#include "npnkit/common.hpp"
#include "npnkit/exclusion_zone.hpp"
#include "npnkit/lp_simplex.hpp"
#include "npnkit/propagation.hpp"
#include "npnkit/qos_usecases.hpp"
#include "npnkit/radio_link.hpp"
