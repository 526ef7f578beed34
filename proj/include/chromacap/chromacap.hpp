/*
 * Copyright 2026 The chromacap Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CHROMACAP_CHROMACAP_HPP
#define CHROMACAP_CHROMACAP_HPP

#include "chromacap/capacity.hpp"
#include "chromacap/channel.hpp"
#include "chromacap/color.hpp"
#include "chromacap/construction.hpp"
#include "chromacap/cost_effectiveness.hpp"
#include "chromacap/error.hpp"
#include "chromacap/palette_io.hpp"
#include "chromacap/registry.hpp"
#include "chromacap/report.hpp"
#include "chromacap/rng.hpp"

#endif  // CHROMACAP_CHROMACAP_HPP
