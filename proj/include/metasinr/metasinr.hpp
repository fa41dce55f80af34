// Copyright 2026 The metasinr Authors
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

#ifndef METASINR_METASINR_HPP
#define METASINR_METASINR_HPP

#include "metasinr/beta_approx.hpp"
#include "metasinr/compare.hpp"
#include "metasinr/core.hpp"
#include "metasinr/curve.hpp"
#include "metasinr/distance_laws.hpp"
#include "metasinr/gil_pelaez.hpp"
#include "metasinr/mean_field.hpp"
#include "metasinr/models.hpp"
#include "metasinr/moments.hpp"
#include "metasinr/plcp.hpp"
#include "metasinr/proposed.hpp"
#include "metasinr/quadrature.hpp"
#include "metasinr/simulate.hpp"
#include "metasinr/success_prob.hpp"

#endif  // METASINR_METASINR_HPP
