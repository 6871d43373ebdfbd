// Copyright 2026 The oddzeta Authors.
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

#ifndef ODDZETA_ODDZETA_HPP
#define ODDZETA_ODDZETA_HPP

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/coefficients.hpp"
#include "oddzeta/constants.hpp"
#include "oddzeta/error.hpp"
#include "oddzeta/fixed.hpp"
#include "oddzeta/highprec.hpp"
#include "oddzeta/identity.hpp"
#include "oddzeta/oracle.hpp"
#include "oddzeta/rational.hpp"
#include "oddzeta/verify.hpp"

#endif  // ODDZETA_ODDZETA_HPP
