/*   Copyright 2026 The tnorm Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
 */

#pragma once

// Convenience header for the numerical core (no I/O, no CLI).

#include "tnorm/aggregation.hpp"
#include "tnorm/error.hpp"
#include "tnorm/ext_real.hpp"
#include "tnorm/generator.hpp"
#include "tnorm/ifv.hpp"
#include "tnorm/madm.hpp"
#include "tnorm/oracle.hpp"
#include "tnorm/power.hpp"
#include "tnorm/simplex.hpp"
#include "tnorm/tnorm_spec.hpp"
