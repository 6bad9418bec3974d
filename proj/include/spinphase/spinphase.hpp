// Copyright 2026 The spinphase Authors
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

#pragma once

#include "spinphase/analysis.hpp"
#include "spinphase/brackets.hpp"
#include "spinphase/dynamics.hpp"
#include "spinphase/estimation.hpp"
#include "spinphase/grid.hpp"
#include "spinphase/io.hpp"
#include "spinphase/oracle.hpp"
#include "spinphase/pauli.hpp"
#include "spinphase/quadrature.hpp"
#include "spinphase/rng.hpp"
#include "spinphase/sw.hpp"
