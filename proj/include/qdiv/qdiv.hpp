// Copyright 2026 The qdiv Authors
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

#ifndef QDIV_QDIV_HPP
#define QDIV_QDIV_HPP

#include "qdiv/adders.hpp"
#include "qdiv/basis_sim.hpp"
#include "qdiv/circuit.hpp"
#include "qdiv/cost_models.hpp"
#include "qdiv/crosscheck.hpp"
#include "qdiv/divider.hpp"
#include "qdiv/qasm.hpp"

#endif  // QDIV_QDIV_HPP
