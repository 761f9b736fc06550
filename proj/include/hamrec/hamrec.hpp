// Copyright 2026 The hamrec Authors
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

#include "hamrec/core/bloch.hpp"
#include "hamrec/core/errors.hpp"
#include "hamrec/core/linalg.hpp"
#include "hamrec/core/rational.hpp"
#include "hamrec/core/state_vector.hpp"
#include "hamrec/protocols/builders.hpp"
#include "hamrec/protocols/circuit.hpp"
#include "hamrec/protocols/statistics.hpp"
#include "hamrec/qsp/chebyshev.hpp"
#include "hamrec/qsp/laurent.hpp"
#include "hamrec/qsp/phase_sequence.hpp"
#include "hamrec/qsp/roots.hpp"
#include "hamrec/qsp/synthesis.hpp"
#include "hamrec/tester/certificates.hpp"
#include "hamrec/tester/circuit_tester.hpp"
#include "hamrec/tester/comb.hpp"
#include "hamrec/tester/performance_operator.hpp"
#include "hamrec/tester/sdp.hpp"
#include "hamrec/tester/sweep.hpp"
