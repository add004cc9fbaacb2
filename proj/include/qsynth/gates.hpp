// Copyright 2026 The qsynth Authors
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

#include <string_view>

#include "qsynth/linalg.hpp"

namespace qsynth {

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();
ComplexMatrix hadamard();

/// SU(2) Euler factors.
ComplexMatrix rz(double angle);  // diag(e^{-i a/2}, e^{i a/2})
ComplexMatrix ry(double angle);

/// Qutrit transposition: swaps basis states a and b, fixes the third.
ComplexMatrix trans_gate(int a, int b);

/// Cyclic qutrit permutation |0> -> |2> -> |1> -> |0>; rot^3 = I.
ComplexMatrix rot_gate();

/// Lookup by name: TRANS12, TRANS01, TRANS02, ROT. Throws on anything else.
ComplexMatrix named_qutrit_gate(std::string_view name);

}  // namespace qsynth
