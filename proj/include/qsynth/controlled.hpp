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

#include "qsynth/circuit.hpp"
#include "qsynth/embedding.hpp"
#include "qsynth/linalg.hpp"

namespace qsynth {

/// Factors u = e^{i delta} A X B X C with A, B, C in SU(2) and A B C = I.
struct ABCDecomposition {
    ComplexMatrix a, b, c;
    double delta = 0.0;
};

/// ZYZ-based construction: u = e^{i delta} Rz(alpha) Ry(theta) Rz(beta),
/// A = Rz(alpha) Ry(theta/2), B = Ry(-theta/2) Rz(-(alpha+beta)/2),
/// C = Rz((beta-alpha)/2).
ABCDecomposition abc_decompose(const ComplexMatrix& u);

/// Two-qubit circuit for controlled-u (control wire 0, active on digit 1):
/// C, CNOT, B, CNOT, A on the target plus a diag(1, e^{i delta}) phase on
/// the control when delta is nonzero.
Circuit controlled_u_qubit(const ComplexMatrix& u);

/// Two-qutrit circuit for the controlled transposition of basis states
/// (i, j) on the target, over CTRANS and ROT only. The inactive control
/// branch composes to ROT^3 = I.
Circuit controlled_transposition(std::size_t i, std::size_t j);

/// Two-qutrit circuit equal to controlled-T3_{i,j}(V) for a two-index
/// rotation on a single qutrit, over CTRANS variants, SU(3) one-qutrit gates
/// and (for non-special kernels) one controlled phase correction.
Circuit controlled_two_level_qutrit(const SubspaceRotation& rot);

/// Two-qutrit circuit equal to diag(I3, I3, v) for any v in U(3): the
/// three controlled two-level factors of v's decomposition plus a controlled
/// phase.
Circuit controlled_u_qutrit(const ComplexMatrix& v);

/// The m-controlled u gate as a single IR primitive on m+1 wires: controls
/// on wires 0..m-1 at digit radix-1, u on the last wire. Returned as a
/// one-gate circuit so the kernel travels with it.
Circuit multi_controlled(const ComplexMatrix& u, std::size_t control_count, int radix);

}  // namespace qsynth
