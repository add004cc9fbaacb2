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
#include "qsynth/routing.hpp"

namespace qsynth {

struct SynthOptions {
    double tol = 1e-8;
    /// Expand one-control gates into CNOT/CTRANS + one-qudit gates.
    /// Gates with two or more controls always stay primitive.
    bool expand_single_controls = false;
};

/// Lowers a two-index rotation on 2^wires dimensions to routing steps, one
/// multi-controlled kernel on the last wire, and the reversed routing steps.
Circuit synthesize_two_level(const SubspaceRotation& rot, std::size_t wires);

/// Ternary counterpart for a three-index rotation on 3^wires dimensions
/// (wires >= 2).
Circuit synthesize_three_level(const SubspaceRotation& rot, std::size_t wires);

/// Full pipeline: decompose m into two-level rotations and a phase shift
/// (regrouped into three-level rotations for radix 3), lower every factor,
/// and concatenate. The resulting circuit's unitary equals m.
Circuit synthesize(const ComplexMatrix& m, int radix, std::size_t wires,
                   const SynthOptions& options = {});

struct VerifyReport {
    double residual = 0.0;  // dist_phase(circuit_unitary(c), target)
    bool pass = false;
    GateStats stats;
};

VerifyReport verify(const Circuit& c, const ComplexMatrix& target, double tol);

/// Rewrites every one-control generic gate over the universal set for its
/// radix; diagonal controlled kernels are kept as controlled phases.
Circuit expand_single_controls(const Circuit& c);

}  // namespace qsynth
