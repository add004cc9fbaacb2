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

#include <vector>

#include "qsynth/embedding.hpp"
#include "qsynth/linalg.hpp"

namespace qsynth {

/// Factorization m = (product of two-level rotations, in list order with the
/// leftmost factor applied last) * diagonal phase shift.
///
/// Every kernel is in SU(2); rotations are grouped by descending higher index
/// and, within a group, by descending lower index. At most one rotation per
/// index pair, so the list never exceeds N(N-1)/2 entries.
struct DecompositionResult {
    std::vector<SubspaceRotation> rotations;
    PhaseShift phase;
    double residual = 0.0;  // phase-insensitive Frobenius reconstruction error
};

/// Two-level decomposition by Givens-style column nulling: for each column
/// from N-1 down, entries above the diagonal are zeroed bottom-up by mixing
/// the entry's row with the diagonal's row; each nulling kernel's inverse is
/// emitted. Entries already zero emit nothing, as do kernels within 1e-12 of
/// the identity.
DecompositionResult reck_decompose(const ComplexMatrix& m, double tol = 1e-8);

/// Evaluates the factorization back into a dense matrix.
ComplexMatrix reck_reconstruct(const DecompositionResult& d);

struct ThreeLevelRegrouping {
    std::vector<SubspaceRotation> threes;     // all 3-index
    std::vector<SubspaceRotation> leftovers;  // empty whenever N >= 3
};

/// Regroups the two-level list into three-level rotations: a greedy
/// left-to-right scan merges adjacent chained pairs (p,q),(q,r); anything
/// unmerged is promoted by adjoining an unused third index with identity
/// action. Requires N >= 3 when the list is nonempty.
ThreeLevelRegrouping pair_three_level(const DecompositionResult& d);

}  // namespace qsynth
