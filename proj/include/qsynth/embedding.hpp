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

#include <cstddef>
#include <vector>

#include "qsynth/linalg.hpp"

namespace qsynth {

/// A small unitary acting on selected basis indices inside dimension N,
/// identity everywhere else.
///
/// `indices` is strictly decreasing (p_n > ... > p_1). The kernel is oriented
/// in ASCENDING basis order: kernel coordinate 0 belongs to the smallest
/// index, coordinate n-1 to the largest. For n = 2 with indices (p, q), p > q,
/// kernel[0][0] lands at (q, q) and kernel[1][1] at (p, p).
struct SubspaceRotation {
    std::size_t ambient_dim = 0;
    std::vector<std::size_t> indices;  // strictly decreasing
    ComplexMatrix kernel;              // dim == indices.size()
};

/// Throws std::invalid_argument if the rotation violates its invariants
/// (ordering, range, kernel dimension, kernel unitarity within 1e-10).
void validate(const SubspaceRotation& rot);

/// Scatters the kernel into the full ambient_dim x ambient_dim matrix.
ComplexMatrix embed(const SubspaceRotation& rot);

/// T_idx(A) T_idx(B) = T_idx(AB) for rotations on the same subspace.
SubspaceRotation compose_same_subspace(const SubspaceRotation& a, const SubspaceRotation& b);

/// Joins a = T_{p,q}(U) and b = T_{q,r}(W) sharing the middle index q into
/// the three-index rotation T_{p,q,r}(J) with embed(result) = embed(a) embed(b).
SubspaceRotation merge_chained(const SubspaceRotation& a, const SubspaceRotation& b);

/// In-place m <- embed(rot) * m, touching only the rows in rot.indices.
void apply_rotation_left(ComplexMatrix& m, const SubspaceRotation& rot);

}  // namespace qsynth
