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
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qsynth/linalg.hpp"

namespace qsynth {

/// Largest register dimension circuit_unitary will materialize (3^7).
inline constexpr std::size_t kMaxCircuitDim = 2187;

enum class Primitive { X, H, Cnot, Trans12, Trans01, Trans02, Rot, Ctrans };

std::string_view primitive_name(Primitive p);
Primitive primitive_from_name(std::string_view name);
bool primitive_is_controlled(Primitive p);  // CNOT, CTRANS
int primitive_radix(Primitive p);
/// Matrix applied to the target wire (the full gate for single-wire names).
ComplexMatrix primitive_kernel(Primitive p);

/// Generic one-qudit gate; the matrix lives in the circuit's table.
struct SingleQuditGate {
    std::size_t wire = 0;
    std::size_t matrix_ref = 0;
    bool operator==(const SingleQuditGate&) const = default;
};

/// Kernel applied to the target wire when every control wire holds its
/// required digit. With all digits at radix-1 and controls on the top wires
/// this is the usual block-diagonal multi-controlled gate.
struct ControlledGate {
    std::vector<std::pair<std::size_t, int>> controls;  // (wire, digit)
    std::size_t target_wire = 0;
    std::size_t matrix_ref = 0;
    bool operator==(const ControlledGate&) const = default;
};

/// Named gate from the fixed library; controlled names carry (control, target).
struct PrimitiveGate {
    Primitive name = Primitive::X;
    std::vector<std::size_t> wires;
    bool operator==(const PrimitiveGate&) const = default;
};

/// Diagonal single-wire gate diag(e^{i angles[0]}, ..., e^{i angles[radix-1]}).
struct PhaseGate {
    std::size_t wire = 0;
    std::vector<double> angles;
    bool operator==(const PhaseGate&) const = default;
};

using Gate = std::variant<SingleQuditGate, ControlledGate, PrimitiveGate, PhaseGate>;

/// Gate list over a fixed-radix register. Gates are temporal: index 0 is
/// applied first, so the unitary is the matrix product in reverse list order.
/// Wire 0 is the most significant digit of the basis index.
struct Circuit {
    int radix = 2;
    std::size_t wires = 0;
    std::vector<Gate> gates;
    std::vector<ComplexMatrix> matrices;

    /// Registers a kernel in the table, reusing an existing identical entry.
    std::size_t add_matrix(const ComplexMatrix& m);

    bool operator==(const Circuit&) const = default;
};

/// Structural checks: wire ranges, digit ranges, table refs, kernel dims,
/// kernel unitarity within 1e-8. Throws std::invalid_argument.
void validate(const Circuit& c);

std::size_t circuit_dim(const Circuit& c);

/// Full register unitary: the product, in reverse gate order, of each gate's
/// dense ambient embedding. Throws when the register dimension exceeds
/// kMaxCircuitDim.
ComplexMatrix circuit_unitary(const Circuit& c);

/// The gate's own dense ambient matrix (identity on untouched wires).
ComplexMatrix gate_embedding(const Circuit& c, const Gate& g);

/// Applies the circuit to a normalized state vector via per-gate axis
/// updates; never forms the full matrix.
std::vector<cplx> apply_state(const Circuit& c, const std::vector<cplx>& state);

struct GateStats {
    std::map<std::string, std::size_t> counts;  // by primitive name / U / CU / PH
    std::size_t total = 0;
    std::size_t single_qudit = 0;
    std::size_t multi_qudit = 0;  // gates touching two or more wires
};

GateStats gate_stats(const Circuit& c);
std::string stats_to_json(const GateStats& s);

/// Parse failure, with the 1-based line number of the offending input.
class CircuitParseError : public std::runtime_error {
public:
    CircuitParseError(std::size_t line, const std::string& reason);
    std::size_t line() const { return line_; }

private:
    std::size_t line_ = 0;
};

/// Line-oriented text form; deterministic byte-for-byte for equal circuits.
/// Numbers are written with 17 significant digits so doubles round-trip
/// exactly.
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace qsynth
