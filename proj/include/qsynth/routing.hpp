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

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace qsynth {

/// Digit expansion of a basis index. Wire 0 is the top wire and carries the
/// MOST significant digit.
struct DigitString {
    int radix = 2;
    std::vector<int> digits;  // most significant first

    bool operator==(const DigitString&) const = default;
};

DigitString to_digits(std::size_t value, int radix, std::size_t wires);
std::size_t digit_value(const DigitString& s);
std::string to_string(const DigitString& s);

/// One classical permutation step: transpose digits a and b on the target
/// wire for every basis state whose other wires match the control digits.
/// Always an involution.
struct RoutingStep {
    std::size_t target_wire = 0;
    int flip_a = 0;
    int flip_b = 1;
    std::vector<std::pair<std::size_t, int>> controls;  // (wire, required digit)
};

struct RoutingPlan {
    int radix = 2;
    std::size_t wires = 0;
    std::vector<RoutingStep> steps;          // applied in order
    std::vector<std::size_t> final_states;   // images of the routed inputs
};

/// Digit strings from binary(i) to binary(j), flipping one differing bit per
/// step from least to most significant. Empty when i == j.
std::vector<DigitString> binary_gray_path(std::size_t i, std::size_t j, std::size_t wires);

/// Routes the pair (i, j) onto the canonical last-wire subspace: the plan's
/// permutation maps i -> 2^n - 1 and j -> 2^n - 2.
RoutingPlan plan_binary_routing(std::size_t i, std::size_t j, std::size_t wires);

/// Routes the distinct triple (i, j, k) onto (3^n - 1, 3^n - 2, 3^n - 3), in
/// argument order. Requires wires >= 2.
RoutingPlan plan_ternary_routing(std::size_t i, std::size_t j, std::size_t k, std::size_t wires);

/// Tracked images of (i, j, k) at each stage of the ternary construction:
/// after the last digits are set to (2, 1, 0), after the leading digits are
/// aligned, and after the final sweep to all twos.
struct TernaryRoutingStages {
    std::array<DigitString, 3> start;
    std::array<DigitString, 3> after_last_digit;
    std::array<DigitString, 3> after_align;
    std::array<DigitString, 3> finish;
};
TernaryRoutingStages ternary_routing_stages(std::size_t i, std::size_t j, std::size_t k,
                                            std::size_t wires);

std::size_t apply_step_to_index(const RoutingStep& step, int radix, std::size_t wires,
                                std::size_t x);

/// Image of basis index x under the composed permutation of the plan's steps.
std::size_t apply_plan_to_index(const RoutingPlan& plan, std::size_t x);

}  // namespace qsynth
