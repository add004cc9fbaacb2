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

#include <complex>
#include <cstdint>
#include <vector>

namespace qsynth {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major, zero-based indexing.
/// The carrier type for every unitary handled by the library.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }

    cplx& operator()(std::size_t row, std::size_t col) { return a_[row * dim_ + col]; }
    const cplx& operator()(std::size_t row, std::size_t col) const { return a_[row * dim_ + col]; }

    std::vector<cplx>& data() { return a_; }
    const std::vector<cplx>& data() const { return a_; }

    bool operator==(const ComplexMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<cplx> a_;
};

/// Diagonal unitary of unit-modulus entries e^{i phi_k}.
struct PhaseShift {
    std::size_t dim = 0;
    std::vector<double> phases;  // one angle per basis index

    ComplexMatrix matrix() const;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Largest entry of m^dagger m - I in absolute value.
double unitarity_deviation(const ComplexMatrix& m);
bool is_unitary(const ComplexMatrix& m, double tol);

/// Largest entry of a - b in absolute value.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

cplx determinant(const ComplexMatrix& m);

/// Haar-distributed random unitary, deterministic per seed.
///
/// Entries of a Ginibre matrix are drawn from mt19937_64 (53-bit uniforms,
/// Box-Muller) and orthonormalized by modified Gram-Schmidt with a positive
/// real R diagonal, which is exactly the phase-corrected QR construction.
ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed);

/// Splits u = e^{i delta} v with det(v) = 1 and
/// delta = arg(det u)/n in (-pi/n, pi/n] (the +pi/n branch at the cut).
struct SpecialUnitary {
    double delta = 0.0;
    ComplexMatrix v;
};
SpecialUnitary special_unitarize(const ComplexMatrix& u);

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

/// min over unit-modulus phi of frobenius_distance(phi*a, b),
/// evaluated in closed form from tr(a^dagger b).
double dist_phase(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qsynth
