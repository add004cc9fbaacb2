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

#include "qsynth/linalg.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qsynth {

namespace {

// 53-bit uniform in [0, 1); fully specified so seeds reproduce everywhere.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller standard normal over the uniform above.
class Gaussian {
public:
    explicit Gaussian(std::uint64_t seed) : rng_(seed) {}

    double operator()() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u = uniform01(rng_);
        while (u <= 0.0) u = uniform01(rng_);
        const double v = uniform01(rng_);
        const double r = std::sqrt(-2.0 * std::log(u));
        const double t = 2.0 * std::numbers::pi * v;
        spare_ = r * std::sin(t);
        has_spare_ = true;
        return r * std::cos(t);
    }

private:
    std::mt19937_64 rng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                                    ")");
    }
}

}  // namespace

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix PhaseShift::matrix() const {
    ComplexMatrix m(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        m(k, k) = std::polar(1.0, k < phases.size() ? phases[k] : 0.0);
    }
    return m;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

double unitarity_deviation(const ComplexMatrix& m) {
    const std::size_t n = m.dim();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx dot{};
            for (std::size_t k = 0; k < n; ++k) dot += std::conj(m(k, i)) * m(k, j);
            if (i == j) dot -= 1.0;
            worst = std::max(worst, std::abs(dot));
        }
    }
    return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
    if (tol <= 0.0) throw std::invalid_argument("is_unitary: tol must be positive");
    return unitarity_deviation(m) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

cplx determinant(const ComplexMatrix& m) {
    // LU with partial pivoting.
    const std::size_t n = m.dim();
    ComplexMatrix w = m;
    cplx det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(w(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(w(r, col)) > best) {
                best = std::abs(w(r, col));
                pivot = r;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(pivot, j), w(col, j));
            det = -det;
        }
        det *= w(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const cplx f = w(r, col) / w(col, col);
            for (std::size_t j = col; j < n; ++j) w(r, j) -= f * w(col, j);
        }
    }
    return det;
}

ComplexMatrix haar_random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("haar_random_unitary: dim must be >= 1");
    Gaussian gauss(seed);
    ComplexMatrix z(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = gauss();
            const double im = gauss();
            z(i, j) = cplx{re, im};
        }
    }
    // Modified Gram-Schmidt, two passes per column. The R diagonal comes out
    // real positive, which is the distribution-correct QR convention.
    ComplexMatrix q(n);
    std::vector<cplx> v(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t r = 0; r < n; ++r) v[r] = z(r, col);
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < col; ++prev) {
                cplx dot{};
                for (std::size_t r = 0; r < n; ++r) dot += std::conj(q(r, prev)) * v[r];
                for (std::size_t r = 0; r < n; ++r) v[r] -= dot * q(r, prev);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < n; ++r) norm += std::norm(v[r]);
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < n; ++r) q(r, col) = v[r] / norm;
    }
    return q;
}

SpecialUnitary special_unitarize(const ComplexMatrix& u) {
    const std::size_t n = u.dim();
    if (n == 0) throw std::invalid_argument("special_unitarize: empty matrix");
    if (!is_unitary(u, 1e-8)) {
        throw std::invalid_argument("special_unitarize: input is not unitary");
    }
    double a = std::arg(determinant(u));
    if (a <= -std::numbers::pi) a = std::numbers::pi;  // branch cut goes to +pi
    const double delta = a / static_cast<double>(n);
    SpecialUnitary out;
    out.delta = delta;
    out.v = u;
    const cplx scale = std::polar(1.0, -delta);
    for (auto& e : out.v.data()) e *= scale;
    return out;
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "frobenius_distance");
    double sum = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        sum += std::norm(a.data()[i] - b.data()[i]);
    }
    return std::sqrt(sum);
}

double dist_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_dim(a, b, "dist_phase");
    double na = 0.0, nb = 0.0;
    cplx overlap{};
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        na += std::norm(a.data()[i]);
        nb += std::norm(b.data()[i]);
        overlap += std::conj(a.data()[i]) * b.data()[i];  // tr(a^dagger b)
    }
    const double d2 = na + nb - 2.0 * std::abs(overlap);
    return std::sqrt(std::max(0.0, d2));
}

}  // namespace qsynth
