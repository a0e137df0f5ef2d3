// Copyright 2026 The Geocodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense density-matrix reference for stabilizer entropies. Test-only; needs Eigen.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace geocodes::oracle {

/// Von Neumann entropy (bits) of the maximally mixed code state reduced to `qubits`, via dense
/// matrices: rho = prod_g (I + g)/2 normalised, partial trace, Hermitian eigensolve.
/// Generators must be independent (so that -I is not in the group).
inline double dense_entropy(const std::vector<std::string> &gens, const std::vector<size_t> &qubits) {
    using Mat = Eigen::MatrixXcd;
    using cd = std::complex<double>;
    size_t n = gens.front().size();
    if (n > 10) {
        throw std::invalid_argument("dense oracle limited to n <= 10");
    }
    size_t dim = size_t{1} << n;
    auto pauli_matrix = [&](const std::string &p) {
        // Qubit q is bit q of the basis index.
        Mat m = Mat::Zero(dim, dim);
        for (size_t col = 0; col < dim; col++) {
            size_t row = col;
            cd amp = 1;
            for (size_t q = 0; q < n; q++) {
                int bit = (col >> q) & 1;
                switch (p[q]) {
                    case 'X':
                        row ^= size_t{1} << q;
                        break;
                    case 'Y':
                        row ^= size_t{1} << q;
                        amp *= bit ? cd(0, -1) : cd(0, 1);
                        break;
                    case 'Z':
                        amp *= bit ? -1.0 : 1.0;
                        break;
                    default:
                        break;
                }
            }
            m(row, col) = amp;
        }
        return m;
    };
    Mat proj = Mat::Identity(dim, dim);
    for (const auto &g : gens) {
        proj = proj * (Mat::Identity(dim, dim) + pauli_matrix(g)) * 0.5;
    }
    Mat rho = proj / proj.trace().real();

    std::vector<size_t> rest;
    for (size_t q = 0; q < n; q++) {
        if (std::find(qubits.begin(), qubits.end(), q) == qubits.end()) {
            rest.push_back(q);
        }
    }
    size_t dm = size_t{1} << qubits.size();
    size_t dr = size_t{1} << rest.size();
    auto embed = [&](size_t a, size_t e) {
        size_t idx = 0;
        for (size_t k = 0; k < qubits.size(); k++) {
            idx |= ((a >> k) & 1) << qubits[k];
        }
        for (size_t k = 0; k < rest.size(); k++) {
            idx |= ((e >> k) & 1) << rest[k];
        }
        return idx;
    };
    Mat reduced = Mat::Zero(dm, dm);
    for (size_t a = 0; a < dm; a++) {
        for (size_t b = 0; b < dm; b++) {
            cd acc = 0;
            for (size_t e = 0; e < dr; e++) {
                acc += rho(embed(a, e), embed(b, e));
            }
            reduced(a, b) = acc;
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> solver(reduced);
    double s = 0;
    for (double lambda : solver.eigenvalues()) {
        if (lambda > 1e-12) {
            s -= lambda * std::log2(lambda);
        }
    }
    return s;
}

}  // namespace geocodes::oracle
