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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "geocodes/gf2.h"
#include "geocodes/lattice.h"

namespace geocodes {

using BigInt = boost::multiprecision::cpp_int;

/// One step of rule 90: out[i] = row[i-1] ^ row[i+1].
///
/// With `periodic` the indices wrap mod row.size(); otherwise neighbours past either end read as 0.
BitVec evolve_row(const BitVec &row, bool periodic);

/// A space-time history: rows[t] is the automaton state at time t.
struct CaCodeword {
    std::vector<BitVec> rows;

    size_t weight() const;
    /// Packs the history into one vector indexed by t * width + i.
    BitVec flatten() const;
};

/// Runs rule 90 from `initial` for `num_rows` rows (including the initial one).
CaCodeword ca_history(const BitVec &initial, size_t num_rows, bool periodic);

/// The finite cellular-automaton code on Z_L x [0, L-1]: histories of periodic rule 90 with the
/// gauge bit x[0][0] = 0. For odd L it has n = L^2 and k = L - 1.
class CaCode {
   public:
    /// Throws ContractViolation unless L is odd and at least 3.
    explicit CaCode(size_t L);

    size_t side() const {
        return L_;
    }
    size_t n() const {
        return L_ * L_;
    }
    size_t k() const {
        return L_ - 1;
    }
    /// Space axis periodic (x), time axis open (y). Site (t, i) has index t * L + i.
    Lattice lattice() const {
        return Lattice(L_, L_, true, false);
    }

    /// The local constraints as rows of a parity-check matrix over the n = L^2 site bits: one row per
    /// transition x[t+1][i] + x[t][i-1] + x[t][i+1] and one for the gauge bit.
    BitMatrix parity_check() const;

   private:
    size_t L_;
};

/// Message bit j sets x[0][j+1]; x[0][0] is forced to 0. Throws ContractViolation for even L or a
/// message whose length is not L - 1.
CaCodeword codeword_from_message(size_t L, const BitVec &message);

/// Weight of the periodic history started from x[0][i] = delta(i, 1), using two row buffers.
uint64_t single_seed_weight(size_t L);

struct ExhaustiveOptions {
    size_t threads = 1;
    bool force = false;
    /// Largest L enumerated without `force`.
    size_t guard_max_side = 25;
};

struct DistanceWitness {
    size_t distance = 0;
    /// Message bits (bit j <-> x[0][j+1]) of one minimum-weight codeword.
    uint64_t message = 0;
};

/// Minimum weight over all 2^(L-1) - 1 nonzero messages.
///
/// Enumerates messages in reflected-binary order so consecutive histories differ by one precomputed
/// basis history. Throws GuardRefusal when L exceeds the guard and `force` is off, and
/// ContractViolation for even L or L > 63.
DistanceWitness exhaustive_distance(size_t L, const ExhaustiveOptions &options = {});

/// Single-seed history on an open strip of width 2^(p+1) + 1 with the seed in the centre, 2^p rows.
CaCodeword sierpinski_history(unsigned p);
BigInt sierpinski_weight_simulated(unsigned p);
/// sum_{t < 2^p} 2^popcount(t), evaluated as sum_j C(p, j) 2^j.
BigInt sierpinski_weight_closed_form(unsigned p);
/// Closed form; for p <= kSierpinskiSimulationLimit the simulation is also run and must agree.
BigInt sierpinski_weight(unsigned p);
constexpr unsigned kSierpinskiSimulationLimit = 10;

/// How many of the four even-sublattice classes (by (i + t) mod 4 and t mod 2) a history touches.
///
/// A history living on the odd sublattice is shifted by one site first. Histories touching both
/// sublattices are rejected with ContractViolation.
int sublattice_occupancy(std::span<const BitVec> rows);

/// True iff no nonzero codeword is supported inside `region`.
bool correctable_region_classical(const CaCode &code, const Region &region);

struct LogLogFit {
    double slope = 0;
    double intercept = 0;
    double rms_residual = 0;
};

/// Ordinary least squares of log(y) against log(x). Throws ContractViolation with fewer than two
/// points or any non-positive coordinate.
LogLogFit fit_loglog(std::span<const std::pair<double, double>> points);
double fit_exponent(std::span<const std::pair<double, double>> points);

}  // namespace geocodes
