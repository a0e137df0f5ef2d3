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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geocodes/gf2.h"
#include "geocodes/lattice.h"

namespace geocodes {

/// A phase-free Pauli operator on n qubits, stored as (x | z) in a 2n-bit vector.
struct Pauli {
    BitVec xz;

    Pauli() = default;
    explicit Pauli(size_t n) : xz(2 * n) {
    }
    explicit Pauli(BitVec xz_bits);
    /// Parses a string over {I, X, Y, Z}; '_' is accepted as I.
    static Pauli from_string(std::string_view text);

    size_t num_qubits() const {
        return xz.size() / 2;
    }
    bool x(size_t q) const {
        return xz.get(q);
    }
    bool z(size_t q) const {
        return xz.get(num_qubits() + q);
    }
    std::vector<size_t> support() const;
    size_t weight() const;
    bool commutes(const Pauli &other) const;
    std::string to_string() const;

    bool operator==(const Pauli &other) const = default;
};

/// Symplectic inner product of two (x | z) vectors of equal length.
bool symplectic_product(const BitVec &a, const BitVec &b);

/// A stabilizer code given by phase-free generators, placed on lattice sites.
///
/// Construction validates that every pair of generators commutes, that qubits sit on distinct sites,
/// and that every generator's support fits inside some w x w window of the lattice. Generators may
/// be linearly dependent.
class StabilizerCode {
   public:
    StabilizerCode(BitMatrix generators, Lattice lattice, std::vector<size_t> site_of_qubit, size_t w);

    /// Places qubit q on site q of a 1 x n open lattice and sets w = n, so locality is vacuous.
    static StabilizerCode without_geometry(BitMatrix generators);
    static StabilizerCode from_paulis(std::initializer_list<std::string_view> generators);

    size_t n() const {
        return n_;
    }
    size_t k() const {
        return n_ - rank_;
    }
    size_t generator_rank() const {
        return rank_;
    }
    size_t w() const {
        return w_;
    }
    const BitMatrix &generators() const {
        return generators_;
    }
    const Lattice &lattice() const {
        return lattice_;
    }
    std::span<const size_t> site_of_qubit() const {
        return site_of_qubit_;
    }
    /// Qubits whose site lies in the region, ascending. The region must live on this code's lattice.
    std::vector<size_t> qubits_in(const Region &region) const;
    /// The sites occupied by a set of qubits, as a region of this code's lattice.
    Region region_of(std::span<const size_t> qubits) const;

   private:
    size_t n_;
    size_t rank_;
    size_t w_;
    BitMatrix generators_;
    Lattice lattice_;
    std::vector<size_t> site_of_qubit_;
    std::vector<size_t> qubit_of_site_;
};

size_t code_k(const StabilizerCode &code);

/// Basis of the Paulis commuting with every generator; n + k rows.
BitMatrix normalizer_basis(const StabilizerCode &code);

struct MinDistanceOptions {
    size_t threads = 1;
    bool force = false;
    /// Largest n + k enumerated without `force`.
    size_t guard = 26;
};

struct MinDistanceResult {
    size_t distance = 0;
    Pauli witness;
};

/// Minimum weight of a normalizer element outside the stabilizer span, by enumerating all 2^(n+k)
/// normalizer elements. Throws GuardRefusal past the guard, ContractViolation when k = 0.
MinDistanceResult min_distance_bruteforce(const StabilizerCode &code, const MinDistanceOptions &options = {});

/// Erasure correctability of a qubit set: every normalizer element supported inside it must lie in
/// the stabilizer span. Decided by comparing the two subspace dimensions with rank computations.
bool correctable_region(const StabilizerCode &code, std::span<const size_t> qubits);
bool correctable_region(const StabilizerCode &code, const Region &region);

/// Entropy in bits of the maximally mixed encoded state reduced to a qubit set:
/// |M| - dim{s in stabilizer span : supp(s) inside M}.
int64_t entropy_region(const StabilizerCode &code, std::span<const size_t> qubits);
int64_t entropy_region(const StabilizerCode &code, const Region &region);

struct EntropyReport {
    std::vector<size_t> qubits;
    int64_t s_region = 0;
    int64_t s_complement = 0;
    int64_t s_total = 0;
    /// S(M | complement) = S(total) - S(complement).
    int64_t s_conditional = 0;
    bool correctable = false;
};

EntropyReport entropy_report(const StabilizerCode &code, std::span<const size_t> qubits);

struct Fact1Report {
    bool correctable = false;
    /// S(total) - S(complement).
    int64_t conditional = 0;
    /// -S(M).
    int64_t negated_entropy = 0;
    /// True when M is not correctable (nothing to check) or the equality holds.
    bool holds = true;
};

/// For a correctable M, checks S(M | complement) = -S(M) in exact integers.
Fact1Report verify_fact1(const StabilizerCode &code, std::span<const size_t> qubits);

struct EntropyChainReport {
    bool a_correctable = false;
    bool b_correctable = false;
    int64_t s_a = 0;
    int64_t s_b = 0;
    int64_t s_c = 0;
    int64_t s_total = 0;
    size_t c_qubits = 0;
    bool total_le_c_plus_b_minus_a = false;
    bool total_le_c_plus_a_minus_b = false;
    bool k_le_s_c = false;
    bool s_c_le_size = false;

    bool preconditions_met() const {
        return a_correctable && b_correctable;
    }
    /// All four inequalities hold. Meaningless unless preconditions_met().
    bool chain_holds() const {
        return total_le_c_plus_b_minus_a && total_le_c_plus_a_minus_b && k_le_s_c && s_c_le_size;
    }
};

/// Evaluates S(total) <= S(C) + S(B) - S(A), its mirror, and k <= S(C) <= |C| on a partition.
/// Entropies are always computed; the chain is only meaningful when A and B are both correctable.
EntropyChainReport verify_entropy_chain(const StabilizerCode &code, const PartitionABC &partition);

enum class UnionStatus { Verified, Violated, Skipped };

struct UnionReport {
    UnionStatus status = UnionStatus::Skipped;
    std::string reason;
    bool union_correctable = false;
};

/// Checks that two window-separated correctable regions, with the first one's external boundary also
/// correctable, have a correctable union. Unmet preconditions give Skipped with a reason.
UnionReport union_lemma_check(const StabilizerCode &code, const Region &m1, const Region &m2);

/// JSON form: {n, w, generators: ["<2n bits>", ...], sites: [[row, col], ...],
///             lattice: {width, height, periodic_x, periodic_y}}.
/// The lattice object is optional on input; without it the bounding box of the sites is used, open.
std::string code_to_json(const StabilizerCode &code);
StabilizerCode code_from_json(std::string_view text);

}  // namespace geocodes
