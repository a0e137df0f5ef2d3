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

#include "geocodes/stabilizer.h"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <mutex>

#include "geocodes/errors.h"
#include "geocodes/parallel.h"
#include "json.hpp"

namespace geocodes {

namespace {

// Columns of the (x | z) layout belonging to a qubit set.
std::vector<size_t> symplectic_columns(size_t n, std::span<const size_t> qubits) {
    std::vector<size_t> cols;
    cols.reserve(2 * qubits.size());
    for (size_t q : qubits) {
        cols.push_back(q);
    }
    for (size_t q : qubits) {
        cols.push_back(n + q);
    }
    return cols;
}

std::vector<size_t> complement_qubits(size_t n, std::span<const size_t> qubits) {
    std::vector<bool> in(n, false);
    for (size_t q : qubits) {
        if (q >= n) {
            throw ContractViolation("qubit " + std::to_string(q) + " out of range for n=" + std::to_string(n));
        }
        in[q] = true;
    }
    std::vector<size_t> out;
    for (size_t q = 0; q < n; q++) {
        if (!in[q]) {
            out.push_back(q);
        }
    }
    return out;
}

std::vector<size_t> normalized_qubits(size_t n, std::span<const size_t> qubits) {
    std::vector<size_t> q(qubits.begin(), qubits.end());
    std::sort(q.begin(), q.end());
    q.erase(std::unique(q.begin(), q.end()), q.end());
    if (!q.empty() && q.back() >= n) {
        throw ContractViolation("qubit " + std::to_string(q.back()) + " out of range for n=" + std::to_string(n));
    }
    return q;
}

size_t restricted_rank(const StabilizerCode &code, std::span<const size_t> qubits) {
    if (qubits.empty()) {
        return 0;
    }
    auto cols = symplectic_columns(code.n(), qubits);
    return gf2::rank(code.generators().select_columns(cols));
}

// dim of {s in stabilizer span : supp(s) inside M} = rank(G) - rank(G restricted to the complement).
size_t stabilizer_dim_inside(const StabilizerCode &code, std::span<const size_t> qubits) {
    auto outside = complement_qubits(code.n(), qubits);
    return code.generator_rank() - restricted_rank(code, outside);
}

BitVec swap_halves(const BitVec &xz, size_t n) {
    BitVec out(2 * n);
    for (size_t k : xz.support()) {
        out.set(k < n ? k + n : k - n, true);
    }
    return out;
}

}  // namespace

Pauli::Pauli(BitVec xz_bits) : xz(std::move(xz_bits)) {
    if (xz.size() % 2 != 0) {
        throw ContractViolation("a Pauli's (x | z) vector needs even length");
    }
}

Pauli Pauli::from_string(std::string_view text) {
    Pauli p(text.size());
    size_t n = text.size();
    for (size_t q = 0; q < n; q++) {
        switch (text[q]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.xz.set(q, true);
                break;
            case 'Z':
                p.xz.set(n + q, true);
                break;
            case 'Y':
                p.xz.set(q, true);
                p.xz.set(n + q, true);
                break;
            default:
                throw ContractViolation("unrecognized Pauli character in '" + std::string(text) + "'");
        }
    }
    return p;
}

std::vector<size_t> Pauli::support() const {
    std::vector<size_t> out;
    for (size_t q = 0; q < num_qubits(); q++) {
        if (x(q) || z(q)) {
            out.push_back(q);
        }
    }
    return out;
}

size_t Pauli::weight() const {
    return support().size();
}

bool Pauli::commutes(const Pauli &other) const {
    return !symplectic_product(xz, other.xz);
}

std::string Pauli::to_string() const {
    std::string out(num_qubits(), 'I');
    for (size_t q = 0; q < num_qubits(); q++) {
        out[q] = "IXZY"[x(q) + 2 * z(q)];
    }
    return out;
}

bool symplectic_product(const BitVec &a, const BitVec &b) {
    if (a.size() != b.size() || a.size() % 2 != 0) {
        throw ContractViolation("symplectic product needs two (x | z) vectors of equal even length");
    }
    return a.dot(swap_halves(b, b.size() / 2));
}

StabilizerCode::StabilizerCode(BitMatrix generators, Lattice lattice, std::vector<size_t> site_of_qubit, size_t w)
    : n_(site_of_qubit.size()),
      rank_(0),
      w_(w),
      generators_(std::move(generators)),
      lattice_(lattice),
      site_of_qubit_(std::move(site_of_qubit)),
      qubit_of_site_(lattice.num_sites(), SIZE_MAX) {
    if (generators_.num_rows() > 0 && generators_.num_cols() != 2 * n_) {
        throw ContractViolation(
            "generators have " + std::to_string(generators_.num_cols()) + " columns, expected 2n = " +
            std::to_string(2 * n_));
    }
    if (generators_.num_rows() == 0) {
        generators_ = BitMatrix(0, 2 * n_);
    }
    for (size_t q = 0; q < n_; q++) {
        size_t s = site_of_qubit_[q];
        if (s >= lattice_.num_sites()) {
            throw ContractViolation("qubit " + std::to_string(q) + " placed outside the lattice");
        }
        if (qubit_of_site_[s] != SIZE_MAX) {
            throw ContractViolation("qubits " + std::to_string(qubit_of_site_[s]) + " and " + std::to_string(q) +
                                    " share site " + std::to_string(s));
        }
        qubit_of_site_[s] = q;
    }
    std::vector<BitVec> swapped;
    for (const auto &g : generators_.rows()) {
        swapped.push_back(swap_halves(g, n_));
    }
    for (size_t a = 0; a < generators_.num_rows(); a++) {
        for (size_t b = a + 1; b < generators_.num_rows(); b++) {
            if (generators_.row(a).dot(swapped[b])) {
                throw ContractViolation(
                    "generators " + std::to_string(a) + " and " + std::to_string(b) + " anticommute: " +
                    Pauli(generators_.row(a)).to_string() + " vs " + Pauli(generators_.row(b)).to_string());
            }
        }
        std::vector<size_t> sites;
        for (size_t q : Pauli(generators_.row(a)).support()) {
            sites.push_back(site_of_qubit_[q]);
        }
        if (!fits_in_window(lattice_, sites, w_)) {
            throw ContractViolation(
                "generator " + std::to_string(a) + " does not fit in a " + std::to_string(w_) + "x" +
                std::to_string(w_) + " window");
        }
    }
    rank_ = gf2::rank(generators_);
}

StabilizerCode StabilizerCode::without_geometry(BitMatrix generators) {
    size_t n = generators.num_cols() / 2;
    std::vector<size_t> sites(n);
    for (size_t q = 0; q < n; q++) {
        sites[q] = q;
    }
    return StabilizerCode(std::move(generators), Lattice(std::max<size_t>(n, 1), 1), std::move(sites), std::max<size_t>(n, 1));
}

StabilizerCode StabilizerCode::from_paulis(std::initializer_list<std::string_view> generators) {
    BitMatrix m;
    for (auto g : generators) {
        m.push_row(Pauli::from_string(g).xz);
    }
    return without_geometry(std::move(m));
}

std::vector<size_t> StabilizerCode::qubits_in(const Region &region) const {
    if (!(region.lattice() == lattice_)) {
        throw ContractViolation("region lives on a different lattice than the code");
    }
    std::vector<size_t> out;
    for (size_t s : region.sites()) {
        if (qubit_of_site_[s] != SIZE_MAX) {
            out.push_back(qubit_of_site_[s]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Region StabilizerCode::region_of(std::span<const size_t> qubits) const {
    std::vector<size_t> sites;
    for (size_t q : qubits) {
        sites.push_back(site_of_qubit_.at(q));
    }
    return Region(lattice_, std::move(sites));
}

size_t code_k(const StabilizerCode &code) {
    return code.k();
}

BitMatrix normalizer_basis(const StabilizerCode &code) {
    size_t n = code.n();
    BitMatrix swapped(0, 2 * n);
    for (const auto &g : code.generators().rows()) {
        swapped.push_row(swap_halves(g, n));
    }
    return gf2::nullspace(swapped);
}

MinDistanceResult min_distance_bruteforce(const StabilizerCode &code, const MinDistanceOptions &options) {
    const size_t n = code.n();
    const size_t k = code.k();
    if (k == 0) {
        throw ContractViolation("a k = 0 code has no logical operators, so no distance to search for");
    }
    if (n + k > options.guard && !options.force) {
        throw GuardRefusal(
            "brute-force distance over 2^" + std::to_string(n + k) + " normalizer elements exceeds the guard n+k <= " +
            std::to_string(options.guard) + "; pass force to run anyway");
    }
    if (n > 64 || n + k > 62) {
        throw ContractViolation("brute-force distance supports n <= 64 and n + k <= 62");
    }

    // Stabilizer basis first, then normalizer vectors that extend it: the extension is a set of
    // 2k logical representatives.
    BitMatrix echelon = code.generators();
    auto pivots = gf2::reduce_to_rref(echelon);
    std::vector<BitVec> stabilizers(echelon.rows().begin(), echelon.rows().begin() + pivots.size());
    std::vector<BitVec> logicals;
    BitMatrix span(0, 2 * n);
    for (const auto &s : stabilizers) {
        span.push_row(s);
    }
    size_t current_rank = stabilizers.size();
    BitMatrix normalizer = normalizer_basis(code);
    for (const auto &v : normalizer.rows()) {
        BitMatrix trial = span;
        trial.push_row(v);
        if (gf2::rank(trial) > current_rank) {
            span = std::move(trial);
            current_rank++;
            logicals.push_back(v);
        }
    }
    if (logicals.size() != 2 * k) {
        throw std::logic_error("normalizer extension produced " + std::to_string(logicals.size()) +
                               " logicals, expected 2k = " + std::to_string(2 * k));
    }

    // Basis bit j: logicals occupy the low 2k positions, stabilizers the rest.
    struct XZ {
        uint64_t x, z;
    };
    std::vector<XZ> basis;
    auto pack = [&](const BitVec &v) {
        XZ out{0, 0};
        for (size_t b : v.support()) {
            if (b < n) {
                out.x |= uint64_t{1} << b;
            } else {
                out.z |= uint64_t{1} << (b - n);
            }
        }
        return out;
    };
    for (const auto &l : logicals) {
        basis.push_back(pack(l));
    }
    for (const auto &s : stabilizers) {
        basis.push_back(pack(s));
    }
    const size_t dim = basis.size();
    const uint64_t logical_mask = (uint64_t{1} << (2 * k)) - 1;

    std::atomic<size_t> shared_best{n + 1};
    std::mutex merge_mutex;
    size_t best = n + 1;
    XZ best_op{0, 0};

    parallel_chunks(uint64_t{1} << dim, options.threads, [&](uint64_t begin, uint64_t end) {
        uint64_t gray = begin ^ (begin >> 1);
        XZ cur{0, 0};
        for (size_t j = 0; j < dim; j++) {
            if ((gray >> j) & 1) {
                cur.x ^= basis[j].x;
                cur.z ^= basis[j].z;
            }
        }
        size_t local_best = shared_best.load(std::memory_order_relaxed);
        XZ local_op{0, 0};
        bool found = false;
        for (uint64_t i = begin; i < end; i++) {
            if (i != begin) {
                size_t j = std::countr_zero(i);
                gray ^= uint64_t{1} << j;
                cur.x ^= basis[j].x;
                cur.z ^= basis[j].z;
            }
            if ((gray & logical_mask) == 0) {
                continue;
            }
            size_t w = std::popcount(cur.x | cur.z);
            if (w < local_best) {
                local_best = w;
                local_op = cur;
                found = true;
                size_t prev = shared_best.load(std::memory_order_relaxed);
                while (w < prev && !shared_best.compare_exchange_weak(prev, w)) {
                }
            }
        }
        if (found) {
            std::lock_guard lock(merge_mutex);
            if (local_best < best) {
                best = local_best;
                best_op = local_op;
            }
        }
    });

    MinDistanceResult result;
    result.distance = best;
    result.witness = Pauli(n);
    for (size_t q = 0; q < n; q++) {
        result.witness.xz.set(q, (best_op.x >> q) & 1);
        result.witness.xz.set(n + q, (best_op.z >> q) & 1);
    }
    return result;
}

bool correctable_region(const StabilizerCode &code, std::span<const size_t> qubits) {
    auto m = normalized_qubits(code.n(), qubits);
    size_t normalizer_inside = 2 * m.size() - restricted_rank(code, m);
    return normalizer_inside == stabilizer_dim_inside(code, m);
}

bool correctable_region(const StabilizerCode &code, const Region &region) {
    return correctable_region(code, code.qubits_in(region));
}

int64_t entropy_region(const StabilizerCode &code, std::span<const size_t> qubits) {
    auto m = normalized_qubits(code.n(), qubits);
    return static_cast<int64_t>(m.size()) - static_cast<int64_t>(stabilizer_dim_inside(code, m));
}

int64_t entropy_region(const StabilizerCode &code, const Region &region) {
    return entropy_region(code, code.qubits_in(region));
}

EntropyReport entropy_report(const StabilizerCode &code, std::span<const size_t> qubits) {
    EntropyReport r;
    r.qubits = normalized_qubits(code.n(), qubits);
    auto outside = complement_qubits(code.n(), r.qubits);
    r.s_region = entropy_region(code, r.qubits);
    r.s_complement = entropy_region(code, outside);
    r.s_total = static_cast<int64_t>(code.k());
    r.s_conditional = r.s_total - r.s_complement;
    r.correctable = correctable_region(code, r.qubits);
    return r;
}

Fact1Report verify_fact1(const StabilizerCode &code, std::span<const size_t> qubits) {
    auto e = entropy_report(code, qubits);
    Fact1Report r;
    r.correctable = e.correctable;
    r.conditional = e.s_conditional;
    r.negated_entropy = -e.s_region;
    r.holds = !r.correctable || r.conditional == r.negated_entropy;
    return r;
}

EntropyChainReport verify_entropy_chain(const StabilizerCode &code, const PartitionABC &partition) {
    auto qa = code.qubits_in(partition.a);
    auto qb = code.qubits_in(partition.b);
    auto qc = code.qubits_in(partition.c);
    EntropyChainReport r;
    r.a_correctable = correctable_region(code, qa);
    r.b_correctable = correctable_region(code, qb);
    r.s_a = entropy_region(code, qa);
    r.s_b = entropy_region(code, qb);
    r.s_c = entropy_region(code, qc);
    r.s_total = static_cast<int64_t>(code.k());
    r.c_qubits = qc.size();
    r.total_le_c_plus_b_minus_a = r.s_total <= r.s_c + r.s_b - r.s_a;
    r.total_le_c_plus_a_minus_b = r.s_total <= r.s_c + r.s_a - r.s_b;
    r.k_le_s_c = static_cast<int64_t>(code.k()) <= r.s_c;
    r.s_c_le_size = r.s_c <= static_cast<int64_t>(r.c_qubits);
    return r;
}

UnionReport union_lemma_check(const StabilizerCode &code, const Region &m1, const Region &m2) {
    UnionReport r;
    if (!window_separated(m1, m2, code.w())) {
        r.reason = "some interaction window meets both regions";
        return r;
    }
    if (!correctable_region(code, m1)) {
        r.reason = "first region is not correctable";
        return r;
    }
    if (!correctable_region(code, m2)) {
        r.reason = "second region is not correctable";
        return r;
    }
    if (!correctable_region(code, boundary_plus(m1, code.w()))) {
        r.reason = "external boundary of the first region is not correctable";
        return r;
    }
    r.union_correctable = correctable_region(code, m1.united(m2));
    r.status = r.union_correctable ? UnionStatus::Verified : UnionStatus::Violated;
    if (!r.union_correctable) {
        r.reason = "union of separated correctable regions is not correctable";
    }
    return r;
}

std::string code_to_json(const StabilizerCode &code) {
    nlohmann::ordered_json j;
    j["n"] = code.n();
    j["w"] = code.w();
    std::vector<std::string> gens;
    for (const auto &g : code.generators().rows()) {
        gens.push_back(g.to_string());
    }
    j["generators"] = gens;
    std::vector<std::array<size_t, 2>> sites;
    for (size_t s : code.site_of_qubit()) {
        sites.push_back({code.lattice().row_of(s), code.lattice().col_of(s)});
    }
    j["sites"] = sites;
    const Lattice &lat = code.lattice();
    j["lattice"] = {
        {"width", lat.width}, {"height", lat.height}, {"periodic_x", lat.periodic_x}, {"periodic_y", lat.periodic_y}};
    return j.dump();
}

StabilizerCode code_from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        size_t n = j.at("n").get<size_t>();
        size_t w = j.at("w").get<size_t>();
        BitMatrix gens(0, 2 * n);
        for (const auto &g : j.at("generators")) {
            gens.push_row(BitVec::from_string(g.get<std::string>()));
        }
        auto coords = j.at("sites").get<std::vector<std::array<size_t, 2>>>();
        if (coords.size() != n) {
            throw ContractViolation("code JSON lists " + std::to_string(coords.size()) + " sites for n=" + std::to_string(n));
        }
        Lattice lat;
        if (j.contains("lattice")) {
            const auto &l = j.at("lattice");
            lat = Lattice(
                l.at("width").get<size_t>(), l.at("height").get<size_t>(), l.value("periodic_x", false),
                l.value("periodic_y", false));
        } else {
            size_t h = 1, wd = 1;
            for (auto [r, c] : coords) {
                h = std::max(h, r + 1);
                wd = std::max(wd, c + 1);
            }
            lat = Lattice(wd, h);
        }
        std::vector<size_t> sites;
        for (auto [r, c] : coords) {
            if (r >= lat.height || c >= lat.width) {
                throw ContractViolation("site coordinate outside the lattice");
            }
            sites.push_back(lat.site(r, c));
        }
        return StabilizerCode(std::move(gens), lat, std::move(sites), w);
    } catch (const nlohmann::json::exception &e) {
        throw ContractViolation(std::string("malformed code JSON: ") + e.what());
    }
}

}  // namespace geocodes
