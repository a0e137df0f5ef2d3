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

#include "geocodes/cacode.h"

#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <string>

#include "geocodes/errors.h"
#include "geocodes/parallel.h"

namespace geocodes {

namespace {

void require_odd_side(size_t L) {
    if (L < 3 || L % 2 == 0) {
        throw ContractViolation("cellular-automaton codes need odd L >= 3, got L=" + std::to_string(L));
    }
}

// out[i] = in[i-1] ^ in[i+1] over packed words; tail bits of `in` must be zero.
void evolve_words(std::span<const uint64_t> in, std::span<uint64_t> out, size_t len, bool periodic) {
    size_t nw = in.size();
    for (size_t k = 0; k < nw; k++) {
        uint64_t shl = in[k] << 1;
        if (k > 0) {
            shl |= in[k - 1] >> 63;
        }
        uint64_t shr = in[k] >> 1;
        if (k + 1 < nw) {
            shr |= in[k + 1] << 63;
        }
        out[k] = shl ^ shr;
    }
    if (periodic) {
        bool first = in[0] & 1;
        bool last = (in[(len - 1) >> 6] >> ((len - 1) & 63)) & 1;
        out[0] ^= uint64_t{last};
        out[(len - 1) >> 6] ^= uint64_t{first} << ((len - 1) & 63);
    }
    if (len & 63) {
        out[nw - 1] &= (uint64_t{1} << (len & 63)) - 1;
    }
}

uint64_t evolve_word(uint64_t x, size_t L, uint64_t mask) {
    uint64_t left = ((x << 1) | (x >> (L - 1))) & mask;
    uint64_t right = (x >> 1) | ((x & 1) << (L - 1));
    return left ^ right;
}

}  // namespace

BitVec evolve_row(const BitVec &row, bool periodic) {
    if (row.size() == 0) {
        throw ContractViolation("evolve_row needs a row of length >= 1");
    }
    BitVec out(row.size());
    evolve_words(row.words(), out.mutable_words(), row.size(), periodic);
    return out;
}

size_t CaCodeword::weight() const {
    size_t total = 0;
    for (const auto &r : rows) {
        total += r.weight();
    }
    return total;
}

BitVec CaCodeword::flatten() const {
    size_t width = rows.empty() ? 0 : rows.front().size();
    BitVec out(width * rows.size());
    for (size_t t = 0; t < rows.size(); t++) {
        for (size_t i : rows[t].support()) {
            out.set(t * width + i, true);
        }
    }
    return out;
}

CaCodeword ca_history(const BitVec &initial, size_t num_rows, bool periodic) {
    CaCodeword cw;
    if (num_rows == 0) {
        return cw;
    }
    cw.rows.reserve(num_rows);
    cw.rows.push_back(initial);
    for (size_t t = 1; t < num_rows; t++) {
        cw.rows.push_back(evolve_row(cw.rows.back(), periodic));
    }
    return cw;
}

CaCode::CaCode(size_t L) : L_(L) {
    require_odd_side(L);
}

BitMatrix CaCode::parity_check() const {
    const size_t L = L_;
    BitMatrix h(0, L * L);
    for (size_t t = 0; t + 1 < L; t++) {
        for (size_t i = 0; i < L; i++) {
            BitVec row(L * L);
            row.set((t + 1) * L + i, true);
            row.flip(t * L + (i + L - 1) % L);
            row.flip(t * L + (i + 1) % L);
            h.push_row(std::move(row));
        }
    }
    h.push_row(BitVec::unit(L * L, 0));
    return h;
}

CaCodeword codeword_from_message(size_t L, const BitVec &message) {
    require_odd_side(L);
    if (message.size() != L - 1) {
        throw ContractViolation(
            "message must have L-1 = " + std::to_string(L - 1) + " bits, got " + std::to_string(message.size()));
    }
    BitVec initial(L);
    for (size_t j : message.support()) {
        initial.set(j + 1, true);
    }
    return ca_history(initial, L, true);
}

uint64_t single_seed_weight(size_t L) {
    require_odd_side(L);
    BitVec cur = BitVec::unit(L, 1);
    BitVec next(L);
    uint64_t total = cur.weight();
    for (size_t t = 1; t < L; t++) {
        evolve_words(cur.words(), next.mutable_words(), L, true);
        total += next.weight();
        std::swap(cur, next);
    }
    return total;
}

DistanceWitness exhaustive_distance(size_t L, const ExhaustiveOptions &options) {
    require_odd_side(L);
    if (L > 63) {
        throw ContractViolation("exhaustive_distance supports L <= 63 (one machine word per row)");
    }
    if (L > options.guard_max_side && !options.force) {
        throw GuardRefusal(
            "exhaustive search over 2^" + std::to_string(L - 1) + " messages exceeds the guard L <= " +
            std::to_string(options.guard_max_side) + "; pass force to run anyway");
    }
    const size_t k = L - 1;
    const uint64_t mask = (uint64_t{1} << L) - 1;

    // basis[j] is the history of the message with only bit j set.
    std::vector<uint64_t> basis(k * L);
    for (size_t j = 0; j < k; j++) {
        uint64_t row = uint64_t{1} << (j + 1);
        for (size_t t = 0; t < L; t++) {
            basis[j * L + t] = row;
            row = evolve_word(row, L, mask);
        }
    }

    DistanceWitness seed{static_cast<size_t>(single_seed_weight(L)), 1};
    std::atomic<size_t> shared_best{seed.distance};
    std::mutex merge_mutex;
    DistanceWitness best = seed;

    const uint64_t total = uint64_t{1} << k;
    parallel_chunks(total, options.threads, [&](uint64_t begin, uint64_t end) {
        std::vector<uint64_t> hist(L, 0);
        uint64_t gray = begin ^ (begin >> 1);
        for (size_t j = 0; j < k; j++) {
            if ((gray >> j) & 1) {
                for (size_t t = 0; t < L; t++) {
                    hist[t] ^= basis[j * L + t];
                }
            }
        }
        DistanceWitness local{shared_best.load(std::memory_order_relaxed), 0};
        for (uint64_t i = begin; i < end; i++) {
            if (i != begin) {
                size_t j = std::countr_zero(i);
                gray ^= uint64_t{1} << j;
                const uint64_t *b = &basis[j * L];
                for (size_t t = 0; t < L; t++) {
                    hist[t] ^= b[t];
                }
            }
            if (gray == 0) {
                continue;
            }
            size_t w = 0;
            for (size_t t = 0; t < L && w < local.distance; t++) {
                w += std::popcount(hist[t]);
            }
            if (w < local.distance) {
                local = {w, gray};
                size_t prev = shared_best.load(std::memory_order_relaxed);
                while (w < prev && !shared_best.compare_exchange_weak(prev, w)) {
                }
            }
            if ((i & 0xFFFF) == 0) {
                local.distance = std::min(local.distance, shared_best.load(std::memory_order_relaxed));
            }
        }
        if (local.message != 0) {
            std::lock_guard lock(merge_mutex);
            if (local.distance < best.distance) {
                best = local;
            }
        }
    });
    return best;
}

CaCodeword sierpinski_history(unsigned p) {
    if (p > 24) {
        throw ContractViolation("sierpinski_history: p > 24 would not fit in memory");
    }
    size_t rows = size_t{1} << p;
    size_t width = 2 * rows + 1;
    return ca_history(BitVec::unit(width, rows), rows, false);
}

BigInt sierpinski_weight_simulated(unsigned p) {
    auto hist = sierpinski_history(p);
    return BigInt(hist.weight());
}

BigInt sierpinski_weight_closed_form(unsigned p) {
    BigInt total = 0;
    BigInt binom = 1;
    BigInt pow2 = 1;
    for (unsigned j = 0; j <= p; j++) {
        total += binom * pow2;
        binom = binom * (p - j) / (j + 1);
        pow2 *= 2;
    }
    return total;
}

BigInt sierpinski_weight(unsigned p) {
    BigInt closed = sierpinski_weight_closed_form(p);
    if (p <= kSierpinskiSimulationLimit) {
        BigInt simulated = sierpinski_weight_simulated(p);
        if (simulated != closed) {
            throw std::logic_error(
                "sierpinski weight mismatch at p=" + std::to_string(p) + ": simulation " + simulated.str() +
                " vs closed form " + closed.str());
        }
    }
    return closed;
}

int sublattice_occupancy(std::span<const BitVec> rows) {
    int parity = -1;
    bool occupied[4] = {false, false, false, false};
    for (size_t t = 0; t < rows.size(); t++) {
        for (size_t i : rows[t].support()) {
            int par = static_cast<int>((i + t) & 1);
            if (parity == -1) {
                parity = par;
            } else if (parity != par) {
                throw ContractViolation("history touches both the even and the odd sublattice");
            }
            size_t shifted = i + t + static_cast<size_t>(par);
            size_t cls = ((shifted & 3) == 0 ? 0 : 1) + ((t & 1) ? 2 : 0);
            occupied[cls] = true;
        }
    }
    return occupied[0] + occupied[1] + occupied[2] + occupied[3];
}

bool correctable_region_classical(const CaCode &code, const Region &region) {
    if (region.lattice().num_sites() != code.n()) {
        throw ContractViolation("region lattice does not match the code lattice");
    }
    if (region.empty()) {
        return true;
    }
    BitMatrix restricted = code.parity_check().select_columns(region.sites());
    return gf2::rank(restricted) == region.size();
}

LogLogFit fit_loglog(std::span<const std::pair<double, double>> points) {
    if (points.size() < 2) {
        throw ContractViolation("fit needs at least two points");
    }
    double sx = 0, sy = 0;
    std::vector<std::pair<double, double>> logs;
    logs.reserve(points.size());
    for (auto [x, y] : points) {
        if (!(x > 0) || !(y > 0)) {
            throw ContractViolation("log-log fit needs strictly positive coordinates");
        }
        logs.emplace_back(std::log(x), std::log(y));
        sx += logs.back().first;
        sy += logs.back().second;
    }
    double n = static_cast<double>(logs.size());
    double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (auto [lx, ly] : logs) {
        sxx += (lx - mx) * (lx - mx);
        sxy += (lx - mx) * (ly - my);
    }
    if (sxx == 0) {
        throw ContractViolation("log-log fit needs at least two distinct x values");
    }
    LogLogFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double ss = 0;
    for (auto [lx, ly] : logs) {
        double r = ly - (fit.intercept + fit.slope * lx);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

double fit_exponent(std::span<const std::pair<double, double>> points) {
    return fit_loglog(points).slope;
}

}  // namespace geocodes
