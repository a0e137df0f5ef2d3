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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geocodes/cacode.h"
#include "geocodes/lattice.h"
#include "geocodes/stabilizer.h"
#include "geocodes/surface.h"
#include "oracles/dense_entropy.h"

using namespace geocodes;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

template <typename Fn>
void for_each_subset(size_t n, size_t max_size, Fn &&fn) {
    std::vector<size_t> chosen;
    auto rec = [&](auto &&self, size_t next) -> void {
        fn(std::span<const size_t>(chosen));
        if (chosen.size() == max_size) {
            return;
        }
        for (size_t q = next; q < n; q++) {
            chosen.push_back(q);
            self(self, q + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

Outcome sierpinski_weights() {
    BigInt power = 1;
    for (unsigned p = 0; p <= 60; p++) {
        BigInt closed = sierpinski_weight_closed_form(p);
        if (closed != power) {
            return {false, "closed form differs from 3^p at p=" + std::to_string(p)};
        }
        if (p <= 10 && sierpinski_weight_simulated(p) != power) {
            return {false, "simulation differs from 3^p at p=" + std::to_string(p)};
        }
        power *= 3;
    }
    return {true, "simulation p<=10 and closed form p<=60 equal 3^p"};
}

Outcome exhaustive_reproduction() {
    std::ostringstream out;
    bool ok = single_seed_weight(5) == 11 && exhaustive_distance(5).distance == 11;
    for (size_t L = 5; L <= 23; L += 2) {
        size_t d = exhaustive_distance(L).distance;
        uint64_t dp = single_seed_weight(L);
        out << " L=" << L << ":" << d;
        if (d != dp) {
            ok = false;
            out << "(d'=" << dp << ")";
        }
    }
    return {ok, "d=d' for odd L in [5,23];" + out.str()};
}

Outcome scaling_exponent() {
    std::vector<std::pair<double, double>> d_vs_L;
    std::vector<std::pair<double, double>> ksqrtd_vs_n;
    for (size_t L = 101; L <= 10001; L += 2) {
        double dp = static_cast<double>(single_seed_weight(L));
        double k = static_cast<double>(L - 1);
        double n = static_cast<double>(L * L);
        d_vs_L.emplace_back(static_cast<double>(L), dp);
        ksqrtd_vs_n.emplace_back(n, k * std::sqrt(dp));
    }
    double a = fit_exponent(d_vs_L);
    double b = fit_exponent(ksqrtd_vs_n);
    bool ok = std::abs(a - 1.584) <= 0.010 && std::abs(b - 0.897) <= 0.010;
    char buf[160];
    std::snprintf(buf, sizeof buf, "slope log d' vs log L = %.4f (target 1.584), log k sqrt(d') vs log n = %.4f (target 0.897)", a, b);
    return {ok, buf};
}

Outcome surface_tightness() {
    struct Expect {
        StabilizerCode code;
        size_t n, k, d;
        const char *name;
    };
    std::vector<Expect> cases = {
        {planar_surface_code(2), 5, 1, 2, "planar(2)"},
        {planar_surface_code(3), 13, 1, 3, "planar(3)"},
        {toric_code(2), 8, 2, 2, "toric(2)"},
        {toric_code(3), 18, 2, 3, "toric(3)"},
    };
    std::ostringstream out;
    bool ok = true;
    for (const auto &c : cases) {
        size_t d = min_distance_bruteforce(c.code).distance;
        out << c.name << "=(" << c.code.n() << "," << c.code.k() << "," << d << ") ";
        ok = ok && c.code.n() == c.n && c.code.k() == c.k && d == c.d;
    }
    double lo = 1, hi = 0;
    for (size_t d = 2; d <= 12; d++) {
        for (size_t copies : {1, 2, 4, 8, 16}) {
            double q = k_copies_point(d, copies).q_ratio();
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
    }
    ok = ok && lo >= 0.5 && hi <= 1.0;
    out << "kcopies q_ratio in [" << lo << ", " << hi << "]";
    return {ok, out.str()};
}

Outcome fact1_suite() {
    struct Case {
        StabilizerCode code;
        size_t d;
    };
    std::vector<Case> cases = {{planar_surface_code(2), 2}, {planar_surface_code(3), 3}, {toric_code(2), 2}, {toric_code(3), 3}};
    size_t regions = 0;
    bool ok = true;
    for (const auto &c : cases) {
        for_each_subset(c.code.n(), c.d - 1, [&](std::span<const size_t> m) {
            auto r = verify_fact1(c.code, m);
            regions++;
            ok = ok && r.correctable && r.holds && r.conditional == r.negated_entropy;
        });
    }
    return {ok, std::to_string(regions) + " regions with |M| < d correctable and S(L)-S(Mc) = -S(M)"};
}

Outcome entropy_chain() {
    auto code = toric_code(4);
    const Lattice &lat = code.lattice();
    std::ostringstream out;
    auto base = abc_partition(lat, 4, 1);
    auto report = verify_entropy_chain(code, base);
    bool ok = report.preconditions_met() && report.chain_holds() && static_cast<int64_t>(code.k()) <= report.s_c;
    out << "R=4,w=1: k=" << code.k() << " S(C)=" << report.s_c << " |C|=" << report.c_qubits
        << (report.preconditions_met() ? "" : " (A or B not correctable)");

    std::mt19937_64 rng(20261015);
    size_t valid = 0, attempts = 0;
    while (valid < 20 && attempts < 5000) {
        attempts++;
        size_t w = 1 + rng() % 2;
        size_t R = 2 * w + 1 + rng() % (lat.width - 2 * w);
        auto p = abc_partition(lat, R, w, rng() % lat.height, rng() % lat.width);
        auto r = verify_entropy_chain(code, p);
        if (!r.preconditions_met()) {
            continue;
        }
        valid++;
        ok = ok && r.chain_holds();
    }
    ok = ok && valid == 20;
    out << "; random valid partitions " << valid << "/20 (" << attempts << " drawn)";
    return {ok, out.str()};
}

Outcome separated_unions() {
    auto code = planar_surface_code(5);
    std::mt19937_64 rng(7);
    size_t verified = 0, attempts = 0;
    bool ok = true;
    auto draw = [&]() {
        std::vector<size_t> qubits = {rng() % code.n()};
        if (rng() & 1) {
            qubits.push_back(rng() % code.n());
        }
        return code.region_of(qubits);
    };
    while (verified < 100 && attempts < 100000) {
        attempts++;
        auto r = union_lemma_check(code, draw(), draw());
        if (r.status == UnionStatus::Skipped) {
            continue;
        }
        verified++;
        ok = ok && r.status == UnionStatus::Verified && r.union_correctable;
    }
    ok = ok && verified == 100;
    return {ok, std::to_string(verified) + " separated pairs checked (" + std::to_string(attempts) + " drawn), all unions correctable"};
}

Outcome partition_geometry() {
    Lattice big(48, 48);
    auto p = abc_partition(big, 12, 2);
    auto abc = verify_window_property(p, 2);
    bool count_ok = p.c.size() * 12 * 12 <= 16 * 2 * 2 * big.num_sites();
    Lattice mid(20, 20);
    auto classical = verify_window_property(classical_partition(mid, 4, 2), 2);
    std::ostringstream out;
    out << "abc 48x48 R=12 w=2: " << abc.windows_scanned << " windows " << (abc.pass ? "ok" : abc.detail)
        << ", |C|R^2=" << p.c.size() * 144 << " <= " << 16 * 4 * big.num_sites() << "; classical 20x20 b=4 w=2: "
        << classical.windows_scanned << " windows " << (classical.pass ? "ok" : classical.detail);
    return {abc.pass && count_ok && classical.pass, out.str()};
}

Outcome oracle_equivalence() {
    std::vector<StabilizerCode> codes = {
        StabilizerCode::from_paulis({"ZZ"}), StabilizerCode::from_paulis({"XXXX", "ZZZZ"}), planar_surface_code(2)};
    size_t regions = 0;
    bool ok = true;
    for (const auto &code : codes) {
        std::vector<std::string> gens;
        for (const auto &row : code.generators().rows()) {
            gens.push_back(Pauli(row).to_string());
        }
        for_each_subset(code.n(), code.n(), [&](std::span<const size_t> m) {
            double dense = oracle::dense_entropy(gens, std::vector<size_t>(m.begin(), m.end()));
            regions++;
            ok = ok && std::abs(dense - std::round(dense)) < 1e-8 && entropy_region(code, m) == std::llround(dense);
        });
    }
    return {ok, std::to_string(regions) + " regions agree with dense diagonalisation"};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"sierpinski weight 3^p", sierpinski_weights},
        {"exhaustive distance equals single-seed weight", exhaustive_reproduction},
        {"single-seed scaling exponents", scaling_exponent},
        {"surface code parameters", surface_tightness},
        {"conditional entropy on correctable regions", fact1_suite},
        {"entropy chain on toric(4)", entropy_chain},
        {"union of separated correctable regions", separated_unions},
        {"partition window geometry", partition_geometry},
        {"entropy against dense density matrices", oracle_equivalence},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !outcome.pass;
        std::printf("%s criterion %zu (%s): %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].name,
                    outcome.detail.c_str(), seconds);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
