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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "geocodes/errors.h"
#include "geocodes/stabilizer.h"
#include "geocodes/surface.h"
#include "oracles/dense_entropy.h"
#include "oracles/oracles.h"

using namespace geocodes;

namespace {

std::vector<std::string> generator_strings(const StabilizerCode &code) {
    std::vector<std::string> out;
    for (const auto &row : code.generators().rows()) {
        out.push_back(Pauli(row).to_string());
    }
    return out;
}

// Calls fn(qubits) for every subset of {0..n-1} with at most max_size elements.
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

std::vector<size_t> complement_of(size_t n, std::span<const size_t> qubits) {
    std::vector<bool> in(n, false);
    for (size_t q : qubits) {
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

std::vector<size_t> all_qubits(size_t n) {
    std::vector<size_t> q(n);
    std::iota(q.begin(), q.end(), 0);
    return q;
}

}  // namespace

TEST(Pauli, parsing_and_commutation) {
    auto p = Pauli::from_string("XYZ_I");
    EXPECT_EQ(p.num_qubits(), 5u);
    EXPECT_EQ(p.weight(), 3u);
    EXPECT_EQ(p.support(), (std::vector<size_t>{0, 1, 2}));
    EXPECT_EQ(p.to_string(), "XYZII");
    EXPECT_TRUE(Pauli::from_string("XX").commutes(Pauli::from_string("ZZ")));
    EXPECT_FALSE(Pauli::from_string("XI").commutes(Pauli::from_string("ZI")));
    EXPECT_THROW(Pauli::from_string("XQ"), ContractViolation);

    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 200; trial++) {
        std::string a(6, 'I'), b(6, 'I');
        for (size_t q = 0; q < 6; q++) {
            a[q] = "IXYZ"[rng() % 4];
            b[q] = "IXYZ"[rng() % 4];
        }
        EXPECT_EQ(Pauli::from_string(a).commutes(Pauli::from_string(b)), oracle::naive_commute(a, b));
    }
}

TEST(CodeK, examples) {
    EXPECT_EQ(code_k(StabilizerCode::from_paulis({"ZZ"})), 1u);
    EXPECT_EQ(code_k(StabilizerCode::from_paulis({"XXXX", "ZZZZ"})), 2u);
    auto planar3 = planar_surface_code(3);
    EXPECT_EQ(planar3.n(), 13u);
    EXPECT_EQ(planar3.generators().num_rows(), 12u);
    EXPECT_EQ(code_k(planar3), 1u);
}

TEST(StabilizerCode, rejects_invalid_generators) {
    try {
        StabilizerCode::from_paulis({"XX", "ZZ", "XI"});
        FAIL() << "anticommuting generators accepted";
    } catch (const ContractViolation &e) {
        std::string what = e.what();
        EXPECT_NE(what.find("anticommute"), std::string::npos) << what;
    }
    // ZZ on sites 0 and 2 of a 3-site line does not fit a 2-wide window.
    auto gens = BitMatrix::from_strings({"000101"});
    EXPECT_THROW(StabilizerCode(gens, Lattice(3, 1), {0, 1, 2}, 2), ContractViolation);
    EXPECT_NO_THROW(StabilizerCode(gens, Lattice(3, 1), {0, 1, 2}, 3));
    EXPECT_THROW(StabilizerCode(gens, Lattice(3, 1), {0, 0, 2}, 3), ContractViolation);
}

TEST(Normalizer, examples) {
    auto zz = StabilizerCode::from_paulis({"ZZ"});
    auto nz = normalizer_basis(zz);
    EXPECT_EQ(nz.num_rows(), 3u);
    for (const auto &v : nz.rows()) {
        EXPECT_FALSE(symplectic_product(v, zz.generators().row(0)));
    }
    EXPECT_EQ(normalizer_basis(StabilizerCode::from_paulis({"XXXX", "ZZZZ"})).num_rows(), 6u);
    EXPECT_EQ(normalizer_basis(StabilizerCode::from_paulis({"XX", "ZZ"})).num_rows(), 2u);
}

TEST(MinDistance, examples) {
    auto four = StabilizerCode::from_paulis({"XXXX", "ZZZZ"});
    auto r = min_distance_bruteforce(four);
    EXPECT_EQ(r.distance, 2u);
    EXPECT_EQ(r.witness.weight(), 2u);
    EXPECT_FALSE(correctable_region(four, r.witness.support()));

    EXPECT_EQ(min_distance_bruteforce(planar_surface_code(2)).distance, 2u);
    auto p3 = min_distance_bruteforce(planar_surface_code(3));
    EXPECT_EQ(p3.distance, 3u);
    EXPECT_FALSE(correctable_region(planar_surface_code(3), p3.witness.support()));

    EXPECT_THROW(min_distance_bruteforce(StabilizerCode::from_paulis({"XX", "ZZ"})), ContractViolation);
    MinDistanceOptions tight;
    tight.guard = 5;
    EXPECT_THROW(min_distance_bruteforce(four, tight), GuardRefusal);
    tight.force = true;
    EXPECT_EQ(min_distance_bruteforce(four, tight).distance, 2u);
}

TEST(MinDistance, matches_weight_enumeration_oracle) {
    std::vector<StabilizerCode> codes = {
        StabilizerCode::from_paulis({"ZZ"}),
        StabilizerCode::from_paulis({"XXXX", "ZZZZ"}),
        StabilizerCode::from_paulis({"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}),
        StabilizerCode::from_paulis({"XXXXXXXX", "ZZZZZZZZ", "XIXIXIXI", "ZZIIZZII"}),
        planar_surface_code(2),
        planar_surface_code(3),
        toric_code(2),
    };
    MinDistanceOptions two;
    two.threads = 2;
    for (const auto &code : codes) {
        auto expect = oracle::distance_by_weight(generator_strings(code), code.n());
        ASSERT_TRUE(expect.has_value());
        EXPECT_EQ(min_distance_bruteforce(code).distance, *expect);
        EXPECT_EQ(min_distance_bruteforce(code, two).distance, *expect);
    }
}

TEST(Correctability, examples) {
    auto p3 = planar_surface_code(3);
    EXPECT_TRUE(correctable_region(p3, std::vector<size_t>{}));
    EXPECT_FALSE(correctable_region(p3, all_qubits(p3.n())));
    for (size_t d : {2, 3}) {
        auto code = planar_surface_code(d);
        for_each_subset(code.n(), d - 1, [&](std::span<const size_t> m) {
            EXPECT_TRUE(correctable_region(code, m));
        });
    }
}

TEST(Correctability, monotone_and_no_cloning) {
    std::mt19937_64 rng(41);
    std::vector<StabilizerCode> codes = {planar_surface_code(3), toric_code(2), planar_surface_code(4)};
    for (const auto &code : codes) {
        for (int trial = 0; trial < 200; trial++) {
            std::vector<size_t> big;
            for (size_t q = 0; q < code.n(); q++) {
                if (rng() % 3 == 0) {
                    big.push_back(q);
                }
            }
            std::vector<size_t> small;
            for (size_t q : big) {
                if (rng() & 1) {
                    small.push_back(q);
                }
            }
            if (correctable_region(code, big)) {
                EXPECT_TRUE(correctable_region(code, small));
            }
            EXPECT_FALSE(correctable_region(code, big) && correctable_region(code, complement_of(code.n(), big)));
        }
    }
    // Exhaustive no-cloning where n is small.
    for (const auto &code : {planar_surface_code(2), toric_code(2)}) {
        for_each_subset(code.n(), code.n(), [&](std::span<const size_t> m) {
            EXPECT_FALSE(correctable_region(code, m) && correctable_region(code, complement_of(code.n(), m)));
        });
    }
}

TEST(Correctability, smallest_uncorrectable_region_is_the_distance) {
    for (const auto &code : {planar_surface_code(2), planar_surface_code(3), toric_code(2)}) {
        size_t smallest = SIZE_MAX;
        for_each_subset(code.n(), 3, [&](std::span<const size_t> m) {
            if (!correctable_region(code, m)) {
                smallest = std::min(smallest, m.size());
            }
        });
        EXPECT_EQ(smallest, min_distance_bruteforce(code).distance);
    }
}

TEST(Entropy, examples) {
    auto zz = StabilizerCode::from_paulis({"ZZ"});
    EXPECT_EQ(entropy_region(zz, std::vector<size_t>{}), 0);
    EXPECT_EQ(entropy_region(zz, std::vector<size_t>{0}), 1);
    EXPECT_NEAR(oracle::dense_entropy({"ZZ"}, {0}), 1.0, 1e-9);
    EXPECT_EQ(entropy_region(zz, all_qubits(2)), 1);

    auto p3 = planar_surface_code(3);
    EXPECT_EQ(entropy_region(p3, all_qubits(p3.n())), 1);
    auto t2 = toric_code(2);
    EXPECT_EQ(entropy_region(t2, all_qubits(t2.n())), 2);
}

TEST(Entropy, bounds_on_random_regions) {
    std::mt19937_64 rng(99);
    for (const auto &code : {planar_surface_code(4), toric_code(3)}) {
        EXPECT_EQ(entropy_region(code, all_qubits(code.n())), static_cast<int64_t>(code.k()));
        for (int trial = 0; trial < 100; trial++) {
            std::vector<size_t> m;
            for (size_t q = 0; q < code.n(); q++) {
                if (rng() & 1) {
                    m.push_back(q);
                }
            }
            int64_t s = entropy_region(code, m);
            EXPECT_GE(s, 0);
            EXPECT_LE(s, static_cast<int64_t>(m.size()));
        }
    }
}

TEST(Entropy, matches_dense_density_matrix) {
    std::vector<std::vector<std::string>> families = {
        {"ZZ"},
        {"XXXX", "ZZZZ"},
        {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"},
        {"ZZI", "IZZ"},
        {"XXI", "IXX", "ZZZ"},
    };
    families.push_back(generator_strings(planar_surface_code(2)));
    for (const auto &gens : families) {
        BitMatrix rows;
        for (const auto &g : gens) {
            rows.push_row(Pauli::from_string(g).xz);
        }
        auto code = StabilizerCode::without_geometry(rows);
        for_each_subset(code.n(), code.n(), [&](std::span<const size_t> m) {
            std::vector<size_t> qubits(m.begin(), m.end());
            double dense = oracle::dense_entropy(gens, qubits);
            EXPECT_NEAR(dense, std::round(dense), 1e-8);
            EXPECT_EQ(entropy_region(code, m), static_cast<int64_t>(std::llround(dense)));
        });
    }
}

TEST(ConditionalEntropy, examples) {
    auto p3 = planar_surface_code(3);
    auto empty = verify_fact1(p3, std::vector<size_t>{});
    EXPECT_TRUE(empty.correctable);
    EXPECT_EQ(empty.conditional, 0);
    EXPECT_EQ(empty.negated_entropy, 0);
    EXPECT_TRUE(empty.holds);

    for_each_subset(p3.n(), 2, [&](std::span<const size_t> m) {
        auto r = verify_fact1(p3, m);
        EXPECT_TRUE(r.correctable);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.conditional, r.negated_entropy);
    });

    auto t3 = toric_code(3);
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 100; trial++) {
        std::vector<size_t> m = {rng() % t3.n(), rng() % t3.n()};
        auto r = verify_fact1(t3, m);
        EXPECT_TRUE(r.correctable);
        EXPECT_TRUE(r.holds);
    }

    auto report = entropy_report(p3, std::vector<size_t>{0, 1});
    EXPECT_EQ(report.s_total, 1);
    EXPECT_EQ(report.s_conditional, report.s_total - report.s_complement);
    EXPECT_EQ(report.s_conditional, -report.s_region);
}

TEST(ConditionalEntropy, large_correctable_regions) {
    std::mt19937_64 rng(12);
    auto code = planar_surface_code(4);
    size_t checked = 0;
    for (int trial = 0; trial < 300; trial++) {
        std::vector<size_t> m;
        for (size_t q = 0; q < code.n(); q++) {
            if (rng() % 4 == 0) {
                m.push_back(q);
            }
        }
        auto r = verify_fact1(code, m);
        EXPECT_TRUE(r.holds);
        checked += r.correctable;
    }
    EXPECT_GT(checked, 0u);
}

TEST(EntropyChain, examples) {
    // k = 0: one Z check per site.
    Lattice lat(5, 5);
    BitMatrix singles(0, 50);
    for (size_t q = 0; q < 25; q++) {
        singles.push_row(BitVec::unit(50, 25 + q));
    }
    std::vector<size_t> sites(25);
    std::iota(sites.begin(), sites.end(), 0);
    StabilizerCode trivial(singles, lat, sites, 1);
    auto trivial_report = verify_entropy_chain(trivial, abc_partition(lat, 3, 1));
    EXPECT_TRUE(trivial_report.preconditions_met());
    EXPECT_TRUE(trivial_report.chain_holds());
    EXPECT_EQ(trivial_report.s_total, 0);

    auto t4 = toric_code(4);
    auto partition = abc_partition(t4.lattice(), 4, 1);
    auto t4_report = verify_entropy_chain(t4, partition);
    EXPECT_TRUE(t4_report.preconditions_met());
    EXPECT_TRUE(t4_report.chain_holds());
    EXPECT_EQ(t4_report.s_total, 2);
    EXPECT_GE(t4_report.s_c, 2);

    auto p3 = planar_surface_code(3);
    auto single = abc_partition(p3.lattice(), p3.lattice().width, 1);
    auto p3_report = verify_entropy_chain(p3, single);
    EXPECT_FALSE(p3_report.a_correctable);
    EXPECT_EQ(p3_report.s_a, 1);
    EXPECT_EQ(p3_report.s_c, 0);
    EXPECT_EQ(p3_report.c_qubits, 0u);
}

TEST(UnionCheck, examples) {
    auto p5 = planar_surface_code(5);
    const Lattice &lat = p5.lattice();
    Region corner_a(lat, {lat.site(0, 0)});
    Region corner_b(lat, {lat.site(8, 8)});

    auto alone = union_lemma_check(p5, corner_a, Region(lat));
    EXPECT_EQ(alone.status, UnionStatus::Verified) << alone.reason;
    EXPECT_TRUE(alone.union_correctable);

    auto corners = union_lemma_check(p5, corner_a, corner_b);
    EXPECT_EQ(corners.status, UnionStatus::Verified) << corners.reason;
    EXPECT_TRUE(corners.union_correctable);

    Region pair_a(lat, {lat.site(0, 0), lat.site(1, 1)});
    Region pair_b(lat, {lat.site(8, 6), lat.site(8, 8)});
    auto pairs = union_lemma_check(p5, pair_a, pair_b);
    EXPECT_EQ(pairs.status, UnionStatus::Verified) << pairs.reason;

    Region touching(lat, {lat.site(2, 2)});
    auto skipped = union_lemma_check(p5, pair_a, touching);
    EXPECT_EQ(skipped.status, UnionStatus::Skipped);
    EXPECT_FALSE(skipped.reason.empty());
}

TEST(CodeJson, round_trip) {
    for (const auto &code : {planar_surface_code(3), toric_code(2), StabilizerCode::from_paulis({"XXXX", "ZZZZ"})}) {
        auto back = code_from_json(code_to_json(code));
        EXPECT_EQ(back.n(), code.n());
        EXPECT_EQ(back.w(), code.w());
        EXPECT_EQ(back.generators(), code.generators());
        EXPECT_EQ(back.lattice(), code.lattice());
        EXPECT_TRUE(std::equal(back.site_of_qubit().begin(), back.site_of_qubit().end(), code.site_of_qubit().begin()));
    }
    auto bare = code_from_json(R"({"n": 2, "w": 2, "generators": ["0011"], "sites": [[0, 0], [0, 1]]})");
    EXPECT_EQ(bare.k(), 1u);
    EXPECT_EQ(bare.lattice(), Lattice(2, 1));
    EXPECT_THROW(code_from_json(R"({"n": 2, "w": 2, "generators": ["1000", "0010"], "sites": [[0, 0], [0, 1]]})") , ContractViolation);
    EXPECT_THROW(code_from_json(R"({"n": 2})"), ContractViolation);
}
