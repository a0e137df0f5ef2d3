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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "geocodes/cacode.h"

namespace geocodes {

/// One (n, k, d) sample of a code family. Ratios are always recomputed from the integer fields.
struct TradeoffPoint {
    std::string family;
    uint64_t n = 0;
    uint64_t k = 0;
    uint64_t d = 1;
    /// False when d is only an upper bound (the single-seed weight of a CA code).
    bool d_is_exact = true;
    unsigned dimension = 2;

    /// k d^2 / n.
    double q_ratio() const;
    /// k sqrt(d) / n.
    double c_ratio() const;

    bool operator==(const TradeoffPoint &other) const = default;
};

/// Exponent alpha = 2 / (D - 1) in k <= c n / d^alpha for a D-dimensional lattice (D >= 2).
double bound_exponent(unsigned dimension);

enum class BoundKind { Quantum, Classical };

std::string_view bound_kind_name(BoundKind kind);
/// Accepts "quantum" or "classical".
BoundKind parse_bound_kind(std::string_view text);

struct BoundReport {
    std::string family;
    BoundKind kind = BoundKind::Quantum;
    size_t num_points = 0;
    double max_q_ratio = 0;
    double max_c_ratio = 0;
    /// Fit of log(ratio) against log(n) for the selected ratio; absent with fewer than two distinct n.
    std::optional<LogLogFit> fit;
    /// Set when the fitted slope exceeds kGrowthTolerance, i.e. the ratio grows with n.
    bool grows = false;
};

constexpr double kGrowthTolerance = 0.02;

/// One report per family, sorted by family name. The result does not depend on input order.
/// Throws ContractViolation on an empty list.
std::vector<BoundReport> check_bound(std::span<const TradeoffPoint> points, BoundKind kind);

/// One row of a cellular-automaton scan.
struct CaScanRow {
    size_t L = 0;
    uint64_t n = 0;
    uint64_t k = 0;
    uint64_t d_prime = 0;
    std::optional<uint64_t> d_exhaustive;

    /// k sqrt(d) / n, using the exhaustive distance when known and d' otherwise.
    double ratio_ksqrtd_over_n() const;
    TradeoffPoint to_point() const;
};

struct ScanOptions {
    size_t threads = 1;
    bool force = false;
};

/// Odd L in [L_min, L_max]; exhaustive distances for L <= exhaustive_up_to. Rows are ordered by L.
std::vector<CaScanRow> scan_ca_rows(size_t L_min, size_t L_max, size_t exhaustive_up_to, const ScanOptions &options = {});
std::vector<TradeoffPoint> scan_ca(size_t L_min, size_t L_max, size_t exhaustive_up_to, const ScanOptions &options = {});

struct SurfaceScanOptions {
    ScanOptions scan;
    /// Replace the nominal distance by brute force where the enumeration guard allows.
    bool verify_distance = false;
    std::vector<size_t> copies = {1, 2, 4};
};

/// Planar codes d = 2..d_max, toric codes L = 2..L_max and k-copies points of the planar codes.
std::vector<TradeoffPoint> scan_surface(size_t d_max, size_t L_max, const SurfaceScanOptions &options = {});

/// Column order: family,n,k,d,d_is_exact,q_ratio,c_ratio. Ratios use 6 significant digits.
std::string points_to_csv(std::span<const TradeoffPoint> points);
std::string points_to_json(std::span<const TradeoffPoint> points);
/// Also accepts the CA scan layout (family,L,n,k,d_prime,d_exhaustive,ratio_ksqrtd_over_n).
std::vector<TradeoffPoint> points_from_csv(std::string_view text);
/// Likewise accepts the JSON form of CA scan rows.
std::vector<TradeoffPoint> points_from_json(std::string_view text);

/// Column order: family,L,n,k,d_prime,d_exhaustive,ratio_ksqrtd_over_n (d_exhaustive blank if unknown).
std::string ca_rows_to_csv(std::span<const CaScanRow> rows);
std::string ca_rows_to_json(std::span<const CaScanRow> rows);

std::string reports_to_csv(std::span<const BoundReport> reports);
std::string reports_to_json(std::span<const BoundReport> reports);

/// Formats with 6 significant digits.
std::string format_ratio(double value);

/// Writes a file, throwing std::runtime_error that names the path on failure.
void write_text_file(const std::string &path, std::string_view content);
std::string read_text_file(const std::string &path);

}  // namespace geocodes
