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

#include "geocodes/tradeoff.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "geocodes/errors.h"
#include "geocodes/parallel.h"
#include "geocodes/surface.h"
#include "json.hpp"

namespace geocodes {

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        out.emplace_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

uint64_t parse_uint(const std::string &s, const char *field) {
    try {
        size_t used = 0;
        unsigned long long v = std::stoull(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw ContractViolation(std::string("CSV field ") + field + " is not an unsigned integer: '" + s + "'");
    }
}

bool parse_bool(const std::string &s) {
    if (s == "true" || s == "1") {
        return true;
    }
    if (s == "false" || s == "0") {
        return false;
    }
    throw ContractViolation("CSV field d_is_exact is not a boolean: '" + s + "'");
}

std::vector<std::string_view> data_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    size_t start = 0;
    while (start < text.size()) {
        size_t nl = text.find('\n', start);
        std::string_view line = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (!line.empty()) {
            lines.push_back(line);
        }
        if (nl == std::string_view::npos) {
            break;
        }
        start = nl + 1;
    }
    return lines;
}

constexpr std::string_view kPointsHeader = "family,n,k,d,d_is_exact,q_ratio,c_ratio";
constexpr std::string_view kCaHeader = "family,L,n,k,d_prime,d_exhaustive,ratio_ksqrtd_over_n";

}  // namespace

double TradeoffPoint::q_ratio() const {
    return static_cast<double>(k) * static_cast<double>(d) * static_cast<double>(d) / static_cast<double>(n);
}

double TradeoffPoint::c_ratio() const {
    return static_cast<double>(k) * std::sqrt(static_cast<double>(d)) / static_cast<double>(n);
}

double bound_exponent(unsigned dimension) {
    if (dimension < 2) {
        throw ContractViolation("bound exponent is defined for D >= 2");
    }
    return 2.0 / static_cast<double>(dimension - 1);
}

std::string_view bound_kind_name(BoundKind kind) {
    return kind == BoundKind::Quantum ? "quantum" : "classical";
}

BoundKind parse_bound_kind(std::string_view text) {
    if (text == "quantum") {
        return BoundKind::Quantum;
    }
    if (text == "classical") {
        return BoundKind::Classical;
    }
    throw ContractViolation("unknown bound kind '" + std::string(text) + "' (expected quantum or classical)");
}

std::vector<BoundReport> check_bound(std::span<const TradeoffPoint> points, BoundKind kind) {
    if (points.empty()) {
        throw ContractViolation("check_bound needs at least one point");
    }
    std::map<std::string, std::vector<TradeoffPoint>> by_family;
    for (const auto &p : points) {
        if (p.n == 0) {
            throw ContractViolation("tradeoff point with n = 0 in family " + p.family);
        }
        by_family[p.family].push_back(p);
    }
    std::vector<BoundReport> reports;
    for (auto &[family, members] : by_family) {
        std::sort(members.begin(), members.end(), [](const TradeoffPoint &a, const TradeoffPoint &b) {
            return std::tie(a.n, a.k, a.d, a.d_is_exact) < std::tie(b.n, b.k, b.d, b.d_is_exact);
        });
        BoundReport r;
        r.family = family;
        r.kind = kind;
        r.num_points = members.size();
        std::vector<std::pair<double, double>> samples;
        for (const auto &p : members) {
            r.max_q_ratio = std::max(r.max_q_ratio, p.q_ratio());
            r.max_c_ratio = std::max(r.max_c_ratio, p.c_ratio());
            double ratio = kind == BoundKind::Quantum ? p.q_ratio() : p.c_ratio();
            if (ratio > 0) {
                samples.emplace_back(static_cast<double>(p.n), ratio);
            }
        }
        bool distinct_n = std::any_of(samples.begin(), samples.end(), [&](const auto &s) {
            return s.first != samples.front().first;
        });
        if (samples.size() >= 2 && distinct_n) {
            r.fit = fit_loglog(samples);
            r.grows = r.fit->slope > kGrowthTolerance;
        }
        reports.push_back(std::move(r));
    }
    return reports;
}

double CaScanRow::ratio_ksqrtd_over_n() const {
    return to_point().c_ratio();
}

TradeoffPoint CaScanRow::to_point() const {
    TradeoffPoint p;
    p.family = "ca";
    p.n = n;
    p.k = k;
    p.d = d_exhaustive.value_or(d_prime);
    p.d_is_exact = d_exhaustive.has_value();
    return p;
}

std::vector<CaScanRow> scan_ca_rows(size_t L_min, size_t L_max, size_t exhaustive_up_to, const ScanOptions &options) {
    if (L_min < 3 || L_min % 2 == 0 || L_max % 2 == 0) {
        throw ContractViolation("scan bounds must be odd with L_min >= 3");
    }
    std::vector<size_t> sides;
    for (size_t L = L_min; L <= L_max; L += 2) {
        sides.push_back(L);
    }
    // Guard refusals surface before any work starts.
    ExhaustiveOptions ex;
    ex.force = options.force;
    for (size_t L : sides) {
        if (L <= exhaustive_up_to && L > ex.guard_max_side && !ex.force) {
            throw GuardRefusal("exhaustive distance at L=" + std::to_string(L) + " exceeds the guard; pass force");
        }
    }
    std::vector<CaScanRow> rows(sides.size());
    parallel_chunks(sides.size(), options.threads, [&](uint64_t begin, uint64_t end) {
        for (uint64_t j = begin; j < end; j++) {
            size_t L = sides[j];
            CaCode code(L);
            CaScanRow &row = rows[j];
            row.L = L;
            row.n = code.n();
            row.k = code.k();
            row.d_prime = single_seed_weight(L);
            if (L <= exhaustive_up_to) {
                row.d_exhaustive = exhaustive_distance(L, ex).distance;
            }
        }
    });
    return rows;
}

std::vector<TradeoffPoint> scan_ca(size_t L_min, size_t L_max, size_t exhaustive_up_to, const ScanOptions &options) {
    std::vector<TradeoffPoint> points;
    for (const auto &row : scan_ca_rows(L_min, L_max, exhaustive_up_to, options)) {
        points.push_back(row.to_point());
    }
    return points;
}

std::vector<TradeoffPoint> scan_surface(size_t d_max, size_t L_max, const SurfaceScanOptions &options) {
    if (d_max < 2 || L_max < 2) {
        throw ContractViolation("surface scan sizes must be at least 2");
    }
    std::vector<SurfaceLayout> layouts;
    for (size_t d = 2; d <= d_max; d++) {
        layouts.push_back({SurfaceKind::Planar, d});
    }
    for (size_t L = 2; L <= L_max; L++) {
        layouts.push_back({SurfaceKind::Toric, L});
    }
    std::vector<TradeoffPoint> base(layouts.size());
    parallel_chunks(layouts.size(), options.scan.threads, [&](uint64_t begin, uint64_t end) {
        for (uint64_t j = begin; j < end; j++) {
            StabilizerCode code = surface_code(layouts[j]);
            TradeoffPoint &p = base[j];
            p.family = layouts[j].kind == SurfaceKind::Planar ? "planar" : "toric";
            p.n = code.n();
            p.k = code.k();
            p.d = layouts[j].nominal_distance();
            MinDistanceOptions md;
            if (options.verify_distance && code.n() + code.k() <= md.guard) {
                p.d = min_distance_bruteforce(code, md).distance;
            }
        }
    });
    std::vector<TradeoffPoint> points = base;
    for (size_t j = 0; j < layouts.size(); j++) {
        if (layouts[j].kind != SurfaceKind::Planar) {
            continue;
        }
        for (size_t copies : options.copies) {
            TradeoffPoint p = base[j];
            p.family = "kcopies";
            p.n *= copies;
            p.k *= copies;
            points.push_back(p);
        }
    }
    return points;
}

std::string format_ratio(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

std::string points_to_csv(std::span<const TradeoffPoint> points) {
    std::ostringstream out;
    out << kPointsHeader << '\n';
    for (const auto &p : points) {
        out << p.family << ',' << p.n << ',' << p.k << ',' << p.d << ',' << (p.d_is_exact ? "true" : "false") << ','
            << format_ratio(p.q_ratio()) << ',' << format_ratio(p.c_ratio()) << '\n';
    }
    return out.str();
}

std::string points_to_json(std::span<const TradeoffPoint> points) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &p : points) {
        nlohmann::ordered_json j;
        j["family"] = p.family;
        j["n"] = p.n;
        j["k"] = p.k;
        j["d"] = p.d;
        j["d_is_exact"] = p.d_is_exact;
        j["q_ratio"] = std::stod(format_ratio(p.q_ratio()));
        j["c_ratio"] = std::stod(format_ratio(p.c_ratio()));
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::vector<TradeoffPoint> points_from_csv(std::string_view text) {
    auto lines = data_lines(text);
    if (lines.empty()) {
        throw ContractViolation("CSV input is empty (no header)");
    }
    bool ca_layout = lines.front() == kCaHeader;
    if (!ca_layout && lines.front() != kPointsHeader) {
        throw ContractViolation("unrecognized CSV header: " + std::string(lines.front()));
    }
    std::vector<TradeoffPoint> points;
    for (size_t li = 1; li < lines.size(); li++) {
        auto f = split_csv_line(lines[li]);
        if (f.size() != 7) {
            throw ContractViolation("CSV line " + std::to_string(li + 1) + " has " + std::to_string(f.size()) +
                                    " fields, expected 7");
        }
        if (ca_layout) {
            CaScanRow row;
            row.L = parse_uint(f[1], "L");
            row.n = parse_uint(f[2], "n");
            row.k = parse_uint(f[3], "k");
            row.d_prime = parse_uint(f[4], "d_prime");
            if (!f[5].empty()) {
                row.d_exhaustive = parse_uint(f[5], "d_exhaustive");
            }
            TradeoffPoint p = row.to_point();
            p.family = f[0];
            points.push_back(p);
        } else {
            TradeoffPoint p;
            p.family = f[0];
            p.n = parse_uint(f[1], "n");
            p.k = parse_uint(f[2], "k");
            p.d = parse_uint(f[3], "d");
            p.d_is_exact = parse_bool(f[4]);
            points.push_back(p);
        }
    }
    return points;
}

std::vector<TradeoffPoint> points_from_json(std::string_view text) {
    try {
        auto arr = nlohmann::json::parse(text);
        std::vector<TradeoffPoint> points;
        for (const auto &j : arr) {
            if (j.contains("d_prime")) {
                CaScanRow row;
                row.L = j.at("L").get<size_t>();
                row.n = j.at("n").get<uint64_t>();
                row.k = j.at("k").get<uint64_t>();
                row.d_prime = j.at("d_prime").get<uint64_t>();
                if (j.contains("d_exhaustive") && !j.at("d_exhaustive").is_null()) {
                    row.d_exhaustive = j.at("d_exhaustive").get<uint64_t>();
                }
                auto p = row.to_point();
                p.family = j.at("family").get<std::string>();
                points.push_back(p);
                continue;
            }
            TradeoffPoint p;
            p.family = j.at("family").get<std::string>();
            p.n = j.at("n").get<uint64_t>();
            p.k = j.at("k").get<uint64_t>();
            p.d = j.at("d").get<uint64_t>();
            p.d_is_exact = j.at("d_is_exact").get<bool>();
            points.push_back(p);
        }
        return points;
    } catch (const nlohmann::json::exception &e) {
        throw ContractViolation(std::string("malformed points JSON: ") + e.what());
    }
}

std::string ca_rows_to_csv(std::span<const CaScanRow> rows) {
    std::ostringstream out;
    out << kCaHeader << '\n';
    for (const auto &r : rows) {
        out << "ca," << r.L << ',' << r.n << ',' << r.k << ',' << r.d_prime << ',';
        if (r.d_exhaustive) {
            out << *r.d_exhaustive;
        }
        out << ',' << format_ratio(r.ratio_ksqrtd_over_n()) << '\n';
    }
    return out.str();
}

std::string ca_rows_to_json(std::span<const CaScanRow> rows) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json j;
        j["family"] = "ca";
        j["L"] = r.L;
        j["n"] = r.n;
        j["k"] = r.k;
        j["d_prime"] = r.d_prime;
        j["d_exhaustive"] = r.d_exhaustive ? nlohmann::ordered_json(*r.d_exhaustive) : nlohmann::ordered_json();
        j["ratio_ksqrtd_over_n"] = std::stod(format_ratio(r.ratio_ksqrtd_over_n()));
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

std::string reports_to_csv(std::span<const BoundReport> reports) {
    std::ostringstream out;
    out << "family,which,points,max_q_ratio,max_c_ratio,slope,intercept,rms_residual,grows\n";
    for (const auto &r : reports) {
        out << r.family << ',' << bound_kind_name(r.kind) << ',' << r.num_points << ',' << format_ratio(r.max_q_ratio)
            << ',' << format_ratio(r.max_c_ratio) << ',';
        if (r.fit) {
            out << format_ratio(r.fit->slope) << ',' << format_ratio(r.fit->intercept) << ','
                << format_ratio(r.fit->rms_residual);
        } else {
            out << ",,";
        }
        out << ',' << (r.grows ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string reports_to_json(std::span<const BoundReport> reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &r : reports) {
        nlohmann::ordered_json j;
        j["family"] = r.family;
        j["which"] = bound_kind_name(r.kind);
        j["points"] = r.num_points;
        j["max_q_ratio"] = std::stod(format_ratio(r.max_q_ratio));
        j["max_c_ratio"] = std::stod(format_ratio(r.max_c_ratio));
        if (r.fit) {
            j["slope"] = std::stod(format_ratio(r.fit->slope));
            j["intercept"] = std::stod(format_ratio(r.fit->intercept));
            j["rms_residual"] = std::stod(format_ratio(r.fit->rms_residual));
        } else {
            j["slope"] = nullptr;
            j["intercept"] = nullptr;
            j["rms_residual"] = nullptr;
        }
        j["grows"] = r.grows;
        arr.push_back(std::move(j));
    }
    return arr.dump(2) + "\n";
}

void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing: " + std::strerror(errno));
    }
    out << content;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "' for reading: " + std::strerror(errno));
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace geocodes
