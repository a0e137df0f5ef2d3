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

// geocodes: command-line front end for the code constructions, searches and checks.
//
// Exit status: 0 on success, 1 on invalid input or a failed check, 2 when an enumeration guard
// refuses to run (rerun with --force).

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "geocodes/cacode.h"
#include "geocodes/errors.h"
#include "geocodes/lattice.h"
#include "geocodes/stabilizer.h"
#include "geocodes/surface.h"
#include "geocodes/tradeoff.h"
#include "json.hpp"

namespace {

using namespace geocodes;
using Json = nlohmann::ordered_json;

struct Globals {
    std::string out;
    std::string format = "csv";
    size_t threads = 1;
    bool force = false;

    bool json() const {
        return format == "json";
    }
};

void emit(const Globals &g, const std::string &text) {
    if (g.out.empty()) {
        std::cout << text;
    } else {
        write_text_file(g.out, text);
    }
}

// Renders a list of flat records as CSV (header from the first record's keys) or a JSON array.
std::string render_records(const Globals &g, const std::vector<Json> &records, const std::vector<std::string> &columns) {
    if (g.json()) {
        return Json(records).dump(2) + "\n";
    }
    std::ostringstream out;
    for (size_t i = 0; i < columns.size(); i++) {
        out << (i ? "," : "") << columns[i];
    }
    out << "\n";
    for (const auto &r : records) {
        for (size_t i = 0; i < columns.size(); i++) {
            out << (i ? "," : "");
            const auto &v = r.at(columns[i]);
            if (v.is_string()) {
                out << v.get<std::string>();
            } else if (v.is_null()) {
            } else if (v.is_number_float()) {
                out << format_ratio(v.get<double>());
            } else {
                out << v.dump();
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string join(std::span<const size_t> values) {
    std::string s;
    for (size_t i = 0; i < values.size(); i++) {
        s += (i ? " " : "") + std::to_string(values[i]);
    }
    return s;
}

void run_ca_rows(const Globals &g, size_t L_min, size_t L_max, size_t exhaustive_up_to) {
    ScanOptions opts{g.threads, g.force};
    auto rows = scan_ca_rows(L_min, L_max, exhaustive_up_to, opts);
    emit(g, g.json() ? ca_rows_to_json(rows) : ca_rows_to_csv(rows));
}

void run_sierpinski(const Globals &g, unsigned p) {
    std::vector<Json> records;
    for (unsigned q = 0; q <= p; q++) {
        Json j;
        j["p"] = q;
        j["weight"] = sierpinski_weight(q).str();
        BigInt power = boost::multiprecision::pow(BigInt(3), q);
        j["equals_power_of_3"] = sierpinski_weight(q) == power;
        records.push_back(std::move(j));
    }
    emit(g, render_records(g, records, {"p", "weight", "equals_power_of_3"}));
}

void run_surface(const Globals &g, const std::string &kind, size_t size, bool verify, const std::string &code_out) {
    SurfaceLayout layout{parse_surface_kind(kind), size};
    auto code = surface_code(layout);
    TradeoffPoint p;
    p.family = layout.kind == SurfaceKind::Planar ? "planar" : "toric";
    p.n = code.n();
    p.k = code.k();
    p.d = layout.nominal_distance();
    if (verify) {
        MinDistanceOptions opts;
        opts.threads = g.threads;
        opts.force = g.force;
        p.d = min_distance_bruteforce(code, opts).distance;
    }
    if (!code_out.empty()) {
        write_text_file(code_out, code_to_json(code));
    }
    std::vector<TradeoffPoint> points = {p};
    emit(g, g.json() ? points_to_json(points) : points_to_csv(points));
}

void run_entropy(const Globals &g, const std::string &code_file, const std::string &region_file) {
    auto code = code_from_json(read_text_file(code_file));
    auto region = region_from_json(read_text_file(region_file));
    if (!(region.lattice() == code.lattice())) {
        throw ContractViolation("region lattice does not match the code lattice");
    }
    auto qubits = code.qubits_in(region);
    auto r = entropy_report(code, qubits);
    Json j;
    j["qubits"] = join(r.qubits);
    j["size"] = r.qubits.size();
    j["s_region"] = r.s_region;
    j["s_complement"] = r.s_complement;
    j["s_total"] = r.s_total;
    j["s_conditional"] = r.s_conditional;
    j["correctable"] = r.correctable;
    emit(g, render_records(g, {j}, {"qubits", "size", "s_region", "s_complement", "s_total", "s_conditional", "correctable"}));
}

bool run_fact1(const Globals &g, const std::string &code_file, size_t max_size) {
    auto code = code_from_json(read_text_file(code_file));
    std::vector<size_t> chosen;
    size_t regions = 0, correctable = 0, violations = 0;
    std::string first_violation;
    auto rec = [&](auto &&self, size_t next) -> void {
        auto r = verify_fact1(code, chosen);
        regions++;
        correctable += r.correctable;
        if (!r.holds) {
            if (violations++ == 0) {
                first_violation = join(chosen);
            }
        }
        if (chosen.size() == max_size) {
            return;
        }
        for (size_t q = next; q < code.n(); q++) {
            chosen.push_back(q);
            self(self, q + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    Json j;
    j["n"] = code.n();
    j["k"] = code.k();
    j["max_region_size"] = max_size;
    j["regions"] = regions;
    j["correctable"] = correctable;
    j["violations"] = violations;
    j["first_violation"] = first_violation;
    emit(g, render_records(g, {j}, {"n", "k", "max_region_size", "regions", "correctable", "violations", "first_violation"}));
    return violations == 0;
}

void run_partition(const Globals &g, size_t side, size_t R, size_t w) {
    Lattice lat(side, side);
    auto p = abc_partition(lat, R, w);
    auto report = verify_window_property(p, w);
    Json j;
    j["side"] = side;
    j["R"] = R;
    j["w"] = w;
    j["a_sites"] = p.a.size();
    j["b_sites"] = p.b.size();
    j["c_sites"] = p.c.size();
    j["a_blocks"] = p.a_blocks.size();
    j["b_blocks"] = p.b_blocks.size();
    j["windows_scanned"] = report.windows_scanned;
    j["window_property"] = report.pass;
    j["c_count_bound"] = p.c.size() * R * R <= 16 * w * w * lat.num_sites();
    if (g.json()) {
        j["a"] = Json::parse(region_to_json(p.a));
        j["b"] = Json::parse(region_to_json(p.b));
        j["c"] = Json::parse(region_to_json(p.c));
    }
    emit(g, render_records(g, {j},
                           {"side", "R", "w", "a_sites", "b_sites", "c_sites", "a_blocks", "b_blocks", "windows_scanned",
                            "window_property", "c_count_bound"}));
}

// The regions file is either {"m1": <region>, "m2": <region>} or a two-element array of regions.
bool run_union(const Globals &g, const std::string &code_file, const std::string &regions_file) {
    auto code = code_from_json(read_text_file(code_file));
    Json doc;
    try {
        doc = Json::parse(read_text_file(regions_file));
    } catch (const Json::exception &e) {
        throw ContractViolation("regions file: " + std::string(e.what()));
    }
    Json a, b;
    if (doc.is_array() && doc.size() == 2) {
        a = doc[0];
        b = doc[1];
    } else if (doc.is_object() && doc.contains("m1") && doc.contains("m2")) {
        a = doc["m1"];
        b = doc["m2"];
    } else {
        throw ContractViolation("regions file must hold two regions ({\"m1\", \"m2\"} or a 2-element array)");
    }
    auto m1 = region_from_json(a.dump());
    auto m2 = region_from_json(b.dump());
    auto r = union_lemma_check(code, m1, m2);
    const char *status = r.status == UnionStatus::Verified ? "verified" : r.status == UnionStatus::Violated ? "violated" : "skipped";
    Json j;
    j["status"] = status;
    j["union_correctable"] = r.union_correctable;
    j["reason"] = r.reason;
    emit(g, render_records(g, {j}, {"status", "union_correctable", "reason"}));
    return r.status != UnionStatus::Violated;
}

void run_bounds(const Globals &g, const std::string &in, const std::string &which) {
    auto kind = parse_bound_kind(which);
    auto text = read_text_file(in);
    auto first = text.find_first_not_of(" \t\r\n");
    bool is_json = first != std::string::npos && (text[first] == '[' || text[first] == '{');
    auto points = is_json ? points_from_json(text) : points_from_csv(text);
    auto reports = check_bound(points, kind);
    emit(g, g.json() ? reports_to_json(reports) : reports_to_csv(reports));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"geocodes: local codes on 2D lattices"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--out", g.out, "Write output to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--threads", g.threads, "Worker threads for enumerations")->check(CLI::Range(1, 1024));
    app.add_flag("--force", g.force, "Run enumerations past their size guard");
    app.fallthrough();

    size_t L = 0, L_min = 0, L_max = 0, up_to = 0, size = 0, side = 0, R = 0, w = 0, max_region = 2;
    unsigned p = 0;
    std::string kind, code_file, region_file, regions_file, in, which, code_out;
    bool verify_distance = false;
    bool check_ok = true;

    auto *ca_distance = app.add_subcommand("ca-distance", "Exhaustive distance and single-seed weight of the CA code");
    ca_distance->add_option("--L", L, "Odd side length")->required();
    auto *ca_seed = app.add_subcommand("ca-seed-weight", "Single-seed codeword weight d'");
    ca_seed->add_option("--L", L, "Odd side length")->required();
    auto *ca_scan = app.add_subcommand("ca-scan", "Scan odd L, exhaustive distance up to a size");
    ca_scan->add_option("--min", L_min, "Smallest odd L")->required();
    ca_scan->add_option("--max", L_max, "Largest odd L")->required();
    ca_scan->add_option("--exhaustive-up-to", up_to, "Exhaustive search for L up to this value");
    auto *sierpinski = app.add_subcommand("sierpinski", "Sierpinski triangle weights for levels 0..p");
    sierpinski->add_option("--p", p, "Largest level")->required();
    auto *surface = app.add_subcommand("surface", "Planar or toric surface code parameters");
    surface->add_option("--kind", kind, "planar or toric")->required();
    surface->add_option("--size", size, "Distance d (planar) or side L (toric)")->required();
    surface->add_flag("--verify-distance", verify_distance, "Brute-force the distance");
    surface->add_option("--code-out", code_out, "Also write the code as JSON");
    auto *entropy = app.add_subcommand("entropy", "Entropies of a region of a code");
    entropy->add_option("--code-file", code_file, "Code JSON")->required();
    entropy->add_option("--region-file", region_file, "Region JSON")->required();
    auto *fact1 = app.add_subcommand("fact1", "Check S(M|Mc) = -S(M) on every correctable small region");
    fact1->add_option("--code-file", code_file, "Code JSON")->required();
    fact1->add_option("--max-region-size", max_region, "Largest region size enumerated");
    auto *partition = app.add_subcommand("partition-abc", "Build and check an ABC partition of a square lattice");
    partition->add_option("--side", side, "Lattice side")->required();
    partition->add_option("--R", R, "Block size")->required();
    partition->add_option("--w", w, "Interaction range")->required();
    auto *union_check = app.add_subcommand("union-check", "Correctability of the union of two separated regions");
    union_check->add_option("--code-file", code_file, "Code JSON")->required();
    union_check->add_option("--regions-file", regions_file, "JSON with two regions")->required();
    auto *bounds = app.add_subcommand("bounds", "Bound ratios and growth fits per family");
    bounds->add_option("--in", in, "Points CSV or JSON")->required();
    bounds->add_option("--which", which, "quantum or classical")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (ca_distance->parsed()) {
            run_ca_rows(g, L, L, L);
        } else if (ca_seed->parsed()) {
            run_ca_rows(g, L, L, 0);
        } else if (ca_scan->parsed()) {
            run_ca_rows(g, L_min, L_max, up_to);
        } else if (sierpinski->parsed()) {
            run_sierpinski(g, p);
        } else if (surface->parsed()) {
            run_surface(g, kind, size, verify_distance, code_out);
        } else if (entropy->parsed()) {
            run_entropy(g, code_file, region_file);
        } else if (fact1->parsed()) {
            check_ok = run_fact1(g, code_file, max_region);
        } else if (partition->parsed()) {
            run_partition(g, side, R, w);
        } else if (union_check->parsed()) {
            check_ok = run_union(g, code_file, regions_file);
        } else if (bounds->parsed()) {
            run_bounds(g, in, which);
        }
    } catch (const GuardRefusal &e) {
        std::cerr << "geocodes: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "geocodes: " << e.what() << "\n";
        return 1;
    }
    return check_ok ? 0 : 1;
}
