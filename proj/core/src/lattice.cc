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

#include "geocodes/lattice.h"

#include <algorithm>
#include "json.hpp"

#include "geocodes/errors.h"

namespace geocodes {

Lattice::Lattice(size_t width, size_t height, bool periodic_x, bool periodic_y)
    : width(width), height(height), periodic_x(periodic_x), periodic_y(periodic_y) {
    if (width == 0 || height == 0) {
        throw ContractViolation("lattice dimensions must be at least 1");
    }
}

Region::Region(const Lattice &lattice) : lattice_(lattice) {
}

Region::Region(const Lattice &lattice, std::vector<size_t> sites) : lattice_(lattice), sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    sites_.erase(std::unique(sites_.begin(), sites_.end()), sites_.end());
    if (!sites_.empty() && sites_.back() >= lattice_.num_sites()) {
        throw ContractViolation(
            "site " + std::to_string(sites_.back()) + " is outside a lattice of " +
            std::to_string(lattice_.num_sites()) + " sites");
    }
}

Region Region::full(const Lattice &lattice) {
    std::vector<size_t> all(lattice.num_sites());
    for (size_t k = 0; k < all.size(); k++) {
        all[k] = k;
    }
    return Region(lattice, std::move(all));
}

Region Region::rectangle(const Lattice &lattice, size_t row0, size_t col0, size_t row1, size_t col1) {
    std::vector<size_t> sites;
    for (size_t r = row0; r < std::min(row1, lattice.height); r++) {
        for (size_t c = col0; c < std::min(col1, lattice.width); c++) {
            sites.push_back(lattice.site(r, c));
        }
    }
    return Region(lattice, std::move(sites));
}

bool Region::contains(size_t site) const {
    return std::binary_search(sites_.begin(), sites_.end(), site);
}

std::vector<bool> Region::mask() const {
    std::vector<bool> result(lattice_.num_sites(), false);
    for (size_t s : sites_) {
        result[s] = true;
    }
    return result;
}

Region Region::complement() const {
    std::vector<size_t> out;
    out.reserve(lattice_.num_sites() - sites_.size());
    auto it = sites_.begin();
    for (size_t s = 0; s < lattice_.num_sites(); s++) {
        if (it != sites_.end() && *it == s) {
            ++it;
        } else {
            out.push_back(s);
        }
    }
    return Region(lattice_, std::move(out));
}

Region Region::united(const Region &other) const {
    std::vector<size_t> out;
    std::set_union(sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(), std::back_inserter(out));
    return Region(lattice_, std::move(out));
}

Region Region::intersected(const Region &other) const {
    std::vector<size_t> out;
    std::set_intersection(
        sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(), std::back_inserter(out));
    return Region(lattice_, std::move(out));
}

Region Region::minus(const Region &other) const {
    std::vector<size_t> out;
    std::set_difference(
        sites_.begin(), sites_.end(), other.sites_.begin(), other.sites_.end(), std::back_inserter(out));
    return Region(lattice_, std::move(out));
}

Region boundary_plus(const Region &m, size_t w) {
    if (w == 0) {
        throw ContractViolation("interaction range w must be at least 1");
    }
    const Lattice &lat = m.lattice();
    auto inside = m.mask();
    std::vector<bool> hit(lat.num_sites(), false);
    for_each_window(lat, w, [&](size_t, size_t, std::span<const size_t> cover) {
        bool touches = std::any_of(cover.begin(), cover.end(), [&](size_t s) { return inside[s]; });
        if (touches) {
            for (size_t s : cover) {
                if (!inside[s]) {
                    hit[s] = true;
                }
            }
        }
    });
    std::vector<size_t> sites;
    for (size_t s = 0; s < hit.size(); s++) {
        if (hit[s]) {
            sites.push_back(s);
        }
    }
    return Region(lat, std::move(sites));
}

Region boundary_minus(const Region &m, size_t w) {
    return boundary_plus(m.complement(), w);
}

Region boundary(const Region &m, size_t w) {
    return boundary_plus(m, w).united(boundary_minus(m, w));
}

namespace {

// Number of consecutive positions needed to cover every occupied coordinate on one axis.
size_t axis_extent(std::vector<size_t> coords, size_t extent, bool periodic) {
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    if (coords.empty()) {
        return 0;
    }
    if (!periodic) {
        return coords.back() - coords.front() + 1;
    }
    size_t max_gap = coords.front() + extent - coords.back();
    for (size_t k = 1; k < coords.size(); k++) {
        max_gap = std::max(max_gap, coords[k] - coords[k - 1]);
    }
    return extent - max_gap + 1;
}

}  // namespace

bool fits_in_window(const Lattice &lattice, std::span<const size_t> sites, size_t w) {
    std::vector<size_t> rows, cols;
    for (size_t s : sites) {
        rows.push_back(lattice.row_of(s));
        cols.push_back(lattice.col_of(s));
    }
    return axis_extent(rows, lattice.height, lattice.periodic_y) <= w &&
           axis_extent(cols, lattice.width, lattice.periodic_x) <= w;
}

bool window_separated(const Region &a, const Region &b, size_t w) {
    auto in_a = a.mask();
    auto in_b = b.mask();
    bool separated = true;
    for_each_window(a.lattice(), w, [&](size_t, size_t, std::span<const size_t> cover) {
        bool ha = false, hb = false;
        for (size_t s : cover) {
            ha |= in_a[s];
            hb |= in_b[s];
        }
        if (ha && hb) {
            separated = false;
        }
    });
    return separated;
}

PartitionABC abc_partition(const Lattice &lattice, size_t block_size, size_t w, size_t origin_row, size_t origin_col) {
    if (w == 0) {
        throw ContractViolation("interaction range w must be at least 1");
    }
    if (block_size <= 2 * w) {
        throw ContractViolation(
            "abc_partition needs block size R > 2w (got R=" + std::to_string(block_size) +
            ", w=" + std::to_string(w) + "); corner cut-outs would swallow whole blocks");
    }
    if ((origin_row % lattice.height != 0 && !lattice.periodic_y) ||
        (origin_col % lattice.width != 0 && !lattice.periodic_x)) {
        throw ContractViolation("a shifted tiling origin requires a periodic axis");
    }
    const size_t R = block_size;
    const size_t H = lattice.height;
    const size_t W = lattice.width;
    const size_t cells_r = (H + R - 1) / R;
    const size_t cells_c = (W + R - 1) / R;
    origin_row %= H;
    origin_col %= W;

    // A periodic axis that closes into an even number of whole cells also has a junction at the seam.
    auto wraps = [&](size_t extent, bool periodic, size_t cells) {
        return periodic && extent % R == 0 && cells % 2 == 0;
    };
    const bool wrap_r = wraps(H, lattice.periodic_y, cells_r);
    const bool wrap_c = wraps(W, lattice.periodic_x, cells_c);
    auto in_junction_band = [&](size_t x, size_t cells, bool wrap) {
        if (wrap) {
            size_t off = x % R;
            return off < w || off + w >= R;
        }
        size_t j = (x + w) / R;
        return j >= 1 && j < cells && x + w >= j * R && x < j * R + w;
    };

    std::vector<std::vector<size_t>> cell_sites(cells_r * cells_c);
    std::vector<size_t> c_sites;
    for (size_t r = 0; r < H; r++) {
        size_t sr = (r + H - origin_row) % H;
        for (size_t c = 0; c < W; c++) {
            size_t sc = (c + W - origin_col) % W;
            size_t s = lattice.site(r, c);
            if (in_junction_band(sr, cells_r, wrap_r) && in_junction_band(sc, cells_c, wrap_c)) {
                c_sites.push_back(s);
            } else {
                cell_sites[(sr / R) * cells_c + sc / R].push_back(s);
            }
        }
    }

    PartitionABC result;
    result.block_size = R;
    result.interaction_range = w;
    std::vector<size_t> a_all, b_all;
    for (size_t i = 0; i < cells_r; i++) {
        for (size_t j = 0; j < cells_c; j++) {
            auto &sites = cell_sites[i * cells_c + j];
            if (sites.empty()) {
                continue;
            }
            bool is_a = (i + j) % 2 == 0;
            auto &all = is_a ? a_all : b_all;
            all.insert(all.end(), sites.begin(), sites.end());
            (is_a ? result.a_blocks : result.b_blocks).emplace_back(lattice, std::move(sites));
        }
    }
    result.a = Region(lattice, std::move(a_all));
    result.b = Region(lattice, std::move(b_all));
    result.c = Region(lattice, std::move(c_sites));
    return result;
}

ClassicalPartition classical_partition(const Lattice &lattice, size_t block_size, size_t w) {
    if (block_size == 0 || w == 0) {
        throw ContractViolation("classical_partition needs b >= 1 and w >= 1");
    }
    const size_t period = block_size + w;
    const size_t blocks_r = (lattice.height + period - 1) / period;
    const size_t blocks_c = (lattice.width + period - 1) / period;
    std::vector<std::vector<size_t>> block_sites(blocks_r * blocks_c);
    std::vector<size_t> a_sites;
    for (size_t r = 0; r < lattice.height; r++) {
        for (size_t c = 0; c < lattice.width; c++) {
            size_t s = lattice.site(r, c);
            if (r % period < block_size && c % period < block_size) {
                block_sites[(r / period) * blocks_c + c / period].push_back(s);
            } else {
                a_sites.push_back(s);
            }
        }
    }
    ClassicalPartition result;
    result.block_size = block_size;
    result.interaction_range = w;
    result.a = Region(lattice, std::move(a_sites));
    for (auto &sites : block_sites) {
        if (!sites.empty()) {
            result.blocks.emplace_back(lattice, std::move(sites));
        }
    }
    return result;
}

WindowReport verify_window_property(const Lattice &lattice, std::span<const std::vector<Region>> groups, size_t w) {
    if (w == 0) {
        throw ContractViolation("interaction range w must be at least 1");
    }
    constexpr size_t kNone = SIZE_MAX;
    std::vector<std::vector<size_t>> labels;
    for (const auto &group : groups) {
        std::vector<size_t> label(lattice.num_sites(), kNone);
        for (size_t k = 0; k < group.size(); k++) {
            for (size_t s : group[k].sites()) {
                label[s] = k;
            }
        }
        labels.push_back(std::move(label));
    }

    WindowReport report;
    for_each_window(lattice, w, [&](size_t r0, size_t c0, std::span<const size_t> cover) {
        report.windows_scanned++;
        if (!report.pass) {
            return;
        }
        for (size_t g = 0; g < labels.size(); g++) {
            size_t seen = kNone;
            for (size_t s : cover) {
                size_t l = labels[g][s];
                if (l == kNone) {
                    continue;
                }
                if (seen == kNone) {
                    seen = l;
                } else if (seen != l) {
                    report.pass = false;
                    report.first_violation = std::pair{r0, c0};
                    report.detail = "window at row " + std::to_string(r0) + ", col " + std::to_string(c0) +
                                    " meets blocks " + std::to_string(seen) + " and " + std::to_string(l) +
                                    " of group " + std::to_string(g);
                    return;
                }
            }
        }
    });
    return report;
}

WindowReport verify_window_property(const PartitionABC &partition, size_t w) {
    std::vector<Region> groups[2] = {partition.a_blocks, partition.b_blocks};
    return verify_window_property(partition.a.lattice(), groups, w);
}

WindowReport verify_window_property(const ClassicalPartition &partition, size_t w) {
    std::vector<Region> groups[1] = {partition.blocks};
    return verify_window_property(partition.a.lattice(), groups, w);
}

std::string region_to_json(const Region &region) {
    const Lattice &lat = region.lattice();
    nlohmann::ordered_json j;
    j["width"] = lat.width;
    j["height"] = lat.height;
    j["periodic_x"] = lat.periodic_x;
    j["periodic_y"] = lat.periodic_y;
    j["sites"] = std::vector<size_t>(region.sites().begin(), region.sites().end());
    return j.dump();
}

Region region_from_json(std::string_view text) {
    try {
        auto j = nlohmann::json::parse(text);
        Lattice lat(
            j.at("width").get<size_t>(), j.at("height").get<size_t>(), j.value("periodic_x", false),
            j.value("periodic_y", false));
        return Region(lat, j.at("sites").get<std::vector<size_t>>());
    } catch (const nlohmann::json::exception &e) {
        throw ContractViolation(std::string("malformed region JSON: ") + e.what());
    }
}

}  // namespace geocodes
