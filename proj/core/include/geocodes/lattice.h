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

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace geocodes {

/// A rectangular grid of sites, optionally periodic along each axis. Site index = row * width + col.
struct Lattice {
    size_t width = 1;
    size_t height = 1;
    bool periodic_x = false;
    bool periodic_y = false;

    Lattice() = default;
    Lattice(size_t width, size_t height, bool periodic_x = false, bool periodic_y = false);

    size_t num_sites() const {
        return width * height;
    }
    size_t site(size_t row, size_t col) const {
        return row * width + col;
    }
    size_t row_of(size_t site) const {
        return site / width;
    }
    size_t col_of(size_t site) const {
        return site % width;
    }

    bool operator==(const Lattice &other) const = default;
};

/// A set of sites on a lattice. Sites are kept sorted and unique.
class Region {
   public:
    Region() = default;
    explicit Region(const Lattice &lattice);
    /// Throws ContractViolation if any site is out of range. Duplicates are merged.
    Region(const Lattice &lattice, std::vector<size_t> sites);

    static Region full(const Lattice &lattice);
    /// All sites (row, col) with row in [row0, row1) and col in [col0, col1), clipped to the lattice.
    static Region rectangle(const Lattice &lattice, size_t row0, size_t col0, size_t row1, size_t col1);

    const Lattice &lattice() const {
        return lattice_;
    }
    std::span<const size_t> sites() const {
        return sites_;
    }
    size_t size() const {
        return sites_.size();
    }
    bool empty() const {
        return sites_.empty();
    }
    bool contains(size_t site) const;

    Region complement() const;
    Region united(const Region &other) const;
    Region intersected(const Region &other) const;
    Region minus(const Region &other) const;
    /// Membership as a dense flag per lattice site.
    std::vector<bool> mask() const;

    bool operator==(const Region &other) const = default;

   private:
    Lattice lattice_;
    std::vector<size_t> sites_;
};

/// Visits every axis-aligned w x w window once, passing the sites it covers.
///
/// Along an open axis the windows are the placements that fit inside the lattice (a window wider than
/// the axis is clamped to the full axis). Along a periodic axis every offset is a window, wrapping
/// around the seam.
template <typename Fn>
void for_each_window(const Lattice &lattice, size_t w, Fn &&visit);

/// Sites outside M that share some w x w window with a site of M.
Region boundary_plus(const Region &m, size_t w);
/// Sites of M that share some w x w window with a site outside M.
Region boundary_minus(const Region &m, size_t w);
/// Union of the external and internal boundaries.
Region boundary(const Region &m, size_t w);

/// True if some w x w window contains every listed site.
bool fits_in_window(const Lattice &lattice, std::span<const size_t> sites, size_t w);
/// True if no w x w window meets both regions.
bool window_separated(const Region &a, const Region &b, size_t w);

/// Three-way split of a lattice into block regions A, B and a separator C.
///
/// A and B are the checkerboard colour classes of an R x R tiling; C collects the 2w x 2w squares cut
/// out around every interior four-cell junction.
struct PartitionABC {
    Region a;
    Region b;
    Region c;
    std::vector<Region> a_blocks;
    std::vector<Region> b_blocks;
    size_t block_size = 0;
    size_t interaction_range = 0;
};

/// Builds the checkerboard partition. Throws ContractViolation unless block_size > 2 * w.
///
/// The tiling starts at (origin_row, origin_col); non-zero origins are only accepted along periodic
/// axes, where they shift the tiling around the torus. A periodic axis whose length is an even
/// multiple of R gets cut-outs at the seam junctions as well.
PartitionABC abc_partition(
    const Lattice &lattice, size_t block_size, size_t w, size_t origin_row = 0, size_t origin_col = 0);

/// A grid of b x b blocks separated by w-wide strips, and the complement A of the blocks.
struct ClassicalPartition {
    Region a;
    std::vector<Region> blocks;
    size_t block_size = 0;
    size_t interaction_range = 0;
};

/// Blocks start at multiples of (b + w) along both axes; blocks overhanging the far edge are clipped.
ClassicalPartition classical_partition(const Lattice &lattice, size_t block_size, size_t w);

struct WindowReport {
    bool pass = true;
    size_t windows_scanned = 0;
    /// Top-left corner (row, col) of the first window touching two blocks of the same group.
    std::optional<std::pair<size_t, size_t>> first_violation;
    std::string detail;
};

/// Scans every w x w window and checks it meets at most one block from each group.
WindowReport verify_window_property(const Lattice &lattice, std::span<const std::vector<Region>> groups, size_t w);
WindowReport verify_window_property(const PartitionABC &partition, size_t w);
WindowReport verify_window_property(const ClassicalPartition &partition, size_t w);

std::string region_to_json(const Region &region);
/// Throws ContractViolation on malformed input.
Region region_from_json(std::string_view text);

// --------------------------------------------------------------------------------------------------

template <typename Fn>
void for_each_window(const Lattice &lattice, size_t w, Fn &&visit) {
    auto starts = [](size_t extent, bool periodic, size_t span) {
        size_t count = periodic ? (span >= extent ? 1 : extent) : (span >= extent ? 1 : extent - span + 1);
        return count;
    };
    size_t wr = std::min(w, lattice.height);
    size_t wc = std::min(w, lattice.width);
    size_t num_r = starts(lattice.height, lattice.periodic_y, w);
    size_t num_c = starts(lattice.width, lattice.periodic_x, w);
    std::vector<size_t> cover;
    cover.reserve(wr * wc);
    for (size_t r0 = 0; r0 < num_r; r0++) {
        for (size_t c0 = 0; c0 < num_c; c0++) {
            cover.clear();
            for (size_t dr = 0; dr < wr; dr++) {
                size_t r = (r0 + dr) % lattice.height;
                for (size_t dc = 0; dc < wc; dc++) {
                    size_t c = (c0 + dc) % lattice.width;
                    cover.push_back(lattice.site(r, c));
                }
            }
            visit(r0, c0, std::span<const size_t>(cover));
        }
    }
}

}  // namespace geocodes
