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

#include "geocodes/surface.h"

#include <string>

#include "geocodes/errors.h"

namespace geocodes {

namespace {

struct SiteCheck {
    size_t row, col;
    bool x_type;
};

// Builds generators from check positions on the refined grid; each check acts on its four
// (or, at a planar boundary, three) edge neighbours.
StabilizerCode build_refined(const Lattice &lattice, bool (*is_qubit)(size_t, size_t), const std::vector<SiteCheck> &checks) {
    std::vector<size_t> qubit_of_site(lattice.num_sites(), SIZE_MAX);
    std::vector<size_t> site_of_qubit;
    for (size_t r = 0; r < lattice.height; r++) {
        for (size_t c = 0; c < lattice.width; c++) {
            if (is_qubit(r, c)) {
                qubit_of_site[lattice.site(r, c)] = site_of_qubit.size();
                site_of_qubit.push_back(lattice.site(r, c));
            }
        }
    }
    const size_t n = site_of_qubit.size();
    BitMatrix gens(0, 2 * n);
    const long H = static_cast<long>(lattice.height);
    const long W = static_cast<long>(lattice.width);
    const long offsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (const auto &check : checks) {
        BitVec g(2 * n);
        for (const auto &off : offsets) {
            long r = static_cast<long>(check.row) + off[0];
            long c = static_cast<long>(check.col) + off[1];
            if (lattice.periodic_y) {
                r = (r + H) % H;
            }
            if (lattice.periodic_x) {
                c = (c + W) % W;
            }
            if (r < 0 || r >= H || c < 0 || c >= W) {
                continue;
            }
            size_t q = qubit_of_site[lattice.site(static_cast<size_t>(r), static_cast<size_t>(c))];
            if (q == SIZE_MAX) {
                continue;
            }
            g.set(check.x_type ? q : n + q, true);
        }
        gens.push_row(std::move(g));
    }
    return StabilizerCode(std::move(gens), lattice, std::move(site_of_qubit), kSurfaceCheckWindow);
}

}  // namespace

SurfaceKind parse_surface_kind(std::string_view text) {
    if (text == "planar") {
        return SurfaceKind::Planar;
    }
    if (text == "toric") {
        return SurfaceKind::Toric;
    }
    throw ContractViolation("unknown surface code kind '" + std::string(text) + "' (expected planar or toric)");
}

size_t SurfaceLayout::num_qubits() const {
    return kind == SurfaceKind::Planar ? size * size + (size - 1) * (size - 1) : 2 * size * size;
}

size_t SurfaceLayout::nominal_k() const {
    return kind == SurfaceKind::Planar ? 1 : 2;
}

Lattice SurfaceLayout::refined_lattice() const {
    if (kind == SurfaceKind::Planar) {
        return Lattice(2 * size - 1, 2 * size - 1, false, false);
    }
    return Lattice(2 * size, 2 * size, true, true);
}

StabilizerCode planar_surface_code(size_t d) {
    if (d < 2) {
        throw ContractViolation("planar surface code needs d >= 2, got d=" + std::to_string(d));
    }
    Lattice lattice = SurfaceLayout{SurfaceKind::Planar, d}.refined_lattice();
    std::vector<SiteCheck> checks;
    for (size_t r = 0; r < lattice.height; r++) {
        for (size_t c = 0; c < lattice.width; c++) {
            if (r % 2 == 1 && c % 2 == 0) {
                checks.push_back({r, c, true});
            } else if (r % 2 == 0 && c % 2 == 1) {
                checks.push_back({r, c, false});
            }
        }
    }
    return build_refined(lattice, [](size_t r, size_t c) { return (r + c) % 2 == 0; }, checks);
}

StabilizerCode toric_code(size_t L) {
    if (L < 2) {
        throw ContractViolation("toric code needs L >= 2, got L=" + std::to_string(L));
    }
    Lattice lattice = SurfaceLayout{SurfaceKind::Toric, L}.refined_lattice();
    std::vector<SiteCheck> checks;
    for (size_t r = 0; r < lattice.height; r++) {
        for (size_t c = 0; c < lattice.width; c++) {
            if (r % 2 == 0 && c % 2 == 0) {
                checks.push_back({r, c, true});
            } else if (r % 2 == 1 && c % 2 == 1) {
                checks.push_back({r, c, false});
            }
        }
    }
    return build_refined(lattice, [](size_t r, size_t c) { return (r + c) % 2 == 1; }, checks);
}

StabilizerCode surface_code(const SurfaceLayout &layout) {
    return layout.kind == SurfaceKind::Planar ? planar_surface_code(layout.size) : toric_code(layout.size);
}

TradeoffPoint k_copies_point(size_t d, size_t copies) {
    if (copies == 0) {
        throw ContractViolation("k_copies_point needs at least one copy");
    }
    StabilizerCode one = planar_surface_code(d);
    TradeoffPoint p;
    p.family = "kcopies";
    p.n = copies * one.n();
    p.k = copies * one.k();
    p.d = d;
    p.d_is_exact = true;
    return p;
}

}  // namespace geocodes
