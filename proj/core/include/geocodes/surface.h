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
#include <string_view>

#include "geocodes/stabilizer.h"
#include "geocodes/tradeoff.h"

namespace geocodes {

enum class SurfaceKind { Planar, Toric };

SurfaceKind parse_surface_kind(std::string_view text);

/// Nominal parameters of a surface code layout.
///
/// Qubits sit on the edges of a square lattice and are embedded in a refined site grid of twice the
/// resolution: vertices and faces become empty sites, edges become qubit sites. Every check then
/// covers a 3 x 3 window of the refined grid.
struct SurfaceLayout {
    SurfaceKind kind = SurfaceKind::Planar;
    size_t size = 2;

    /// d^2 + (d-1)^2 for planar, 2 L^2 for toric.
    size_t num_qubits() const;
    size_t nominal_k() const;
    size_t nominal_distance() const {
        return size;
    }
    Lattice refined_lattice() const;
};

constexpr size_t kSurfaceCheckWindow = 3;

/// Unrotated planar code with two rough and two smooth boundaries. Throws ContractViolation for d < 2.
StabilizerCode planar_surface_code(size_t d);
/// Toric code on an L x L periodic lattice. Throws ContractViolation for L < 2.
StabilizerCode toric_code(size_t L);
StabilizerCode surface_code(const SurfaceLayout &layout);

/// k side-by-side planar codes of distance d.
TradeoffPoint k_copies_point(size_t d, size_t copies);

}  // namespace geocodes
