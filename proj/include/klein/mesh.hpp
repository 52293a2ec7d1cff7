#pragma once

// Triangulated fundamental domains of free torus quotients, written as an
// OBJ file plus a JSON sidecar describing how the boundary edges glue.

#include <array>
#include <string>
#include <vector>

#include "json.hpp"

#include "klein/topology.hpp"

namespace klein {

/// A parallelogram origin + s u + r v, s, r in [0, 1], in the universal cover
/// of the torus. The sides s = 0 and s = 1 are glued by `side_map` (with
/// r -> 1 - r when `u_sides_reversed`); r = 0 and r = 1 by translation by v.
struct FundamentalDomain {
    TorusPoint origin;
    TorusPoint edge_u;
    TorusPoint edge_v;
    SurfaceType type = SurfaceType::torus;
    bool u_sides_reversed = false;
    std::string side_map;
};

/// Throws PreconditionError("not a free action") for a non-free group.
FundamentalDomain fundamental_domain(const DeckGroup& g);

struct Mesh {
    std::vector<std::array<double, 3>> vertices;
    /// Per-vertex colours, empty unless an immersion was requested.
    std::vector<std::array<double, 3>> colors;
    /// Zero-based vertex indices.
    std::vector<std::array<std::size_t, 3>> faces;
    nlohmann::json gluing;
};

/// (resolution + 1)^2 vertices and 2 resolution^2 triangles. With
/// `immersion`, vertices are placed on the figure-eight Klein bottle (or a
/// torus of revolution) and coloured by their domain coordinates; otherwise
/// they are the planar domain points (theta, phi, 0).
Mesh build_mesh(const DeckGroup& g, int resolution, bool immersion = false);

/// "v x y z [r g b]" and "f i j k" lines, 9 significant digits.
std::string obj_text(const Mesh& m);

struct MeshFiles {
    std::string geometry;
    std::string gluing;
};

/// Writes `path` and the sidecar (same stem, extension .gluing.json).
/// Throws std::runtime_error on I/O failure.
MeshFiles export_mesh(const DeckGroup& g, int resolution, const std::string& path, bool immersion = false);

}  // namespace klein
