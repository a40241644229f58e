#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cubetess/voronoi.hpp"

namespace cubetess {

/// Float mesh for external viewers. Triangles are the fan-triangulated,
/// outward-oriented faces (STL); the original polygonal faces are kept as
/// index cycles for OFF output. Cells are packed as independent vertex
/// blocks with no cross-cell deduplication.
struct FloatMesh {
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<std::uint32_t, 3>> triangles;
  std::vector<std::vector<std::uint32_t>> faces;
};

/// Rounds every vertex to the nearest double and fan-triangulates each
/// face from its first vertex (k-gon -> k-2 triangles).
FloatMesh to_float_mesh(std::span<const ConvexCell> cells);

/// ASCII OFF: "OFF", counts line "V F 0", vertices with 17 significant
/// digits, then faces as "k i1 ... ik".
void write_off(const FloatMesh& mesh, std::ostream& sink);

/// Binary little-endian STL: 80-byte zero header, uint32 triangle count,
/// then per triangle 12 float32 (unit normal, 3 vertices) and a zero
/// uint16 attribute. File size is 84 + 50 * triangles bytes.
void write_stl(const FloatMesh& mesh, std::ostream& sink);

/// Parses an ASCII OFF file as written by write_off. Vertex doubles
/// round-trip bit-identically; faces are fan-triangulated on load.
FloatMesh read_off(std::istream& source);

/// True iff every undirected triangle edge is used exactly twice, once in
/// each direction. Because cell blocks never share indices, this checks
/// every packed cell independently.
bool watertight(const FloatMesh& mesh);

}  // namespace cubetess
