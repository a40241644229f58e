#pragma once

#include <array>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubetess/lattice.hpp"
#include "cubetess/vec3.hpp"

namespace cubetess {

struct CoincidentPoints : std::runtime_error {
  CoincidentPoints() : std::runtime_error("bisector: coincident points") {}
};

struct EmptyResult : std::runtime_error {
  EmptyResult() : std::runtime_error("clip: intersection has empty interior") {}
};

/// Closed half-space n.x <= d with exact (unnormalized) normal.
struct HalfSpace {
  Vec3R n;
  Rat d;

  /// n.p - d: negative strictly inside, zero on the plane, positive outside.
  Rat eval(const Vec3R& p) const { return dot(n, p) - d; }
};

/// One bounding face: its supporting half-space plus the outward-oriented
/// cycle of vertex indices (counterclockwise seen from outside).
struct CellFace {
  HalfSpace plane;
  std::vector<int> cycle;
};

/// Exact convex polytope produced by half-space clipping around a site.
/// Every vertex satisfies every retained half-space; face vertices lie
/// exactly on their supporting plane; the generator is strictly interior.
struct ConvexCell {
  std::vector<Vec3R> vertices;
  std::vector<CellFace> faces;
  Site generator;
};

/// Vertex/edge/face counts plus the breakdown of faces by edge count.
struct FVector {
  long vertices = 0;
  long edges = 0;
  long faces = 0;
  std::map<int, int> faces_by_degree;

  bool euler_ok() const { return vertices - edges + faces == 2; }
};

/// Exact metric census of a cell: canonical vertex list, per-face sorted
/// squared edge lengths, plus float edge lengths and interior angles for
/// display (the only non-exact fields).
struct CellMetrics {
  std::vector<Vec3R> vertices;                       // lexicographically sorted
  std::vector<std::vector<Rat>> face_edge2;          // per face, sorted
  std::vector<std::vector<double>> face_edge_len;    // same order as face_edge2
  std::vector<std::vector<double>> face_angles_deg;  // interior angles, sorted
};

/// Perpendicular bisector of p and q as the half-space containing p:
/// n = q - p, d = n.(p+q)/2. Throws CoincidentPoints when p = q.
HalfSpace bisector(const Vec3R& p, const Vec3R& q);

/// Axis-aligned cube of the given half-width centered on the generator,
/// as a six-face cell. Seed for incremental clipping.
ConvexCell make_cube_cell(const Site& generator, const Rat& half_width);

/// Exact intersection of the cell with h. Vertices exactly on the cutting
/// plane are retained and deduplicated; a new face appears only when the
/// plane cuts a two-dimensional cross-section. If no vertex strictly
/// violates h the input is returned unchanged. Throws EmptyResult when the
/// intersection has empty interior.
ConvexCell clip(const ConvexCell& cell, const HalfSpace& h);

/// Clips the seed cube by the bisector to every neighbor, in the order
/// given. With sorted_by_distance, clipping stops once the next neighbor
/// is provably redundant (squared distance >= 4x the cell's squared
/// circumradius); the result is identical either way.
ConvexCell build_cell(const Site& s, std::span<const Site> neighbors,
                      bool sorted_by_distance);

/// The exact Voronoi cell of s in the plan's lattice: seed cube of
/// half-width 1, bisectors to all candidate neighbors within r2cutoff in
/// increasing-distance order. r2cutoff = 4 is already sufficient for every
/// cell of these lattices (doubling the radius reproduces the same cell).
ConvexCell voronoi_cell(const Site& s, const RefinementPlan& plan,
                        const Rat& r2cutoff = Rat(4));

/// Exact volume by the divergence theorem: each face is fan-triangulated
/// from its first vertex and each triangle contributes a sixth of the
/// scalar triple product of its vertex position vectors.
Rat volume(const ConvexCell& cell);

FVector face_census(const ConvexCell& cell);

CellMetrics cell_metrics(const ConvexCell& cell);

/// Throws std::logic_error when any cell invariant is violated: a vertex
/// outside some half-space, a face vertex off its plane, Euler characteristic
/// != 2, an edge not shared by exactly two faces in opposite directions, or
/// a generator that is not strictly interior.
void check_cell(const ConvexCell& cell);

/// Equality signature: the sorted vertex set plus each face as its sorted
/// vertex set. Two cells with equal signatures are the same polytope with
/// the same face structure.
struct CellSignature {
  std::vector<Vec3R> vertices;
  std::vector<std::vector<Vec3R>> faces;

  bool operator==(const CellSignature& o) const = default;
};

CellSignature signature(const ConvexCell& cell);

/// The 48 signed axis permutations of the cube, as functions on vectors.
/// index() applies transform t to v.
struct SignedPermutation {
  std::array<int, 3> perm;
  std::array<int, 3> sign;

  Vec3R apply(const Vec3R& v) const {
    Vec3R w;
    for (int i = 0; i < 3; ++i) w[i] = sign[i] > 0 ? v[perm[i]] : -v[perm[i]];
    return w;
  }
};

const std::array<SignedPermutation, 48>& signed_permutations();

/// Canonical congruence form: vertices translated so the generator sits at
/// the origin, the lexicographically least image over all 48 signed axis
/// permutations. Two cells are congruent under (lattice translation x cubic
/// point group) iff their canonical forms are equal.
std::vector<Vec3R> canonical_form(const ConvexCell& cell);

}  // namespace cubetess
