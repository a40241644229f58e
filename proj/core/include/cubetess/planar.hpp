#pragma once

#include "cubetess/rational.hpp"

namespace cubetess {

/// A 2-D lattice basis tracked through its exact Gram matrix (pairwise dot
/// products) plus a symbolic rotation tag. Irrational quantities such as
/// sqrt(3) never appear as stored numbers: all squared lengths stay
/// rational throughout the recurrences.
struct Basis2 {
  Rat g11, g12, g22;  // e1.e1, e1.e2, e2.e2
  int rotation_deg = 0;

  /// Squared lattice constant (squared length of the first basis vector).
  const Rat& len2() const { return g11; }
  /// Squared unit-cell area, det of the Gram matrix.
  Rat area2() const { return g11 * g22 - g12 * g12; }
};

/// n steps of square-grid refinement: e1' = (e1+e2)/2, e2' = (-e1+e2)/2.
/// Squared lattice constant (1/2)^n; rotation alternates +-45 degrees, so
/// the tag is 45 for odd n and 0 for even n; cell area (1/2)^n.
Basis2 refine_square(int steps);

/// n steps of triangular-grid refinement: e1' = (2 e1 + e2)/3,
/// e2' = (-e1 + e2)/3. Squared lattice constant (1/3)^n; rotation tag
/// n * 30 mod 60; cell area shrinks by 1/3 per step.
Basis2 refine_triangular(int steps);

/// Squared distance from the K point (circumcenter of the fundamental
/// triangle, lattice coordinates (2/3, 1/3)) to its nearest lattice sites,
/// computed purely in Gram-matrix arithmetic for the given basis.
Rat triangular_k_gap2(const Basis2& basis);

}  // namespace cubetess
