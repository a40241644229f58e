#include "cubetess/planar.hpp"

#include <stdexcept>

namespace cubetess {

Basis2 refine_square(int steps) {
  if (steps < 0) throw std::invalid_argument("refine_square: negative step count");
  Basis2 b{1, 0, 1, 0};
  for (int n = 0; n < steps; ++n) {
    // e1' = (e1 + e2)/2, e2' = (-e1 + e2)/2
    Rat g11 = (b.g11 + b.g12 * 2 + b.g22) / 4;
    Rat g12 = (b.g22 - b.g11) / 4;
    Rat g22 = (b.g11 - b.g12 * 2 + b.g22) / 4;
    b.g11 = g11;
    b.g12 = g12;
    b.g22 = g22;
    // alternating +-45: left on even steps, right on odd ones
    b.rotation_deg += (n % 2 == 0) ? 45 : -45;
  }
  return b;
}

Basis2 refine_triangular(int steps) {
  if (steps < 0) throw std::invalid_argument("refine_triangular: negative step count");
  Basis2 b{1, Rat(-1, 2), 1, 0};
  for (int n = 0; n < steps; ++n) {
    // e1' = (2 e1 + e2)/3, e2' = (-e1 + e2)/3
    Rat g11 = (b.g11 * 4 + b.g12 * 4 + b.g22) / 9;
    Rat g12 = (b.g11 * -2 + b.g12 + b.g22) / 9;
    Rat g22 = (b.g11 - b.g12 * 2 + b.g22) / 9;
    b.g11 = g11;
    b.g12 = g12;
    b.g22 = g22;
    b.rotation_deg = (b.rotation_deg + 30) % 60;
  }
  return b;
}

Rat triangular_k_gap2(const Basis2& basis) {
  // K = (2/3) e1 + (1/3) e2 in lattice coordinates.
  const Rat ka(2, 3), kb(1, 3);
  auto dist2 = [&](const Rat& a, const Rat& b) {
    return a * a * basis.g11 + a * b * basis.g12 * 2 + b * b * basis.g22;
  };
  bool first = true;
  Rat best;
  for (int i = -2; i <= 2; ++i)
    for (int j = -2; j <= 2; ++j) {
      Rat d2 = dist2(ka - i, kb - j);
      if (first || d2 < best) {
        best = d2;
        first = false;
      }
    }
  return best;
}

}  // namespace cubetess
