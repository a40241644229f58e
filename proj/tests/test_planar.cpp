#include "doctest.h"

#include "cubetess/planar.hpp"

using namespace cubetess;

TEST_CASE("square refinement: squared constant halves, rotation alternates") {
  Basis2 b0 = refine_square(0);
  CHECK(b0.len2() == Rat(1));
  CHECK(b0.g12 == Rat(0));
  CHECK(b0.area2() == Rat(1));
  CHECK(b0.rotation_deg == 0);

  Basis2 b1 = refine_square(1);
  CHECK(b1.len2() == Rat(1, 2));
  CHECK(b1.rotation_deg == 45);
  CHECK(b1.g12 == Rat(0));
  CHECK(b1.area2() == Rat(1, 4));  // cell area 1/2

  Basis2 b2 = refine_square(2);
  CHECK(b2.len2() == Rat(1, 4));
  CHECK(b2.rotation_deg == 0);  // the two 45-degree turns cancel

  Rat want(1);
  for (int n = 0; n <= 8; ++n) {
    Basis2 b = refine_square(n);
    CHECK(b.len2() == want);
    CHECK(b.g22 == want);
    CHECK(b.g12 == Rat(0));
    CHECK(b.area2() == want * want);
    want /= 2;
  }
}

TEST_CASE("triangular refinement: squared constant thirds, rotation steps 30") {
  Basis2 b0 = refine_triangular(0);
  CHECK(b0.len2() == Rat(1));
  CHECK(b0.g12 == Rat(-1, 2));
  CHECK(b0.area2() == Rat(3, 4));
  CHECK(b0.rotation_deg == 0);

  Basis2 b1 = refine_triangular(1);
  CHECK(b1.len2() == Rat(1, 3));
  CHECK(b1.rotation_deg == 30);
  // the refined basis keeps the 120-degree shape: g12 = -len2/2
  CHECK(b1.g12 == Rat(-1, 6));

  Rat want(1);
  for (int n = 0; n <= 8; ++n) {
    Basis2 b = refine_triangular(n);
    CHECK(b.len2() == want);
    CHECK(b.g22 == want);
    CHECK(b.g12 * -2 == want);
    CHECK(b.rotation_deg == (n % 2) * 30);
    // area ratio per step is 1/3: area2 scales by 1/9
    CHECK(b.area2() == want * want * Rat(3, 4));
    want /= 3;
  }
}

TEST_CASE("density doubles per square step and triples per triangular step") {
  // points per original unit cell = original cell area / refined cell area;
  // with rational area^2 this is the square root of the area2 ratio
  for (int n = 1; n <= 6; ++n) {
    Rat sq_ratio = refine_square(n - 1).area2() / refine_square(n).area2();
    CHECK(sq_ratio == Rat(4));  // area halves, so density doubles
    Rat tr_ratio = refine_triangular(n - 1).area2() / refine_triangular(n).area2();
    CHECK(tr_ratio == Rat(9));  // area thirds, so density triples
  }
}

TEST_CASE("K point of the triangular grid is 1/3 (squared) from its three nearest sites") {
  CHECK(triangular_k_gap2(refine_triangular(0)) == Rat(1, 3));
  // scale covariance: on the once-refined basis the gap shrinks by 1/3
  CHECK(triangular_k_gap2(refine_triangular(1)) == Rat(1, 9));
}

TEST_CASE("all stored quantities remain rational (Gram bookkeeping)") {
  for (int n = 0; n <= 10; ++n) {
    Basis2 s = refine_square(n);
    Basis2 t = refine_triangular(n);
    CHECK(s.g11.den() > 0);
    CHECK(t.g11.den() > 0);
    CHECK(s.area2() > Rat(0));
    CHECK(t.area2() > Rat(0));
  }
}
